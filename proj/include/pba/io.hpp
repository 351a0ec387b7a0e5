#pragma once
// JSON documents read and written by the command-line tool. The writer is
// deterministic: object keys keep insertion order, floats use 17 significant
// digits, and rationals are written as "p/q" strings.

#include <string>

#include "json.hpp"
#include "pba/config.hpp"
#include "pba/constructors.hpp"
#include "pba/kl_hecke.hpp"
#include "pba/verify.hpp"

namespace pba::io {

using Json = nlohmann::ordered_json;

/// Always "p/q" with q >= 1, so integers read "n/1".
std::string rational_string(const Rational& q);

/// Serialises with two-space indentation and a trailing newline.
std::string dump(const Json& doc);

/// Reads a whole file as JSON; ParseError on failure.
Json read_file(const std::string& path);

Json to_json(const PBAlgebra& alg);
PBAlgebra algebra_from_json(const Json& doc);

Json to_json(const BasedModule& m);
BasedModule module_from_json(const Json& doc);

/// {"labels": [...] (optional), "table": [[...], ...]}
CayleyTable cayley_from_json(const Json& doc);
/// {"generators": [[images...], ...]} with 0-based images.
std::vector<Transformation> transformations_from_json(const Json& doc);
/// {"cartan": [[...], ...]} or a bare matrix.
IntMatrix cartan_from_json(const Json& doc);

/// Merges the keys present in doc into config; InvalidConfig on unknown keys
/// or out-of-range values.
void apply_config(const Json& doc, RunConfig& config);
/// Throws InvalidConfig unless every tolerance is positive and every cap is at least 1.
void check_config(const RunConfig& config);

Json to_json(const ValidationReport& report);
Json to_json(const PBAlgebra& alg, const CellDecomposition& cd);
Json to_json(const PFData& pf, bool with_projector);
Json to_json(const IdempotentData& e, const PBAlgebra& alg);
Json to_json(const Radical& rad);
Json to_json(const ModuleTop& top);
Json to_json(const SpecialReport& report);
Json to_json(const ClassifiedSpecial& entry);
Json to_json(const VerifyReport& report);

Json to_json(const Vector<double>& v);
Json to_json(const Matrix<double>& m);
Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);

}  // namespace pba::io
