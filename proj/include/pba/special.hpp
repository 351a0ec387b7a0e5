#pragma once

// Apexes, special subquotients of cell modules and of transitive modules,
// the classification of special modules by idempotent two-sided cells, and
// the predicates checked by the verification battery.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pba/based_modules.hpp"
#include "pba/config.hpp"
#include "pba/spectral.hpp"
#include "pba/structure.hpp"

namespace pba {

/// Everything derived once per algebra: cells, radical, trace form, settings.
class CellAnalysis {
 public:
  explicit CellAnalysis(PBAlgebra alg, RunConfig config = {});

  const PBAlgebra& algebra() const noexcept { return alg_; }
  const CellDecomposition& cells() const noexcept { return cd_; }
  const Radical& radical() const noexcept { return rad_; }
  const RationalMatrix& trace_form() const noexcept { return gram_; }
  const RunConfig& config() const noexcept { return config_; }
  const Tolerances& tol() const noexcept { return config_.tol; }
  bool semisimple() const noexcept { return rad_.dim() == 0; }

 private:
  PBAlgebra alg_;
  RunConfig config_;
  CellDecomposition cd_;
  Radical rad_;
  RationalMatrix gram_;
};

/// The all-ones vector followed by count - 1 fixed-seed vectors with entries
/// p/q, 1 <= p, q <= 100, p/q in [1/10, 10].
std::vector<RationalVector> default_c_samples(std::size_t n, std::size_t count, std::uint64_t seed);

/// Two-sided cells J such that some a_i, i in J, acts nonzero on m.
std::vector<std::size_t> acting_cells(const CellAnalysis& ctx, const BasedModule& m);

/// The <=_J-maximum of acting_cells, checked to be unique and idempotent and
/// to have every a_i with i <=_J apex acting nonzero. Requires m transitive.
std::size_t apex(const CellAnalysis& ctx, const BasedModule& m);

/// Data of the special subquotient for one c-vector.
struct SampleResult {
  RationalVector c;
  PFData pf;
  ModuleTop top;
  double top_eigenvalue_error = 0.0;  // distance from lambda to the spectrum of a(c) on the top
};

struct SpecialReport {
  std::string source;
  std::optional<std::size_t> left_cell;
  std::size_t apex = 0;
  double lambda = 0.0;  // from the first sample
  SimpleCharacter character;
  std::size_t dim = 0;
  std::vector<SampleResult> samples;
  double sample_spread = 0.0;  // largest pairwise character distance
  bool kernel_cone_ok = true;  // K_L meets the positive cone only in 0 (first sample)
  bool kernel_cone_exact = false;
};

/// Runs the pipeline a(c) -> PF vector -> V = A v -> top on every sample and
/// requires all characters to agree (CSampleDisagreement).
SpecialReport special_of_module(const CellAnalysis& ctx, const BasedModule& m,
                                const std::vector<RationalVector>& samples, std::string source);

SpecialReport special_of_cell(const CellAnalysis& ctx, std::size_t left_cell,
                              const std::vector<RationalVector>& samples);
SpecialReport special_of_cell(const CellAnalysis& ctx, std::size_t left_cell);

/// For a transitive module; also checks agreement with the special module of
/// the representative left cell of its apex.
SpecialReport special_of_transitive(const CellAnalysis& ctx, const BasedModule& m,
                                    const std::vector<RationalVector>& samples);
SpecialReport special_of_transitive(const CellAnalysis& ctx, const BasedModule& m);

/// Among the <=_L-maximal left cells of J, the one with the smallest member.
std::size_t representative_left_cell(const CellAnalysis& ctx, std::size_t two_sided_cell);

struct ClassifiedSpecial {
  std::size_t two_sided_cell;
  std::size_t left_cell;
  SpecialReport report;
};

/// One entry per idempotent two-sided cell, in id order. Characters must be
/// pairwise distinct (DuplicateSpecialAcrossCells).
std::vector<ClassifiedSpecial> classify_specials(const CellAnalysis& ctx);

/// All left cells of I give equal special characters and equal apexes.
bool j_invariance_check(const CellAnalysis& ctx, std::size_t two_sided_cell);

enum class IncomparabilityStatus { Holds, Fails, HypothesisFails };

/// If every a_i with i not <=_J J(I) annihilates M(I), checks that the left
/// cells of I are pairwise incomparable.
IncomparabilityStatus incomparability_check(const CellAnalysis& ctx, std::size_t two_sided_cell);

/// The cell idempotent of J(L), as a witness a with a^2 = a.
IdempotentData good_cell_check(const CellAnalysis& ctx, std::size_t left_cell);

/// Number of basis indices i for which "a_i acts nonzero on the top" differs
/// from "i <=_J apex".
std::size_t nonzero_pattern_violations(const CellAnalysis& ctx, const SpecialReport& report);

}  // namespace pba
