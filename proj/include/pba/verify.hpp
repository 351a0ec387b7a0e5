#pragma once
// The invariant battery behind `verify`: exact structural checks followed by
// the numerical checks on cell modules, specials, idempotents and cells.

#include <string>
#include <vector>

#include "pba/special.hpp"

namespace pba {

struct Check {
  std::string name;
  bool passed = true;
  bool skipped = false;  // a hypothesis did not hold; nothing was asserted
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool ok() const;
  std::size_t failures() const;
};

/// Exact checks only: validation, closure of M_L and N_L, module axioms and
/// transitivity of every cell module. Needs no floating point.
std::vector<Check> exactness_checks(const PBAlgebra& alg, const CellDecomposition& cd,
                                    const Caps& caps = {});

/// The full battery. Internal errors inside a check are reported as failures
/// of that check rather than thrown.
VerifyReport verify(const CellAnalysis& ctx);

}  // namespace pba
