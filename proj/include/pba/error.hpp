#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pba {

/// Every failure the library raises carries one of these codes.
enum class ErrorKind {
  // bad input
  DimensionMismatch,
  IndexOutOfRange,
  ParseError,
  NegativeConstant,
  UnitAxiomFailed,
  AssociativityFailed,
  NotAssociative,
  NoIdentity,
  NotAGroup,
  NotASubgroup,
  SizeCapExceeded,
  NotFiniteType,
  RankCapExceeded,
  UnknownCellId,
  NotMonoidBacked,
  NotIdempotent,
  NotIdempotentCell,
  NotTransitive,
  NonPositiveCoefficient,
  NotPositiveMatrix,
  ZeroVector,
  PreconditionViolated,
  InvalidConfig,
  NoConvergence,
  // internal-consistency failures: a theorem the code relies on did not hold
  PositivityViolation,
  NegativeSpecialization,
  NotPerronFrobenius,
  NoWitness,
  PositivityFailure,
  ZeroQuotient,
  NoMaximum,
  NotIdempotentApex,
  CSampleDisagreement,
  DuplicateSpecialAcrossCells,
  InvariantViolated,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds that signal a violated mathematical invariant rather than
/// bad input. The CLI maps these to exit status 2.
bool is_invariant_violation(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pba
