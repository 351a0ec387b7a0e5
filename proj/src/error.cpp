#include "pba/error.hpp"

namespace pba {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NegativeConstant: return "NegativeConstant";
    case ErrorKind::UnitAxiomFailed: return "UnitAxiomFailed";
    case ErrorKind::AssociativityFailed: return "AssociativityFailed";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::RankCapExceeded: return "RankCapExceeded";
    case ErrorKind::UnknownCellId: return "UnknownCellId";
    case ErrorKind::NotMonoidBacked: return "NotMonoidBacked";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotIdempotentCell: return "NotIdempotentCell";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorKind::NotPositiveMatrix: return "NotPositiveMatrix";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::PositivityViolation: return "PositivityViolation";
    case ErrorKind::NegativeSpecialization: return "NegativeSpecialization";
    case ErrorKind::NotPerronFrobenius: return "NotPerronFrobenius";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::PositivityFailure: return "PositivityFailure";
    case ErrorKind::ZeroQuotient: return "ZeroQuotient";
    case ErrorKind::NoMaximum: return "NoMaximum";
    case ErrorKind::NotIdempotentApex: return "NotIdempotentApex";
    case ErrorKind::CSampleDisagreement: return "CSampleDisagreement";
    case ErrorKind::DuplicateSpecialAcrossCells:
      return "DuplicateSpecialAcrossCells";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
  }
  return "UnknownError";
}

bool is_invariant_violation(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PositivityViolation:
    case ErrorKind::NegativeSpecialization:
    case ErrorKind::NotPerronFrobenius:
    case ErrorKind::NoWitness:
    case ErrorKind::PositivityFailure:
    case ErrorKind::ZeroQuotient:
    case ErrorKind::NoMaximum:
    case ErrorKind::NotIdempotentApex:
    case ErrorKind::CSampleDisagreement:
    case ErrorKind::DuplicateSpecialAcrossCells:
    case ErrorKind::InvariantViolated:
      return true;
    default:
      return false;
  }
}

}  // namespace pba
