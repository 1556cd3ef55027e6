#include "brouwer/core/error.hpp"

namespace brouwer {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::CyclicOrder: return "CyclicOrder";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::FreshNotFresh: return "FreshNotFresh";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotSubalgebra: return "NotSubalgebra";
    case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorKind::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorKind::MemberOutsideAmbient: return "MemberOutsideAmbient";
    case ErrorKind::AntichainViolated: return "AntichainViolated";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::EmptyColumns: return "EmptyColumns";
    case ErrorKind::EBelowBViolation: return "EBelowBViolation";
    case ErrorKind::ENotInAmbientComplement: return "ENotInAmbientComplement";
  }
  return "Unknown";
}

}  // namespace brouwer
