#include "simdim/error.hpp"

namespace simdim {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::LabelCollision: return "LabelCollision";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UniverseTooSmall: return "UniverseTooSmall";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::NotInStabilizer: return "NotInStabilizer";
    case ErrorKind::FreeEdgeOutsideComplement: return "FreeEdgeOutsideComplement";
    case ErrorKind::NotAnAdjacencyBasis: return "NotAnAdjacencyBasis";
    case ErrorKind::EdgeOutsideEPrime: return "EdgeOutsideEPrime";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OracleLimitExceeded: return "OracleLimitExceeded";
    case ErrorKind::EmptyCatalog: return "EmptyCatalog";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
  }
  return "Unknown";
}

}  // namespace simdim
