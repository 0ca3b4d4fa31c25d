#include "semibound/error.hpp"

namespace semibound {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::cap_exceeded:
        return "CapExceeded";
      case ErrorKind::dimension_mismatch:
        return "DimensionMismatch";
      case ErrorKind::not_prime:
        return "NotPrime";
      case ErrorKind::not_idempotent:
        return "NotIdempotent";
      case ErrorKind::no_zero:
        return "NoZero";
      case ErrorKind::zero_vector:
        return "ZeroVector";
      case ErrorKind::dependent_basis:
        return "DependentBasis";
      case ErrorKind::not_homomorphism:
        return "NotHomomorphism";
      case ErrorKind::not_ggm:
        return "NotGGM";
      case ErrorKind::not_same_j_class:
        return "NotSameJClass";
      case ErrorKind::not_invertible:
        return "NotInvertible";
      case ErrorKind::internal_contradiction:
        return "InternalContradiction";
      case ErrorKind::parse:
        return "ParseError";
    }
    return "Unknown";
  }

}  // namespace semibound
