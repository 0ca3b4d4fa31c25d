#ifndef SEMIBOUND_ERROR_HPP_
#define SEMIBOUND_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace semibound {

  enum class ErrorKind {
    cap_exceeded,
    dimension_mismatch,
    not_prime,
    not_idempotent,
    no_zero,
    zero_vector,
    dependent_basis,
    not_homomorphism,
    not_ggm,
    not_same_j_class,
    not_invertible,
    internal_contradiction,
    parse
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every recoverable failure in the library is reported through this one
  // exception type; callers dispatch on kind().
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace semibound

#endif  // SEMIBOUND_ERROR_HPP_
