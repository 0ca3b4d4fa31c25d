#ifndef SEMIBOUND_RATIONAL_HPP_
#define SEMIBOUND_RATIONAL_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace semibound {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  // Parses "a", "-a", "a/b" or "-a/b" with decimal digits only. The result is
  // canonical (lowest terms, positive denominator). Throws Error(parse) on
  // malformed input or a zero denominator.
  Rational parse_rational(std::string_view text);

  // "a" when the denominator is 1, otherwise "a/b".
  std::string to_string(Rational const& q);
  std::string to_string(Integer const& z);

  std::size_t hash_value(Integer const& z) noexcept;
  std::size_t hash_value(Rational const& q) noexcept;

  inline bool is_integral(Rational const& q) {
    return q.get_den() == 1;
  }

  // Least non-negative residue of z modulo m (m > 0).
  unsigned long residue(Integer const& z, unsigned long m);

  bool is_prime(unsigned long p) noexcept;

  inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }

}  // namespace semibound

#endif  // SEMIBOUND_RATIONAL_HPP_
