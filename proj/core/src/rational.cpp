#include "semibound/rational.hpp"

#include <cctype>
#include <functional>

#include "semibound/error.hpp"

namespace semibound {

  namespace {
    bool all_digits(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool             negative = false;
    if (!body.empty() && body.front() == '-') {
      negative = true;
      body.remove_prefix(1);
    }
    auto             slash = body.find('/');
    std::string_view num   = body.substr(0, slash);
    std::string_view den
        = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorKind::parse,
                  "malformed rational literal \"" + std::string(text) + "\"");
    }
    Integer d(std::string(den), 10);
    if (d == 0) {
      throw Error(ErrorKind::parse,
                  "zero denominator in \"" + std::string(text) + "\"");
    }
    Rational q(Integer(std::string(num), 10), d);
    q.canonicalize();
    if (negative) {
      q = -q;
    }
    return q;
  }

  std::string to_string(Rational const& q) {
    if (q.get_den() == 1) {
      return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  std::string to_string(Integer const& z) {
    return z.get_str();
  }

  std::size_t hash_value(Integer const& z) noexcept {
    mpz_srcptr  raw  = z.get_mpz_t();
    std::size_t seed = static_cast<std::size_t>(mpz_sgn(raw) + 1);
    std::size_t size = mpz_size(raw);
    for (std::size_t i = 0; i < size; ++i) {
      hash_combine(seed, std::hash<mp_limb_t>{}(mpz_getlimbn(raw, i)));
    }
    return seed;
  }

  std::size_t hash_value(Rational const& q) noexcept {
    std::size_t seed = hash_value(q.get_num());
    hash_combine(seed, hash_value(q.get_den()));
    return seed;
  }

  unsigned long residue(Integer const& z, unsigned long m) {
    return mpz_fdiv_ui(z.get_mpz_t(), m);
  }

  bool is_prime(unsigned long p) noexcept {
    if (p < 2) {
      return false;
    }
    for (unsigned long d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace semibound
