#include "semibound/polynomial.hpp"

#include <utility>

namespace semibound {

  namespace {
    void trim(Polynomial& f) {
      while (!f.empty() && f.back() == 0) {
        f.pop_back();
      }
    }

    Polynomial x_pow_minus_one(std::size_t m) {
      Polynomial f(m + 1, Rational(0));
      f[0] = -1;
      f[m] = 1;
      return f;
    }
  }  // namespace

  std::size_t degree(Polynomial const& f) {
    return f.empty() ? 0 : f.size() - 1;
  }

  Polynomial characteristic_polynomial(QMatrix const& a) {
    if (!a.is_square()) {
      throw Error(ErrorKind::dimension_mismatch, "characteristic polynomial of a non-square matrix");
    }
    std::size_t const n = a.rows();
    Polynomial        c(n + 1, Rational(0));
    c[n]                = 1;
    QMatrix         m   = QMatrix::zero(n);
    QMatrix const   id  = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
      m           = a * m + c[n - k + 1] * id;
      QMatrix am  = a * m;
      Rational tr = 0;
      for (std::size_t i = 0; i < n; ++i) {
        tr += am(i, i);
      }
      c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
  }

  std::optional<Polynomial> divide_exact(Polynomial const& f, Polynomial const& g) {
    if (g.empty()) {
      return std::nullopt;
    }
    if (f.empty()) {
      return Polynomial{};
    }
    if (f.size() < g.size()) {
      return std::nullopt;
    }
    Polynomial rem = f;
    Polynomial q(f.size() - g.size() + 1, Rational(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      Rational coeff = rem[k + g.size() - 1] / g.back();
      q[k]           = coeff;
      if (coeff == 0) {
        continue;
      }
      for (std::size_t j = 0; j < g.size(); ++j) {
        rem[k + j] -= coeff * g[j];
      }
    }
    trim(rem);
    if (!rem.empty()) {
      return std::nullopt;
    }
    trim(q);
    return q;
  }

  Polynomial cyclotomic(std::size_t m) {
    // x^m - 1 = prod_{d | m} Phi_d
    Polynomial f = x_pow_minus_one(m);
    for (std::size_t d = 1; d < m; ++d) {
      if (m % d == 0) {
        f = *divide_exact(f, cyclotomic(d));
      }
    }
    return f;
  }

  QMatrix evaluate(Polynomial const& f, QMatrix const& m) {
    std::size_t const n   = m.rows();
    QMatrix           acc = QMatrix::zero(n);
    QMatrix const     id  = QMatrix::identity(n);
    for (std::size_t k = f.size(); k-- > 0;) {
      acc = m * acc + f[k] * id;
    }
    return acc;
  }

  std::optional<std::vector<std::pair<Polynomial, std::size_t>>>
  cyclotomic_factorization(Polynomial f) {
    trim(f);
    if (f.empty()) {
      return std::nullopt;
    }
    std::vector<std::pair<Polynomial, std::size_t>> factors;
    std::size_t                                     zeros = 0;
    while (f.size() > 1 && f.front() == 0) {
      f.erase(f.begin());
      ++zeros;
    }
    if (zeros > 0) {
      factors.emplace_back(Polynomial{Rational(0), Rational(1)}, zeros);
    }
    // deg Phi_m = phi(m) >= sqrt(m / 2), so m <= 2 deg(f)^2 suffices.
    std::size_t const limit = 2 * degree(f) * degree(f) + 2;
    for (std::size_t m = 1; m <= limit && degree(f) > 0; ++m) {
      Polynomial  phi   = cyclotomic(m);
      std::size_t times = 0;
      while (degree(f) >= degree(phi)) {
        auto q = divide_exact(f, phi);
        if (!q) {
          break;
        }
        f = std::move(*q);
        ++times;
      }
      if (times > 0) {
        factors.emplace_back(std::move(phi), times);
      }
    }
    if (degree(f) != 0) {
      return std::nullopt;
    }
    return factors;
  }

}  // namespace semibound
