#include "semibound/linalg.hpp"

#include <utility>

namespace semibound {

  RowReduction rref(QMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t              row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      std::size_t p = row;
      while (p < m.rows() && m(p, col) == 0) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      if (p != row) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          std::swap(m(p, j), m(row, j));
        }
      }
      Rational inv = 1 / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(row, j) *= inv;
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == row || m(i, col) == 0) {
          continue;
        }
        Rational factor = m(i, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
          m(i, j) -= factor * m(row, j);
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank(QMatrix const& m) {
    return rref(m).pivots.size();
  }

  std::vector<QVector> nullspace(QMatrix const& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) {
      is_pivot[c] = true;
    }
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) {
        continue;
      }
      QVector v(m.cols(), Rational(0));
      v[free] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        v[pivots[i]] = -r(i, free);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::optional<QVector> solve_linear(QMatrix const& a, QVector const& b) {
    if (b.size() != a.rows()) {
      throw Error(ErrorKind::dimension_mismatch, "right-hand side length");
    }
    QMatrix augmented(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        augmented(i, j) = a(i, j);
      }
      augmented(i, a.cols()) = b[i];
    }
    auto [r, pivots] = rref(std::move(augmented));
    if (!pivots.empty() && pivots.back() == a.cols()) {
      return std::nullopt;
    }
    QVector c(a.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      c[pivots[i]] = r(i, a.cols());
    }
    return c;
  }

  std::optional<QMatrix> inverse(QMatrix const& m) {
    if (!m.is_square()) {
      throw Error(ErrorKind::dimension_mismatch, "inverse of a non-square matrix");
    }
    std::size_t const n = m.rows();
    QMatrix           augmented(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        augmented(i, j) = m(i, j);
      }
      augmented(i, n + i) = 1;
    }
    auto [r, pivots] = rref(std::move(augmented));
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
      return std::nullopt;
    }
    return r.block(0, n, n, n);
  }

  Integer determinant(ZMatrix const& m) {
    if (!m.is_square()) {
      throw Error(ErrorKind::dimension_mismatch, "determinant of a non-square matrix");
    }
    std::size_t const n = m.rows();
    if (n == 0) {
      return 1;
    }
    ZMatrix a    = m;
    Integer prev = 1;
    int     sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && a(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(p, j), a(k, j));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          // Exact by Sylvester's identity.
          Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
          mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        a(i, k) = 0;
      }
      prev = a(k, k);
    }
    Integer det = a(n - 1, n - 1);
    return sign > 0 ? det : Integer(-det);
  }

  bool is_unimodular(ZMatrix const& u) {
    if (!u.is_square()) {
      return false;
    }
    Integer d = determinant(u);
    return d == 1 || d == -1;
  }

  FpMatrix mod_p_reduce(ZMatrix const& m, unsigned long p) {
    if (!m.is_square()) {
      throw Error(ErrorKind::dimension_mismatch, "mod-p reduction of a non-square matrix");
    }
    FpMatrix r(m.rows(), p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        r.set(i, j, residue(m(i, j), p));
      }
    }
    return r;
  }

  QVector EchelonBasis::reduce(QVector v) const {
    for (std::size_t r = 0; r < _rows.size(); ++r) {
      std::size_t const c = _pivots[r];
      if (v[c] == 0) {
        continue;
      }
      Rational factor = v[c];
      for (std::size_t j = c; j < _ambient; ++j) {
        v[j] -= factor * _rows[r][j];
      }
    }
    return v;
  }

  bool EchelonBasis::contains(QVector const& v) const {
    if (v.size() != _ambient) {
      throw Error(ErrorKind::dimension_mismatch, "vector length");
    }
    QVector w = reduce(v);
    for (auto const& x : w) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  bool EchelonBasis::insert(QVector const& v) {
    if (v.size() != _ambient) {
      throw Error(ErrorKind::dimension_mismatch, "vector length");
    }
    QVector     w = reduce(v);
    std::size_t c = 0;
    while (c < _ambient && w[c] == 0) {
      ++c;
    }
    if (c == _ambient) {
      return false;
    }
    Rational inv = 1 / w[c];
    for (std::size_t j = c; j < _ambient; ++j) {
      w[j] *= inv;
    }
    // Keep the basis fully reduced so it stays canonical.
    for (auto& row : _rows) {
      if (row[c] == 0) {
        continue;
      }
      Rational factor = row[c];
      for (std::size_t j = c; j < _ambient; ++j) {
        row[j] -= factor * w[j];
      }
    }
    auto pos = std::size_t(0);
    while (pos < _pivots.size() && _pivots[pos] < c) {
      ++pos;
    }
    _rows.insert(_rows.begin() + pos, std::move(w));
    _pivots.insert(_pivots.begin() + pos, c);
    return true;
  }

}  // namespace semibound
