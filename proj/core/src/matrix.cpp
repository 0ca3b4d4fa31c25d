#include "semibound/matrix.hpp"

#include <sstream>

namespace semibound {

  QMatrix to_rational(ZMatrix const& m) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        q(i, j) = Rational(m(i, j));
      }
    }
    return q;
  }

  QVector to_rational(ZVector const& v) {
    return QVector(v.begin(), v.end());
  }

  std::optional<ZMatrix> to_integer(QMatrix const& m) {
    ZMatrix z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!is_integral(m(i, j))) {
          return std::nullopt;
        }
        z(i, j) = m(i, j).get_num();
      }
    }
    return z;
  }

  namespace {
    template <typename M, typename F>
    std::string format(M const& m, F&& entry) {
      std::ostringstream out;
      out << '[';
      for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i == 0 ? "[" : ", [");
        for (std::size_t j = 0; j < m.cols(); ++j) {
          out << (j == 0 ? "" : ", ") << entry(i, j);
        }
        out << ']';
      }
      out << ']';
      return out.str();
    }
  }  // namespace

  std::string to_string(QMatrix const& m) {
    return format(m, [&m](std::size_t i, std::size_t j) {
      return to_string(m(i, j));
    });
  }

  std::string to_string(ZMatrix const& m) {
    return format(m, [&m](std::size_t i, std::size_t j) {
      return to_string(m(i, j));
    });
  }

  FpMatrix::FpMatrix(std::size_t n, unsigned long p)
      : _n(n), _p(p), _data(n * n, 0) {
    if (!is_prime(p)) {
      throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
    }
  }

  bool FpMatrix::is_zero() const noexcept {
    for (auto x : _data) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  bool FpMatrix::is_identity() const noexcept {
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        if ((*this)(i, j) != (i == j ? 1u : 0u)) {
          return false;
        }
      }
    }
    return true;
  }

  FpMatrix operator*(FpMatrix const& a, FpMatrix const& b) {
    if (a._n != b._n || a._p != b._p) {
      throw Error(ErrorKind::dimension_mismatch,
                  "product of matrices over different rings");
    }
    FpMatrix c(a._n, a._p);
    for (std::size_t i = 0; i < a._n; ++i) {
      for (std::size_t j = 0; j < a._n; ++j) {
        unsigned long long acc = 0;
        for (std::size_t k = 0; k < a._n; ++k) {
          acc = (acc + static_cast<unsigned long long>(a(i, k)) * b(k, j)) % a._p;
        }
        c._data[i * a._n + j] = static_cast<unsigned long>(acc);
      }
    }
    return c;
  }

  std::size_t FpMatrix::hash() const noexcept {
    std::size_t seed = _n * 131 + _p;
    for (auto x : _data) {
      hash_combine(seed, x);
    }
    return seed;
  }

  std::string to_string(FpMatrix const& m) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < m.dim(); ++i) {
      out << (i == 0 ? "[" : ", [");
      for (std::size_t j = 0; j < m.dim(); ++j) {
        out << (j == 0 ? "" : ", ") << m(i, j);
      }
      out << ']';
    }
    out << ']';
    return out.str();
  }

}  // namespace semibound
