#ifndef SEMIBOUND_MATRIX_HPP_
#define SEMIBOUND_MATRIX_HPP_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semibound/error.hpp"
#include "semibound/rational.hpp"

namespace semibound {

  // Dense row-major matrix over an exact ring. Semigroup elements are square,
  // but the linear-algebra routines also need rectangular coefficient
  // matrices, so the shape is not fixed.
  template <typename Scalar>
  class Matrix {
   public:
    using scalar_type = Scalar;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, Scalar(0)) {}

    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
        : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
      _data.reserve(_rows * _cols);
      for (auto const& row : rows) {
        if (row.size() != _cols) {
          throw Error(ErrorKind::dimension_mismatch, "ragged matrix literal");
        }
        for (auto const& x : row) {
          _data.push_back(x);
        }
      }
    }

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    static Matrix zero(std::size_t n) {
      return Matrix(n, n);
    }

    // Builds the matrix whose j-th column is columns[j].
    static Matrix from_columns(std::size_t rows,
                               std::span<std::vector<Scalar> const> columns) {
      Matrix m(rows, columns.size());
      for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) {
          throw Error(ErrorKind::dimension_mismatch, "column length");
        }
        for (std::size_t i = 0; i < rows; ++i) {
          m(i, j) = columns[j][i];
        }
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }
    // Dimension of a square matrix.
    std::size_t dim() const noexcept {
      return _rows;
    }

    Scalar& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Scalar const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    std::span<Scalar const> entries() const noexcept {
      return _data;
    }

    std::vector<Scalar> column(std::size_t j) const {
      std::vector<Scalar> c(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        c[i] = (*this)(i, j);
      }
      return c;
    }

    std::vector<Scalar> row(std::size_t i) const {
      return std::vector<Scalar>(_data.begin() + i * _cols,
                                 _data.begin() + (i + 1) * _cols);
    }

    bool is_zero() const {
      for (auto const& x : _data) {
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

    Matrix transpose() const {
      Matrix t(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    // Row-major flattening, the coordinate vector used when matrices are
    // treated as points of Q^{n*n}.
    std::vector<Scalar> flatten() const {
      return _data;
    }

    Matrix block(std::size_t row0,
                 std::size_t col0,
                 std::size_t nrows,
                 std::size_t ncols) const {
      Matrix b(nrows, ncols);
      for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) {
          b(i, j) = (*this)(row0 + i, col0 + j);
        }
      }
      return b;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      if (a._cols != b._rows) {
        throw Error(ErrorKind::dimension_mismatch, "matrix product");
      }
      Matrix c(a._rows, b._cols);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          Scalar const& aik = a(i, k);
          if (aik == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            c(i, j) += aik * b(k, j);
          }
        }
      }
      return c;
    }

    friend std::vector<Scalar> operator*(Matrix const&              a,
                                         std::vector<Scalar> const& v) {
      if (a._cols != v.size()) {
        throw Error(ErrorKind::dimension_mismatch, "matrix-vector product");
      }
      std::vector<Scalar> w(a._rows, Scalar(0));
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          if (v[k] != 0) {
            w[i] += a(i, k) * v[k];
          }
        }
      }
      return w;
    }

    friend Matrix operator+(Matrix a, Matrix const& b) {
      a.check_same_shape(b);
      for (std::size_t i = 0; i < a._data.size(); ++i) {
        a._data[i] += b._data[i];
      }
      return a;
    }

    friend Matrix operator-(Matrix a, Matrix const& b) {
      a.check_same_shape(b);
      for (std::size_t i = 0; i < a._data.size(); ++i) {
        a._data[i] -= b._data[i];
      }
      return a;
    }

    friend Matrix operator*(Scalar const& c, Matrix a) {
      for (auto& x : a._data) {
        x *= c;
      }
      return a;
    }

    friend bool operator==(Matrix const& a, Matrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

    std::size_t hash() const noexcept {
      std::size_t seed = _rows * 31 + _cols;
      for (auto const& x : _data) {
        hash_combine(seed, hash_value(x));
      }
      return seed;
    }

   private:
    void check_same_shape(Matrix const& b) const {
      if (_rows != b._rows || _cols != b._cols) {
        throw Error(ErrorKind::dimension_mismatch, "matrix shapes differ");
      }
    }

    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    std::vector<Scalar> _data;
  };

  using QMatrix = Matrix<Rational>;
  using ZMatrix = Matrix<Integer>;
  using QVector = std::vector<Rational>;
  using ZVector = std::vector<Integer>;

  template <typename Scalar>
  struct MatrixHash {
    std::size_t operator()(Matrix<Scalar> const& m) const noexcept {
      return m.hash();
    }
  };

  QMatrix to_rational(ZMatrix const& m);
  QVector to_rational(ZVector const& v);

  // The integer matrix equal to m, or nullopt if some entry is not integral.
  std::optional<ZMatrix> to_integer(QMatrix const& m);

  std::string to_string(QMatrix const& m);
  std::string to_string(ZMatrix const& m);

  // Matrix over Z/pZ with entries stored as least residues.
  class FpMatrix {
   public:
    FpMatrix() = default;
    // Throws Error(not_prime) unless p is prime.
    FpMatrix(std::size_t n, unsigned long p);

    std::size_t dim() const noexcept {
      return _n;
    }
    unsigned long modulus() const noexcept {
      return _p;
    }

    unsigned long operator()(std::size_t i, std::size_t j) const {
      return _data[i * _n + j];
    }
    // Stores v mod p.
    void set(std::size_t i, std::size_t j, unsigned long v) {
      _data[i * _n + j] = v % _p;
    }

    bool is_zero() const noexcept;
    bool is_identity() const noexcept;

    std::span<unsigned long const> entries() const noexcept {
      return _data;
    }

    friend FpMatrix operator*(FpMatrix const& a, FpMatrix const& b);
    friend bool     operator==(FpMatrix const& a, FpMatrix const& b) {
      return a._p == b._p && a._n == b._n && a._data == b._data;
    }

    std::size_t hash() const noexcept;

   private:
    std::size_t                _n = 0;
    unsigned long              _p = 2;
    std::vector<unsigned long> _data;
  };

  struct FpMatrixHash {
    std::size_t operator()(FpMatrix const& m) const noexcept {
      return m.hash();
    }
  };

  std::string to_string(FpMatrix const& m);

}  // namespace semibound

template <typename Scalar>
struct std::hash<semibound::Matrix<Scalar>> {
  std::size_t operator()(semibound::Matrix<Scalar> const& m) const noexcept {
    return m.hash();
  }
};

template <>
struct std::hash<semibound::FpMatrix> {
  std::size_t operator()(semibound::FpMatrix const& m) const noexcept {
    return m.hash();
  }
};

#endif  // SEMIBOUND_MATRIX_HPP_
