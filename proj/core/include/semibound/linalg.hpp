#ifndef SEMIBOUND_LINALG_HPP_
#define SEMIBOUND_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "semibound/matrix.hpp"

namespace semibound {

  struct RowReduction {
    QMatrix                  reduced;  // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  };

  RowReduction rref(QMatrix m);

  std::size_t rank(QMatrix const& m);

  // Canonical basis of {x : m x = 0}, one vector per free column, with the
  // free coordinate equal to 1.
  std::vector<QVector> nullspace(QMatrix const& m);

  // Some exact c with a c = b, or nullopt when the system is inconsistent.
  // Free variables are set to zero, so the answer is deterministic.
  std::optional<QVector> solve_linear(QMatrix const& a, QVector const& b);

  std::optional<QMatrix> inverse(QMatrix const& m);

  // Fraction-free Bareiss elimination.
  Integer determinant(ZMatrix const& m);

  bool is_unimodular(ZMatrix const& u);

  // Entrywise reduction into [0, p). Throws Error(not_prime) for composite p.
  FpMatrix mod_p_reduce(ZMatrix const& m, unsigned long p);

  // Incrementally maintained reduced row echelon basis of a subspace of Q^d.
  // The stored basis is canonical: two EchelonBasis objects span the same
  // subspace iff their basis() vectors are equal.
  class EchelonBasis {
   public:
    explicit EchelonBasis(std::size_t ambient) : _ambient(ambient) {}

    std::size_t ambient() const noexcept {
      return _ambient;
    }
    std::size_t dim() const noexcept {
      return _rows.size();
    }
    bool is_full() const noexcept {
      return _rows.size() == _ambient;
    }

    // Adds v to the span; returns false (and leaves the basis unchanged) if
    // v was already in it.
    bool insert(QVector const& v);

    bool contains(QVector const& v) const;

    std::vector<QVector> const& basis() const noexcept {
      return _rows;
    }

   private:
    QVector reduce(QVector v) const;

    std::size_t              _ambient;
    std::vector<QVector>     _rows;
    std::vector<std::size_t> _pivots;
  };

}  // namespace semibound

#endif  // SEMIBOUND_LINALG_HPP_
