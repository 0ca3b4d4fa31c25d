#ifndef SEMIBOUND_LATTICE_HPP_
#define SEMIBOUND_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "semibound/matrix.hpp"

namespace semibound {

  // A subgroup of Z^n stored by its column Hermite normal form.
  //
  // Basis vectors h_0, ..., h_{r-1} satisfy: the last nonzero coordinate of
  // h_j sits in row pivot_j, with pivot_0 < pivot_1 < ... and h_j[pivot_j] > 0;
  // for k > j the entry h_k[pivot_j] lies in [0, h_j[pivot_j]). This form is
  // unique for a given lattice.
  class Lattice {
   public:
    std::size_t ambient() const noexcept {
      return _ambient;
    }
    std::size_t rank() const noexcept {
      return _basis.size();
    }
    std::vector<ZVector> const& basis() const noexcept {
      return _basis;
    }
    std::vector<std::size_t> const& pivots() const noexcept {
      return _pivots;
    }

    // ambient x rank matrix with the basis as columns.
    ZMatrix basis_matrix() const;

    // Coordinates of v in the basis, or nullopt if v is not in the lattice.
    std::optional<ZVector> coordinates(ZVector const& v) const;

    bool contains(ZVector const& v) const {
      return coordinates(v).has_value();
    }

    // [Z^n : L] for a full-rank lattice; 0 when rank < ambient.
    Integer index() const;

    friend bool operator==(Lattice const&, Lattice const&) = default;

   private:
    friend Lattice hnf_column(std::size_t, std::span<ZVector const>);

    Lattice(std::size_t              ambient,
            std::vector<ZVector>     basis,
            std::vector<std::size_t> pivots)
        : _ambient(ambient), _basis(std::move(basis)), _pivots(std::move(pivots)) {}

    std::size_t              _ambient;
    std::vector<ZVector>     _basis;
    std::vector<std::size_t> _pivots;
  };

  // Integer span of the given vectors, in column Hermite normal form. Zero
  // vectors are absorbed; an all-zero input gives the rank-0 lattice.
  Lattice hnf_column(std::size_t ambient, std::span<ZVector const> vectors);

}  // namespace semibound

#endif  // SEMIBOUND_LATTICE_HPP_
