#ifndef SEMIBOUND_SEMIGROUP_HPP_
#define SEMIBOUND_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "semibound/matrix.hpp"

namespace semibound {

  using index_type = std::uint32_t;

  inline constexpr std::size_t kDefaultCap = 100000;

  // A finite semigroup of n x n rational matrices, stored once with its full
  // multiplication table. Every downstream structure refers to elements by
  // index.
  class SemigroupTable {
   public:
    // Builds a table from already-closed data. Throws Error(dimension_mismatch)
    // if the table shape disagrees with the element list or an entry is out of
    // range.
    SemigroupTable(std::size_t                 dimension,
                   std::vector<QMatrix>        elements,
                   std::vector<index_type>     product,
                   std::vector<index_type>     generator_indices);

    std::size_t dimension() const noexcept {
      return _dimension;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }

    QMatrix const& element(std::size_t i) const {
      return _elements[i];
    }
    std::vector<QMatrix> const& elements() const noexcept {
      return _elements;
    }

    index_type product(std::size_t i, std::size_t j) const {
      return _product[i * _elements.size() + j];
    }

    std::vector<index_type> const& generator_indices() const noexcept {
      return _generators;
    }

    std::optional<index_type> zero_index() const noexcept {
      return _zero;
    }

    std::optional<index_type> index_of(QMatrix const& m) const;

    // Recomputes element(i) * element(j) for every pair and compares with the
    // stored table.
    bool verify_products() const;

   private:
    std::size_t                                                      _dimension;
    std::vector<QMatrix>                                             _elements;
    std::vector<index_type>                                          _product;
    std::vector<index_type>                                          _generators;
    std::optional<index_type>                                        _zero;
    std::unordered_map<QMatrix, index_type, MatrixHash<Rational>>    _index;
  };

  // Multiplicative closure of the generators. Elements are numbered
  // breadth-first: generators in the given order (duplicates dropped), then
  // products x*g and g*x for each element x in index order and each
  // generator g. Throws Error(cap_exceeded) once more than cap elements are
  // found, and Error(dimension_mismatch) on mixed or non-square input.
  SemigroupTable closure(std::span<QMatrix const> generators,
                         std::size_t              cap = kDefaultCap);

  // S itself if it already contains the zero matrix, otherwise S with zero
  // appended as the last element.
  SemigroupTable adjoin_zero(SemigroupTable const& s);

  // The subsemigroup on the given indices, renumbered in increasing index
  // order. Throws Error(internal_contradiction) if the subset is not closed.
  SemigroupTable subsemigroup(SemigroupTable const&        s,
                              std::span<index_type const> indices);

}  // namespace semibound

#endif  // SEMIBOUND_SEMIGROUP_HPP_
