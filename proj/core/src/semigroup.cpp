#include "semibound/semigroup.hpp"

#include <algorithm>
#include <string>

namespace semibound {

  SemigroupTable::SemigroupTable(std::size_t             dimension,
                                 std::vector<QMatrix>    elements,
                                 std::vector<index_type> product,
                                 std::vector<index_type> generator_indices)
      : _dimension(dimension),
        _elements(std::move(elements)),
        _product(std::move(product)),
        _generators(std::move(generator_indices)) {
    std::size_t const n = _elements.size();
    if (_product.size() != n * n) {
      throw Error(ErrorKind::dimension_mismatch, "product table shape");
    }
    for (auto x : _product) {
      if (x >= n) {
        throw Error(ErrorKind::dimension_mismatch, "product table entry out of range");
      }
    }
    for (auto g : _generators) {
      if (g >= n) {
        throw Error(ErrorKind::dimension_mismatch, "generator index out of range");
      }
    }
    _index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto const& m = _elements[i];
      if (m.rows() != dimension || m.cols() != dimension) {
        throw Error(ErrorKind::dimension_mismatch, "element " + std::to_string(i));
      }
      _index.emplace(m, static_cast<index_type>(i));
      if (!_zero && m.is_zero()) {
        _zero = static_cast<index_type>(i);
      }
    }
  }

  std::optional<index_type> SemigroupTable::index_of(QMatrix const& m) const {
    auto it = _index.find(m);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool SemigroupTable::verify_products() const {
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (_elements[i] * _elements[j] != _elements[product(i, j)]) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    // How an element was first reached: a generator, x*g, or g*x.
    struct Discovery {
      enum class Kind : std::uint8_t { generator, right, left } kind;
      index_type generator;
      index_type other;
    };
  }  // namespace

  SemigroupTable closure(std::span<QMatrix const> generators, std::size_t cap) {
    if (generators.empty()) {
      throw Error(ErrorKind::dimension_mismatch, "no generators");
    }
    std::size_t const n = generators.front().rows();
    for (auto const& g : generators) {
      if (!g.is_square() || g.rows() != n) {
        throw Error(ErrorKind::dimension_mismatch,
                    "generators must be square of a common dimension");
      }
    }

    std::vector<QMatrix>                                          elements;
    std::vector<Discovery>                                        found_by;
    std::unordered_map<QMatrix, index_type, MatrixHash<Rational>> index;

    auto insert = [&](QMatrix m, Discovery how) -> index_type {
      auto it = index.find(m);
      if (it != index.end()) {
        return it->second;
      }
      if (elements.size() >= cap) {
        throw Error(ErrorKind::cap_exceeded,
                    "closure exceeds " + std::to_string(cap) + " elements");
      }
      auto i = static_cast<index_type>(elements.size());
      index.emplace(m, i);
      elements.push_back(std::move(m));
      found_by.push_back(how);
      return i;
    };

    std::vector<index_type> gen_index;
    std::vector<QMatrix>    gens;
    for (auto const& g : generators) {
      auto before = elements.size();
      auto i      = insert(g, {Discovery::Kind::generator, 0, 0});
      if (elements.size() > before) {
        found_by[i].generator = static_cast<index_type>(gen_index.size());
        gen_index.push_back(i);
        gens.push_back(g);
      }
    }
    std::size_t const ngens = gen_index.size();

    // right_mult[i * ngens + g] = index of element_i * gen_g. Left products
    // are only needed to discover elements.
    std::vector<index_type> right_mult;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      QMatrix const x  = elements[i];
      auto const    ii = static_cast<index_type>(i);
      for (std::size_t g = 0; g < ngens; ++g) {
        auto const gi = static_cast<index_type>(g);
        right_mult.push_back(insert(x * gens[g], {Discovery::Kind::right, gi, ii}));
        insert(gens[g] * x, {Discovery::Kind::left, gi, ii});
      }
    }

    // Fill the table column by column; every column depends only on earlier
    // columns and on the Cayley graphs, so no further matrix products occur.
    std::size_t const       size = elements.size();
    std::vector<index_type> product(size * size);
    for (std::size_t j = 0; j < size; ++j) {
      Discovery const& how = found_by[j];
      for (std::size_t i = 0; i < size; ++i) {
        index_type value = 0;
        switch (how.kind) {
          case Discovery::Kind::generator:
            value = right_mult[i * ngens + how.generator];
            break;
          case Discovery::Kind::right:
            // e_i * (e_k * g) = (e_i * e_k) * g
            value = right_mult[product[i * size + how.other] * ngens + how.generator];
            break;
          case Discovery::Kind::left:
            // e_i * (g * e_k) = (e_i * g) * e_k
            value = product[right_mult[i * ngens + how.generator] * size + how.other];
            break;
        }
        product[i * size + j] = value;
      }
    }
    return SemigroupTable(n, std::move(elements), std::move(product), std::move(gen_index));
  }

  SemigroupTable adjoin_zero(SemigroupTable const& s) {
    if (s.zero_index()) {
      return s;
    }
    std::size_t const       n    = s.size();
    std::size_t const       m    = n + 1;
    auto const              zero = static_cast<index_type>(n);
    std::vector<index_type> product(m * m, zero);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        product[i * m + j] = s.product(i, j);
      }
    }
    std::vector<QMatrix> elements = s.elements();
    elements.push_back(QMatrix::zero(s.dimension()));
    return SemigroupTable(s.dimension(), std::move(elements), std::move(product),
                          s.generator_indices());
  }

  SemigroupTable subsemigroup(SemigroupTable const& s, std::span<index_type const> indices) {
    std::vector<index_type> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<std::int64_t> position(s.size(), -1);
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      position[sorted[k]] = static_cast<std::int64_t>(k);
    }
    std::size_t const       m = sorted.size();
    std::vector<index_type> product(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        auto p = position[s.product(sorted[a], sorted[b])];
        if (p < 0) {
          throw Error(ErrorKind::internal_contradiction, "subset is not closed under product");
        }
        product[a * m + b] = static_cast<index_type>(p);
      }
    }
    std::vector<QMatrix>    elements;
    std::vector<index_type> gens;
    for (std::size_t k = 0; k < m; ++k) {
      elements.push_back(s.element(sorted[k]));
      gens.push_back(static_cast<index_type>(k));
    }
    return SemigroupTable(s.dimension(), std::move(elements), std::move(product), std::move(gens));
  }

}  // namespace semibound
