#ifndef SEMIBOUND_TESTS_SUPPORT_HPP_
#define SEMIBOUND_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "semibound/corpus.hpp"
#include "semibound/matrix.hpp"
#include "semibound/semigroup.hpp"

namespace semibound::test {

  inline QMatrix q(std::initializer_list<std::initializer_list<Rational>> rows) {
    return QMatrix(rows);
  }

  inline ZMatrix z(std::initializer_list<std::initializer_list<Integer>> rows) {
    return ZMatrix(rows);
  }

  // n x n matrix unit E_{ij}, 1-based like the usual notation.
  inline QMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m(n, n);
    m(i - 1, j - 1) = 1;
    return m;
  }

  inline SemigroupTable table_of(std::vector<QMatrix> const& gens) {
    return closure(gens);
  }

  inline SemigroupTable with_zero(std::vector<QMatrix> const& gens) {
    return adjoin_zero(closure(gens));
  }

  inline std::size_t index_in(SemigroupTable const& s, QMatrix const& m) {
    auto i = s.index_of(m);
    REQUIRE(i.has_value());
    return *i;
  }

  inline std::vector<std::size_t> indices_in(SemigroupTable const&        s,
                                             std::vector<QMatrix> const& ms) {
    std::vector<std::size_t> out;
    for (auto const& m : ms) {
      out.push_back(index_in(s, m));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Naive fixpoint closure over string keys; shares no code with closure().
  inline std::set<std::string> brute_force_closure(std::vector<QMatrix> const& gens) {
    std::vector<QMatrix>  all(gens.begin(), gens.end());
    std::set<std::string> seen;
    for (auto const& g : gens) {
      seen.insert(to_string(g));
    }
    bool grew = true;
    while (grew) {
      grew                = false;
      std::size_t const k = all.size();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          QMatrix p = all[i] * all[j];
          if (seen.insert(to_string(p)).second) {
            all.push_back(std::move(p));
            grew = true;
          }
        }
      }
    }
    return seen;
  }

  inline std::set<std::string> element_keys(SemigroupTable const& s) {
    std::set<std::string> keys;
    for (auto const& m : s.elements()) {
      keys.insert(to_string(m));
    }
    return keys;
  }

  inline ZMatrix random_zmatrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    ZMatrix                            m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = d(rng);
      }
    }
    return m;
  }

  inline std::vector<CorpusEntry> irreducible_corpus() {
    std::vector<CorpusEntry> out;
    for (auto const& e : corpus()) {
      if (e.expected_irreducible) {
        out.push_back(e);
      }
    }
    return out;
  }

  inline std::vector<CorpusEntry> finite_corpus() {
    std::vector<CorpusEntry> out;
    for (auto const& e : corpus()) {
      if (e.finite) {
        out.push_back(e);
      }
    }
    return out;
  }

}  // namespace semibound::test

#endif  // SEMIBOUND_TESTS_SUPPORT_HPP_
