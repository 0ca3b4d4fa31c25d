#include "semibound/green.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "semibound/error.hpp"

namespace semibound {

  namespace {
    using Bits = std::vector<std::uint64_t>;

    void set_bit(Bits& b, std::size_t i) {
      b[i / 64] |= std::uint64_t(1) << (i % 64);
    }

    bool subset_of(Bits const& a, Bits const& b) {
      for (std::size_t k = 0; k < a.size(); ++k) {
        if ((a[k] & ~b[k]) != 0) {
          return false;
        }
      }
      return true;
    }

    // Groups elements by equal keys, numbering classes by first appearance.
    template <typename Key>
    void partition_by(std::vector<Key> const&   keys,
                      Partition&                classes,
                      std::vector<std::size_t>& class_of) {
      std::map<Key, std::size_t> seen;
      class_of.assign(keys.size(), 0);
      for (std::size_t i = 0; i < keys.size(); ++i) {
        auto [it, inserted] = seen.emplace(keys[i], classes.size());
        if (inserted) {
          classes.emplace_back();
        }
        class_of[i] = it->second;
        classes[it->second].push_back(static_cast<index_type>(i));
      }
    }
  }  // namespace

  GreenStructure green_relations(SemigroupTable const& s) {
    std::size_t const n     = s.size();
    std::size_t const words = (n + 63) / 64;

    // s S^1, S^1 s and S^1 s S^1 as bitsets.
    std::vector<Bits> right_ideal(n, Bits(words, 0));
    std::vector<Bits> left_ideal(n, Bits(words, 0));
    for (std::size_t i = 0; i < n; ++i) {
      set_bit(right_ideal[i], i);
      set_bit(left_ideal[i], i);
      for (std::size_t x = 0; x < n; ++x) {
        set_bit(right_ideal[i], s.product(i, x));
        set_bit(left_ideal[i], s.product(x, i));
      }
    }
    std::vector<Bits> two_sided(n, Bits(words, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < n; ++t) {
        if ((left_ideal[i][t / 64] >> (t % 64)) & 1) {
          for (std::size_t k = 0; k < words; ++k) {
            two_sided[i][k] |= right_ideal[t][k];
          }
        }
      }
    }

    GreenStructure g;
    partition_by(right_ideal, g.r_classes, g.r_class_of);
    partition_by(left_ideal, g.l_classes, g.l_class_of);
    partition_by(two_sided, g.j_classes, g.j_class_of);

    std::vector<std::pair<std::size_t, std::size_t>> rl(n);
    for (std::size_t i = 0; i < n; ++i) {
      rl[i] = {g.r_class_of[i], g.l_class_of[i]};
    }
    partition_by(rl, g.h_classes, g.h_class_of);

    std::size_t const nj = g.j_classes.size();
    g.j_leq.assign(nj, std::vector<bool>(nj, false));
    for (std::size_t a = 0; a < nj; ++a) {
      for (std::size_t b = 0; b < nj; ++b) {
        g.j_leq[a][b]
            = subset_of(two_sided[g.j_classes[a].front()], two_sided[g.j_classes[b].front()]);
      }
    }
    return g;
  }

  std::vector<index_type> idempotents(SemigroupTable const& s) {
    std::vector<index_type> result;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.product(i, i) == i) {
        result.push_back(static_cast<index_type>(i));
      }
    }
    return result;
  }

  MaximalSubgroup maximal_subgroup_at(SemigroupTable const& s,
                                      GreenStructure const& green,
                                      index_type            e) {
    if (e >= s.size() || s.product(e, e) != e) {
      throw Error(ErrorKind::not_idempotent, "element " + std::to_string(e));
    }
    MaximalSubgroup g{green.h_classes[green.h_class_of[e]], e};
    std::vector<bool> member(s.size(), false);
    for (auto x : g.element_indices) {
      member[x] = true;
    }
    for (auto x : g.element_indices) {
      if (s.product(e, x) != x || s.product(x, e) != x) {
        throw Error(ErrorKind::internal_contradiction,
                    "idempotent is not an identity on its H-class");
      }
      bool has_inverse = false;
      for (auto y : g.element_indices) {
        if (!member[s.product(x, y)]) {
          throw Error(ErrorKind::internal_contradiction, "H-class of an idempotent is not closed");
        }
        if (s.product(x, y) == e && s.product(y, x) == e) {
          has_inverse = true;
        }
      }
      if (!has_inverse) {
        throw Error(ErrorKind::internal_contradiction,
                    "element of the H-class of an idempotent has no inverse");
      }
    }
    return g;
  }

  MaximalSubgroup maximal_subgroup_at(SemigroupTable const& s, index_type e) {
    return maximal_subgroup_at(s, green_relations(s), e);
  }

  bool is_aperiodic(SemigroupTable const& s, GreenStructure const& green) {
    for (auto e : idempotents(s)) {
      if (green.h_classes[green.h_class_of[e]].size() != 1) {
        return false;
      }
    }
    return true;
  }

  bool is_aperiodic(SemigroupTable const& s) {
    return is_aperiodic(s, green_relations(s));
  }

  StabilityReport check_stability(SemigroupTable const& s, GreenStructure const& green) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto const si = static_cast<index_type>(i);
      for (std::size_t x = 0; x < s.size(); ++x) {
        auto const sx = s.product(i, x);
        if (green.j_related(sx, si) != green.r_related(sx, si)) {
          return {false, std::pair{si, static_cast<index_type>(x)}, true};
        }
        auto const xs = s.product(x, i);
        if (green.j_related(xs, si) != green.l_related(xs, si)) {
          return {false, std::pair{si, static_cast<index_type>(x)}, false};
        }
      }
    }
    return {};
  }

  StabilityReport check_stability(SemigroupTable const& s) {
    return check_stability(s, green_relations(s));
  }

  std::optional<bool> groups_isomorphic(SemigroupTable const&  s,
                                        MaximalSubgroup const& a,
                                        MaximalSubgroup const& b) {
    if (a.order() != b.order()) {
      return false;
    }
    if (a.order() > 16) {
      return std::nullopt;
    }
    std::size_t const m = a.order();

    // Local numbering of each group and its multiplication table.
    auto local_table = [&s, m](MaximalSubgroup const& g) {
      std::map<index_type, std::size_t> pos;
      for (std::size_t k = 0; k < m; ++k) {
        pos[g.element_indices[k]] = k;
      }
      std::vector<std::size_t> table(m * m);
      for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
          table[x * m + y] = pos.at(s.product(g.element_indices[x], g.element_indices[y]));
        }
      }
      return std::pair{table, pos.at(g.identity_index)};
    };
    auto const [ta, ida] = local_table(a);
    auto const [tb, idb] = local_table(b);

    // A generating set for a, grown greedily.
    std::vector<std::size_t> gens;
    std::vector<bool>        covered(m, false);
    covered[ida] = true;
    auto regenerate = [&]() {
      std::vector<std::size_t> frontier{ida};
      std::fill(covered.begin(), covered.end(), false);
      covered[ida] = true;
      while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (auto g : gens) {
          auto y = ta[x * m + g];
          if (!covered[y]) {
            covered[y] = true;
            frontier.push_back(y);
          }
        }
      }
    };
    for (std::size_t x = 0; x < m; ++x) {
      if (!covered[x]) {
        gens.push_back(x);
        regenerate();
      }
    }

    // Try every assignment of generator images and extend along the right
    // Cayley graph; accept the first consistent bijective homomorphism.
    std::vector<std::size_t>              image(gens.size());
    std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
      if (depth == gens.size()) {
        std::vector<std::size_t> phi(m, m);
        phi[ida] = idb;
        std::vector<std::size_t> frontier{ida};
        while (!frontier.empty()) {
          auto x = frontier.back();
          frontier.pop_back();
          for (std::size_t k = 0; k < gens.size(); ++k) {
            auto y  = ta[x * m + gens[k]];
            auto fy = tb[phi[x] * m + image[k]];
            if (phi[y] == m) {
              phi[y] = fy;
              frontier.push_back(y);
            } else if (phi[y] != fy) {
              return false;
            }
          }
        }
        std::vector<bool> hit(m, false);
        for (auto v : phi) {
          if (v == m || hit[v]) {
            return false;
          }
          hit[v] = true;
        }
        for (std::size_t x = 0; x < m; ++x) {
          for (std::size_t y = 0; y < m; ++y) {
            if (phi[ta[x * m + y]] != tb[phi[x] * m + phi[y]]) {
              return false;
            }
          }
        }
        return true;
      }
      for (std::size_t c = 0; c < m; ++c) {
        image[depth] = c;
        if (search(depth + 1)) {
          return true;
        }
      }
      return false;
    };
    return search(0);
  }

}  // namespace semibound
