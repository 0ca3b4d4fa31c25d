#ifndef SEMIBOUND_GREEN_HPP_
#define SEMIBOUND_GREEN_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semibound/semigroup.hpp"

namespace semibound {

  using Partition = std::vector<std::vector<index_type>>;

  // Green's relations of a finite semigroup, computed from principal ideals.
  // Classes are numbered in order of their smallest element index, and each
  // class lists its elements in increasing order.
  struct GreenStructure {
    Partition r_classes;
    Partition l_classes;
    Partition j_classes;
    Partition h_classes;

    std::vector<std::size_t> r_class_of;
    std::vector<std::size_t> l_class_of;
    std::vector<std::size_t> j_class_of;
    std::vector<std::size_t> h_class_of;

    // j_leq[a][b] iff the principal ideal of J-class a is contained in that
    // of J-class b.
    std::vector<std::vector<bool>> j_leq;

    bool r_related(index_type s, index_type t) const {
      return r_class_of[s] == r_class_of[t];
    }
    bool l_related(index_type s, index_type t) const {
      return l_class_of[s] == l_class_of[t];
    }
    bool j_related(index_type s, index_type t) const {
      return j_class_of[s] == j_class_of[t];
    }
    bool h_related(index_type s, index_type t) const {
      return h_class_of[s] == h_class_of[t];
    }
  };

  GreenStructure green_relations(SemigroupTable const& s);

  std::vector<index_type> idempotents(SemigroupTable const& s);

  struct MaximalSubgroup {
    std::vector<index_type> element_indices;
    index_type              identity_index;

    std::size_t order() const noexcept {
      return element_indices.size();
    }
  };

  // The H-class of the idempotent e, checked to be a group under the table.
  // Throws Error(not_idempotent) if e*e != e.
  MaximalSubgroup maximal_subgroup_at(SemigroupTable const& s,
                                      GreenStructure const& green,
                                      index_type            e);
  MaximalSubgroup maximal_subgroup_at(SemigroupTable const& s, index_type e);

  bool is_aperiodic(SemigroupTable const& s, GreenStructure const& green);
  bool is_aperiodic(SemigroupTable const& s);

  struct StabilityReport {
    bool stable = true;
    // (s, x) with sx J s but not sx R s (right_side) or xs J s but not xs L s.
    std::optional<std::pair<index_type, index_type>> violation;
    bool                                             right_side = true;
  };

  StabilityReport check_stability(SemigroupTable const& s, GreenStructure const& green);
  StabilityReport check_stability(SemigroupTable const& s);

  // Whether two subgroups of s are isomorphic. Unequal orders give false;
  // equal orders up to 16 are settled by backtracking search, larger equal
  // orders return nullopt.
  std::optional<bool> groups_isomorphic(SemigroupTable const&  s,
                                        MaximalSubgroup const& a,
                                        MaximalSubgroup const& b);

}  // namespace semibound

#endif  // SEMIBOUND_GREEN_HPP_
