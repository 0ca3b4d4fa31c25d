#ifndef SEMIBOUND_STRUCTURE_HPP_
#define SEMIBOUND_STRUCTURE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "semibound/error.hpp"
#include "semibound/green.hpp"
#include "semibound/semigroup.hpp"

namespace semibound {

  // A two-sided ideal, listed in increasing index order.
  struct Ideal {
    std::vector<index_type> element_indices;

    std::size_t size() const noexcept {
      return element_indices.size();
    }
    bool contains(index_type i) const;
  };

  // Whether the given subset is closed under multiplication by all of s on
  // both sides.
  bool is_ideal(SemigroupTable const& s, std::span<index_type const> subset);

  // The ideal S^1 x S^1.
  Ideal principal_ideal(SemigroupTable const& s, index_type x);

  // J u {0} for a nonzero J-class J that is minimal among nonzero J-classes;
  // among several, the one holding the lowest element index. Verified to
  // contain no proper nonzero ideal. Throws Error(no_zero) if s has no zero.
  Ideal zero_minimal_ideal(SemigroupTable const& s, GreenStructure const& green);
  Ideal zero_minimal_ideal(SemigroupTable const& s);

  // Number of distinct 0-minimal ideals of s.
  std::size_t count_zero_minimal_ideals(SemigroupTable const& s, GreenStructure const& green);

  // s^2 != 0 and s has no proper nonzero ideal. Throws Error(no_zero) if s
  // has no zero.
  bool is_zero_simple(SemigroupTable const& s);
  // The ideal regarded as a semigroup in its own right.
  bool is_zero_simple(SemigroupTable const& s, Ideal const& ideal);

  struct GGMReport {
    Ideal ideal;
    // Left action: x -> s x on the ideal; right action: x -> x s.
    bool left_faithful  = false;
    bool right_faithful = false;
    // First pair s < t (by index) acting identically on that side.
    std::optional<std::pair<index_type, index_type>> left_witness;
    std::optional<std::pair<index_type, index_type>> right_witness;
    // Only meaningful once both actions are faithful.
    bool unique_zero_minimal = false;

    bool is_ggm() const noexcept {
      return left_faithful && right_faithful;
    }
  };

  GGMReport verify_ggm(SemigroupTable const& s, GreenStructure const& green);
  GGMReport verify_ggm(SemigroupTable const& s);

  // Faithfulness of both actions of s on a given ideal.
  GGMReport faithfulness_on(SemigroupTable const& s, Ideal const& ideal);

  struct SpanCertificate {
    std::vector<index_type> support;
    std::vector<Rational>   coefficients;
  };

  // Rational coefficients with sum c_i s_i equal to the identity matrix,
  // supported on the ideal, or nullopt if the identity is not in its span.
  // The returned combination has no zero coefficients.
  std::optional<SpanCertificate> span_contains_identity(SemigroupTable const& s,
                                                        Ideal const&          ideal);

  // Recomputes sum c_i s_i and compares it with the identity.
  bool check_span_certificate(SemigroupTable const& s, SpanCertificate const& cert);

  struct InjectivityVerdict {
    // No nonzero ideal element shares the image of zero.
    bool zero_separated = false;
    // The image map is injective on the group.
    bool injective_on_group = false;
    // zero_separated && injective_on_group.
    bool criterion = false;
    // Exhaustive pairwise distinctness over all of s.
    bool injective = false;

    bool agrees() const noexcept {
      return criterion == injective;
    }
  };

  // Decides injectivity of a homomorphism s -> T from its behaviour on the
  // 0-minimal ideal and one maximal subgroup, then checks the answer against
  // direct pairwise comparison. image[i] is the image of element i.
  //
  // Throws Error(not_homomorphism) if image is not multiplicative on s, and
  // Error(not_ggm) if s does not act faithfully on both sides of the ideal.
  template <typename Image, typename Hash = std::hash<Image>>
  InjectivityVerdict injectivity_criterion(SemigroupTable const&  s,
                                           Ideal const&           ideal,
                                           MaximalSubgroup const& group,
                                           std::span<Image const> image);

  // Elements a, b with r -> a r b a bijection from the H-class onto the
  // group. Candidates are tried in index order; the pair (e, e) is returned
  // when the H-class is the group itself. Throws Error(not_same_j_class) if
  // the H-class and the group lie in different J-classes.
  std::pair<index_type, index_type> green_translation(SemigroupTable const&        s,
                                                      GreenStructure const&        green,
                                                      std::span<index_type const>  h_class,
                                                      MaximalSubgroup const&       group);

  // For every pair s != t there exist x, y in the ideal with x s y != x t y.
  bool check_separation(SemigroupTable const& s, Ideal const& ideal);

  // --------------------------------------------------------------------------

  template <typename Image, typename Hash>
  InjectivityVerdict injectivity_criterion(SemigroupTable const&  s,
                                           Ideal const&           ideal,
                                           MaximalSubgroup const& group,
                                           std::span<Image const> image) {
    if (image.size() != s.size()) {
      throw Error(ErrorKind::dimension_mismatch, "image table length");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (!(image[i] * image[j] == image[s.product(i, j)])) {
          throw Error(ErrorKind::not_homomorphism,
                      "image(" + std::to_string(i) + ")*image(" + std::to_string(j)
                          + ") differs from the image of the product");
        }
      }
    }
    auto zero = s.zero_index();
    if (!zero) {
      throw Error(ErrorKind::no_zero, "injectivity criterion needs a zero");
    }
    if (!faithfulness_on(s, ideal).is_ggm()) {
      throw Error(ErrorKind::not_ggm, "actions on the ideal are not faithful");
    }

    InjectivityVerdict v;
    v.zero_separated = true;
    for (auto i : ideal.element_indices) {
      if (i != *zero && image[i] == image[*zero]) {
        v.zero_separated = false;
        break;
      }
    }
    std::unordered_set<Image, Hash> seen;
    for (auto g : group.element_indices) {
      seen.insert(image[g]);
    }
    v.injective_on_group = seen.size() == group.order();
    v.criterion          = v.zero_separated && v.injective_on_group;

    seen.clear();
    for (auto const& x : image) {
      seen.insert(x);
    }
    v.injective = seen.size() == s.size();
    return v;
  }

}  // namespace semibound

#endif  // SEMIBOUND_STRUCTURE_HPP_
