#ifndef SEMIBOUND_ARITHMETIC_HPP_
#define SEMIBOUND_ARITHMETIC_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semibound/green.hpp"
#include "semibound/lattice.hpp"
#include "semibound/semigroup.hpp"
#include "semibound/structure.hpp"

namespace semibound {

  // Change of basis to an S-invariant lattice. conjugated[i] equals
  // inverse * element(i) * basis and is integral.
  struct ConjugationCertificate {
    QMatrix              basis;
    QMatrix              inverse;
    // basis * denominator spans this integer lattice.
    Lattice              lattice;
    Integer              denominator;
    std::vector<ZMatrix> conjugated;
  };

  // Conjugates s into integer matrices through the lattice spanned by the
  // standard basis and every column of every element.
  ConjugationCertificate integralize(SemigroupTable const& s);

  // conjugated[i] * conjugated[j] == conjugated[product(i, j)] for all pairs,
  // and basis * inverse is the identity.
  bool verify_conjugation(SemigroupTable const& s, ConjugationCertificate const& cert);

  // Basis of Z^n adapted to Z^n = eZ^n + (1 - e)Z^n: the first rank columns of
  // u span eZ^n, the rest span (1 - e)Z^n.
  struct AdaptedBasis {
    ZMatrix              u;
    ZMatrix              u_inverse;
    std::size_t          rank = 0;
    // u_inverse * e * u, which is diag(1_rank, 0).
    ZMatrix              idempotent_form;
    // u_inverse * x * u for each input element.
    std::vector<ZMatrix> conjugated;
  };

  // Throws Error(not_idempotent) unless e * e == e.
  AdaptedBasis adapt_idempotent_basis(std::span<ZMatrix const> elements, ZMatrix const& e);

  // 2 for groups of odd order, 3 for even order.
  unsigned long choose_prime(std::size_t group_order) noexcept;
  unsigned long choose_prime(MaximalSubgroup const& g) noexcept;

  struct ModpImage {
    unsigned long         p = 2;
    std::vector<FpMatrix> images;
    std::size_t           distinct_count = 0;
    bool                  injective      = false;
    bool                  zero_separated = false;
  };

  // Reduces every element mod p and records injectivity on s and whether the
  // ideal's nonzero elements avoid the image of zero.
  ModpImage mod_p(SemigroupTable const&    s,
                  std::span<ZMatrix const> integral_elements,
                  unsigned long            p,
                  Ideal const&             ideal);

  // Top-left r x r blocks of group elements that have the form
  // [[A, 0], [0, 0]] in an adapted basis. Throws
  // Error(internal_contradiction) if some element is not of that form.
  std::vector<ZMatrix> restrict_to_block(std::span<ZMatrix const> elements, std::size_t r);

  struct TorsionReport {
    unsigned long            p = 2;
    // Positions (in the checked list) of elements congruent to 1 mod p that
    // are not 1 (odd p) or do not square to 1 (p = 2).
    std::vector<std::size_t> violations;
    // Number of elements congruent to 1 mod p.
    std::size_t              kernel_size = 0;

    bool consistent() const noexcept {
      return violations.empty();
    }
  };

  // Statement-level check of torsion in the congruence kernel of
  // GL_r(Z) -> GL_r(Z/p) on a finite group. Throws Error(not_invertible) if
  // some element has determinant other than +-1.
  TorsionReport minkowski_check(std::span<ZMatrix const> group, unsigned long p);

}  // namespace semibound

#endif  // SEMIBOUND_ARITHMETIC_HPP_
