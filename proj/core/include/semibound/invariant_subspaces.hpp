#ifndef SEMIBOUND_INVARIANT_SUBSPACES_HPP_
#define SEMIBOUND_INVARIANT_SUBSPACES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "semibound/linalg.hpp"
#include "semibound/polynomial.hpp"
#include "semibound/semigroup.hpp"

namespace semibound {

  // A maximal linearly independent subset of the elements, taken in index
  // order; it spans the rational algebra generated by s.
  struct AlgebraBasis {
    std::size_t             n = 0;
    std::vector<index_type> element_indices;
    std::vector<QMatrix>    basis;

    std::size_t dim() const noexcept {
      return basis.size();
    }
  };

  AlgebraBasis algebra_span(SemigroupTable const& s);

  // Smallest subspace containing v and invariant under every matrix in
  // actions. Throws Error(zero_vector) if v = 0.
  EchelonBasis spin(QVector const& v, std::span<QMatrix const> actions);
  // Spin under the semigroup; invariance under the generators is the same
  // as invariance under all of s.
  EchelonBasis spin(QVector const& v, SemigroupTable const& s);

  enum class Verdict { irreducible, reducible, inconclusive };
  enum class CertificateKind { none, full_span, norton, invariant_subspace };

  std::string_view to_string(Verdict v) noexcept;
  std::string_view to_string(CertificateKind k) noexcept;

  // Data behind a Norton-style irreducibility certificate: for the element
  // a and an irreducible factor f of its characteristic polynomial,
  // dim ker f(a) = deg f, one nonzero vector of ker f(a) spins to Q^n under
  // s and one nonzero vector of ker f(a)^T spins to Q^n under the
  // transposes.
  struct NortonWitness {
    index_type element;
    Polynomial factor;
    QVector    kernel_vector;
    QVector    dual_kernel_vector;
  };

  struct IrreducibilityVerdict {
    Verdict              verdict = Verdict::inconclusive;
    CertificateKind      kind    = CertificateKind::none;
    std::size_t          span_dim = 0;
    // Basis of a proper nonzero invariant subspace when reducible.
    std::vector<QVector> subspace;
    std::optional<NortonWitness> norton;
  };

  // Three stages: span dimension n^2; spinning a fixed pool of vectors
  // (standard basis, kernels of singular nonzero elements); a Norton test
  // on irreducible factors of characteristic polynomials of elements.
  IrreducibilityVerdict is_irreducible(SemigroupTable const& s);

  // Whether every element maps span(w) into itself. Throws
  // Error(dependent_basis) if w is not linearly independent.
  bool verify_invariant_subspace(SemigroupTable const& s, std::span<QVector const> w);

  // Re-checks a Norton witness from scratch.
  bool verify_norton_witness(SemigroupTable const& s, NortonWitness const& witness);

}  // namespace semibound

#endif  // SEMIBOUND_INVARIANT_SUBSPACES_HPP_
