#include "semibound/invariant_subspaces.hpp"

#include <algorithm>
#include <set>

namespace semibound {

  namespace {
    bool is_zero(QVector const& v) {
      return std::all_of(v.begin(), v.end(), [](Rational const& x) { return x == 0; });
    }

    std::vector<QMatrix> generator_matrices(SemigroupTable const& s) {
      std::vector<QMatrix> gens;
      for (auto g : s.generator_indices()) {
        gens.push_back(s.element(g));
      }
      return gens;
    }

    QVector standard_basis_vector(std::size_t n, std::size_t i) {
      QVector e(n, Rational(0));
      e[i] = 1;
      return e;
    }

    // {x : <w, x> = 0 for all w in dual}.
    std::vector<QVector> annihilator(std::size_t n, std::vector<QVector> const& dual) {
      QMatrix m(dual.size(), n);
      for (std::size_t i = 0; i < dual.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) = dual[i][j];
        }
      }
      return nullspace(m);
    }
  }  // namespace

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::irreducible:
        return "irreducible";
      case Verdict::reducible:
        return "reducible";
      case Verdict::inconclusive:
        return "inconclusive";
    }
    return "";
  }

  std::string_view to_string(CertificateKind k) noexcept {
    switch (k) {
      case CertificateKind::none:
        return "none";
      case CertificateKind::full_span:
        return "full-span";
      case CertificateKind::norton:
        return "norton";
      case CertificateKind::invariant_subspace:
        return "invariant-subspace";
    }
    return "";
  }

  AlgebraBasis algebra_span(SemigroupTable const& s) {
    std::size_t const n = s.dimension();
    AlgebraBasis      result;
    result.n = n;
    EchelonBasis echelon(n * n);
    for (std::size_t i = 0; i < s.size() && !echelon.is_full(); ++i) {
      if (echelon.insert(s.element(i).flatten())) {
        result.element_indices.push_back(static_cast<index_type>(i));
        result.basis.push_back(s.element(i));
      }
    }
    return result;
  }

  EchelonBasis spin(QVector const& v, std::span<QMatrix const> actions) {
    if (is_zero(v)) {
      throw Error(ErrorKind::zero_vector, "cannot spin the zero vector");
    }
    EchelonBasis         span(v.size());
    std::vector<QVector> queue{v};
    span.insert(v);
    for (std::size_t k = 0; k < queue.size() && !span.is_full(); ++k) {
      for (auto const& a : actions) {
        QVector w = a * queue[k];
        if (span.insert(w)) {
          queue.push_back(std::move(w));
        }
      }
    }
    return span;
  }

  EchelonBasis spin(QVector const& v, SemigroupTable const& s) {
    auto gens = generator_matrices(s);
    return spin(v, gens);
  }

  bool verify_invariant_subspace(SemigroupTable const& s, std::span<QVector const> w) {
    EchelonBasis span(s.dimension());
    for (auto const& v : w) {
      if (!span.insert(v)) {
        throw Error(ErrorKind::dependent_basis, "subspace basis is linearly dependent");
      }
    }
    for (auto const& m : s.elements()) {
      for (auto const& v : w) {
        if (!span.contains(m * v)) {
          return false;
        }
      }
    }
    return true;
  }

  bool verify_norton_witness(SemigroupTable const& s, NortonWitness const& witness) {
    std::size_t const n = s.dimension();
    if (witness.element >= s.size() || is_zero(witness.kernel_vector)
        || is_zero(witness.dual_kernel_vector)) {
      return false;
    }
    auto factorization
        = cyclotomic_factorization(characteristic_polynomial(s.element(witness.element)));
    if (!factorization
        || std::none_of(factorization->begin(), factorization->end(), [&](auto const& fm) {
             return fm.first == witness.factor;
           })) {
      return false;
    }
    QMatrix const f_of_a = evaluate(witness.factor, s.element(witness.element));
    if (nullspace(f_of_a).size() != degree(witness.factor)) {
      return false;
    }
    if (!is_zero(f_of_a * witness.kernel_vector)
        || !is_zero(f_of_a.transpose() * witness.dual_kernel_vector)) {
      return false;
    }
    std::vector<QMatrix> transposed;
    for (auto const& m : s.elements()) {
      transposed.push_back(m.transpose());
    }
    return spin(witness.kernel_vector, s).dim() == n
           && spin(witness.dual_kernel_vector, transposed).dim() == n;
  }

  IrreducibilityVerdict is_irreducible(SemigroupTable const& s) {
    std::size_t const     n = s.dimension();
    IrreducibilityVerdict result;
    result.span_dim = algebra_span(s).dim();

    if (result.span_dim == n * n) {
      result.verdict = Verdict::irreducible;
      result.kind    = CertificateKind::full_span;
      return result;
    }

    auto reducible = [&](std::vector<QVector> basis) {
      result.verdict  = Verdict::reducible;
      result.kind     = CertificateKind::invariant_subspace;
      result.subspace = std::move(basis);
      return result;
    };

    // Nullspace bases are canonical, so repeated kernels give identical
    // vectors and are spun once.
    std::vector<QVector> pool;
    std::set<QVector>    seen;
    auto const           add = [&](QVector v) {
      if (seen.insert(v).second) {
        pool.push_back(std::move(v));
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      add(standard_basis_vector(n, i));
    }
    for (auto const& m : s.elements()) {
      if (!m.is_zero() && rank(m) < n) {
        for (auto& v : nullspace(m)) {
          add(std::move(v));
        }
      }
    }
    for (auto const& v : pool) {
      auto w = spin(v, s);
      if (w.dim() < n) {
        return reducible(w.basis());
      }
    }

    std::vector<QMatrix> transposed;
    for (auto g : s.generator_indices()) {
      transposed.push_back(s.element(g).transpose());
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      QMatrix const& a = s.element(i);
      if (a.is_zero()) {
        continue;
      }
      auto factors = cyclotomic_factorization(characteristic_polynomial(a));
      if (!factors) {
        continue;
      }
      for (auto const& factor : *factors) {
        Polynomial const& f = factor.first;
        QMatrix const f_of_a = evaluate(f, a);
        auto          kernel = nullspace(f_of_a);
        if (kernel.size() != degree(f)) {
          continue;
        }
        // ker f(a) is one-dimensional over Q[x]/(f), so one vector spinning
        // to everything means every nonzero kernel vector does.
        auto forward = spin(kernel.front(), s);
        if (forward.dim() < n) {
          return reducible(forward.basis());
        }
        auto dual_kernel = nullspace(f_of_a.transpose());
        auto backward    = spin(dual_kernel.front(), transposed);
        if (backward.dim() < n) {
          // The annihilator of a transpose-invariant subspace is invariant.
          return reducible(annihilator(n, backward.basis()));
        }
        result.verdict = Verdict::irreducible;
        result.kind    = CertificateKind::norton;
        result.norton  = NortonWitness{static_cast<index_type>(i), f, kernel.front(),
                                      dual_kernel.front()};
        return result;
      }
    }
    return result;
  }

}  // namespace semibound
