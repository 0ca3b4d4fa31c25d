#include "semibound/arithmetic.hpp"

#include <unordered_set>

#include "semibound/linalg.hpp"

namespace semibound {

  namespace {
    ZMatrix identity_z(std::size_t n) {
      return ZMatrix::identity(n);
    }
  }  // namespace

  ConjugationCertificate integralize(SemigroupTable const& s) {
    std::size_t const n = s.dimension();
    Integer           denominator = 1;
    for (auto const& m : s.elements()) {
      for (auto const& x : m.entries()) {
        mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), x.get_den_mpz_t());
      }
    }

    // The lattice generated by b_1..b_n and every s b_i, scaled by the
    // common denominator into Z^n.
    std::vector<ZVector> generators;
    for (std::size_t i = 0; i < n; ++i) {
      ZVector e(n, Integer(0));
      e[i] = denominator;
      generators.push_back(std::move(e));
    }
    for (auto const& m : s.elements()) {
      for (std::size_t j = 0; j < n; ++j) {
        ZVector c(n);
        for (std::size_t i = 0; i < n; ++i) {
          Rational scaled = m(i, j) * denominator;
          c[i]            = scaled.get_num();
        }
        generators.push_back(std::move(c));
      }
    }
    Lattice lattice = hnf_column(n, generators);
    if (lattice.rank() != n) {
      throw Error(ErrorKind::internal_contradiction, "invariant lattice is not of full rank");
    }

    Rational const scale = Rational(1) / Rational(denominator);
    QMatrix        basis = scale * to_rational(lattice.basis_matrix());
    auto inverse  = semibound::inverse(basis);
    if (!inverse) {
      throw Error(ErrorKind::internal_contradiction, "lattice basis is singular");
    }

    std::vector<ZMatrix> conjugated;
    conjugated.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto z = to_integer(*inverse * s.element(i) * basis);
      if (!z) {
        throw Error(ErrorKind::internal_contradiction,
                    "element " + std::to_string(i) + " is not integral on the invariant lattice");
      }
      conjugated.push_back(std::move(*z));
    }
    return {std::move(basis), std::move(*inverse), std::move(lattice), std::move(denominator),
            std::move(conjugated)};
  }

  bool verify_conjugation(SemigroupTable const& s, ConjugationCertificate const& cert) {
    std::size_t const n = s.dimension();
    if (cert.basis * cert.inverse != QMatrix::identity(n) || cert.conjugated.size() != s.size()) {
      return false;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (cert.inverse * s.element(i) * cert.basis != to_rational(cert.conjugated[i])) {
        return false;
      }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (cert.conjugated[i] * cert.conjugated[j] != cert.conjugated[s.product(i, j)]) {
          return false;
        }
      }
    }
    return true;
  }

  AdaptedBasis adapt_idempotent_basis(std::span<ZMatrix const> elements, ZMatrix const& e) {
    if (!e.is_square() || e * e != e) {
      throw Error(ErrorKind::not_idempotent, "adapted basis needs an idempotent");
    }
    std::size_t const n          = e.rows();
    ZMatrix const     complement = identity_z(n) - e;

    std::vector<ZVector> image_columns;
    std::vector<ZVector> kernel_columns;
    for (std::size_t j = 0; j < n; ++j) {
      image_columns.push_back(e.column(j));
      kernel_columns.push_back(complement.column(j));
    }
    Lattice const image  = hnf_column(n, image_columns);
    Lattice const kernel = hnf_column(n, kernel_columns);
    if (image.rank() + kernel.rank() != n) {
      throw Error(ErrorKind::internal_contradiction, "eZ^n and (1-e)Z^n do not have complementary ranks");
    }

    std::vector<ZVector> columns = image.basis();
    columns.insert(columns.end(), kernel.basis().begin(), kernel.basis().end());
    AdaptedBasis result;
    result.u    = ZMatrix::from_columns(n, columns);
    result.rank = image.rank();
    if (!is_unimodular(result.u)) {
      throw Error(ErrorKind::internal_contradiction, "adapted basis is not unimodular");
    }
    auto inv = to_integer(*inverse(to_rational(result.u)));
    if (!inv) {
      throw Error(ErrorKind::internal_contradiction, "inverse of a unimodular matrix is not integral");
    }
    result.u_inverse       = std::move(*inv);
    result.idempotent_form = result.u_inverse * e * result.u;

    ZMatrix expected(n, n);
    for (std::size_t i = 0; i < result.rank; ++i) {
      expected(i, i) = 1;
    }
    if (result.idempotent_form != expected) {
      throw Error(ErrorKind::internal_contradiction, "idempotent is not diag(1_r, 0) in the adapted basis");
    }
    result.conjugated.reserve(elements.size());
    for (auto const& x : elements) {
      result.conjugated.push_back(result.u_inverse * x * result.u);
    }
    return result;
  }

  unsigned long choose_prime(std::size_t group_order) noexcept {
    return group_order % 2 == 1 ? 2 : 3;
  }

  unsigned long choose_prime(MaximalSubgroup const& g) noexcept {
    return choose_prime(g.order());
  }

  ModpImage mod_p(SemigroupTable const&    s,
                  std::span<ZMatrix const> integral_elements,
                  unsigned long            p,
                  Ideal const&             ideal) {
    if (integral_elements.size() != s.size()) {
      throw Error(ErrorKind::dimension_mismatch, "one integral matrix per element expected");
    }
    ModpImage result;
    result.p = p;
    result.images.reserve(s.size());
    for (auto const& m : integral_elements) {
      result.images.push_back(mod_p_reduce(m, p));
    }
    std::unordered_set<FpMatrix> distinct(result.images.begin(), result.images.end());
    result.distinct_count = distinct.size();
    result.injective      = result.distinct_count == s.size();

    result.zero_separated = true;
    if (auto zero = s.zero_index()) {
      for (auto i : ideal.element_indices) {
        if (i != *zero && result.images[i] == result.images[*zero]) {
          result.zero_separated = false;
          break;
        }
      }
    }
    return result;
  }

  std::vector<ZMatrix> restrict_to_block(std::span<ZMatrix const> elements, std::size_t r) {
    std::vector<ZMatrix> blocks;
    for (auto const& g : elements) {
      std::size_t const n = g.rows();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if ((i >= r || j >= r) && g(i, j) != 0) {
            throw Error(ErrorKind::internal_contradiction,
                        "group element has entries outside the idempotent block");
          }
        }
      }
      blocks.push_back(g.block(0, 0, r, r));
    }
    return blocks;
  }

  TorsionReport minkowski_check(std::span<ZMatrix const> group, unsigned long p) {
    TorsionReport report;
    report.p = p;
    for (std::size_t k = 0; k < group.size(); ++k) {
      ZMatrix const& g = group[k];
      if (!is_unimodular(g)) {
        throw Error(ErrorKind::not_invertible,
                    "group element " + std::to_string(k) + " is not in GL(Z)");
      }
      if (!mod_p_reduce(g, p).is_identity()) {
        continue;
      }
      ++report.kernel_size;
      ZMatrix const id = identity_z(g.rows());
      bool const violates = p == 2 ? g * g != id : g != id;
      if (violates) {
        report.violations.push_back(k);
      }
    }
    return report;
  }

}  // namespace semibound
