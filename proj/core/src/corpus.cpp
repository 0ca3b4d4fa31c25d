#include "semibound/corpus.hpp"

#include <algorithm>

namespace semibound {

  namespace {
    QMatrix q(std::initializer_list<std::initializer_list<Rational>> rows) {
      return QMatrix(rows);
    }

    Rational half(int numerator) {
      return Rational(numerator, 2);
    }

    std::vector<CorpusEntry> build_corpus() {
      std::vector<CorpusEntry> c;

      c.push_back({"sign", 1, {q({{-1}})}, 3, true, true,
                   "{1, -1} with zero adjoined; |S| = 3 = 3^(1^2), the bound is attained", std::nullopt});

      c.push_back({"brandt_b2",
                   2,
                   {q({{0, 1}, {0, 0}}), q({{0, 0}, {1, 0}})},
                   5,
                   true,
                   true,
                   "matrix units of M_2; aperiodic, prime 2", std::nullopt});

      c.push_back({"sym3_standard",
                   2,
                   {q({{0, -1}, {1, -1}}), q({{0, -1}, {-1, 0}})},
                   7,
                   true,
                   true,
                   "standard representation of S_3; |G| = 6, prime 3", std::nullopt});

      c.push_back({"sym3_rational",
                   2,
                   {q({{0, -2}, {half(1), -1}}), q({{0, -2}, {half(-1), 0}})},
                   7,
                   true,
                   true,
                   "sym3_standard conjugated by diag(2, 1); not integral as given", std::nullopt});

      c.push_back({"sym4_standard",
                   3,
                   {standard_representation({1, 0, 2, 3}), standard_representation({1, 2, 3, 0})},
                   25,
                   true,
                   true,
                   "standard representation of S_4 on the sum-zero lattice", std::nullopt});

      c.push_back({"signed_permutations_2",
                   2,
                   {q({{0, 1}, {1, 0}}), q({{-1, 0}, {0, 1}})},
                   9,
                   true,
                   true,
                   "hyperoctahedral group of order 8", std::nullopt});

      c.push_back({"rook_monoid_2",
                   2,
                   {q({{0, 1}, {1, 0}}), q({{1, 0}, {0, 0}})},
                   7,
                   true,
                   true,
                   "all 2x2 partial permutation matrices; irreducible since they span M_2", std::nullopt});

      c.push_back({"cyclic3_rotation",
                   2,
                   {q({{0, -1}, {1, -1}})},
                   4,
                   true,
                   true,
                   "rotation of order 3; irreducible over Q but not absolutely", std::nullopt});

      QMatrix upper(4, 4), lower(4, 4), rotation(4, 4);
      upper(0, 2) = upper(1, 3) = 1;
      lower(2, 0) = lower(3, 1) = 1;
      for (std::size_t b = 0; b < 4; b += 2) {
        rotation(b, b + 1)     = -1;
        rotation(b + 1, b)     = 1;
        rotation(b + 1, b + 1) = -1;
      }
      c.push_back({"eisenstein_matrix_units",
                   4,
                   {upper, lower, rotation},
                   16,
                   true,
                   true,
                   "2x2 matrix units tensored with a rotation of order 3; spans a "
                   "proper subalgebra of M_4", std::nullopt});

      c.push_back({"reducible_demo",
                   2,
                   {q({{1, 0}, {0, 1}}), q({{1, 0}, {0, 0}})},
                   3,
                   false,
                   true,
                   "span{e1} is invariant", std::nullopt});

      c.push_back({"infinite_demo", 1, {q({{2}})}, std::nullopt, false, false,
                   "powers of 2 never repeat; closure hits the cap", 200});
      return c;
    }
  }  // namespace

  std::vector<CorpusEntry> const& corpus() {
    static std::vector<CorpusEntry> const entries = build_corpus();
    return entries;
  }

  std::optional<CorpusEntry> corpus_entry(std::string const& name) {
    auto const& c  = corpus();
    auto        it = std::find_if(c.begin(), c.end(), [&](auto const& e) { return e.name == name; });
    if (it == c.end()) {
      return std::nullopt;
    }
    return *it;
  }

  QMatrix standard_representation(std::vector<std::size_t> const& sigma) {
    std::size_t const n = sigma.size();
    QMatrix           m(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      // e_a - e_b = +-(f_lo + ... + f_{hi-1}) with f_k = e_k - e_{k+1}.
      std::size_t const a    = sigma[i];
      std::size_t const b    = sigma[i + 1];
      std::size_t const lo   = std::min(a, b);
      std::size_t const hi   = std::max(a, b);
      int const         sign = a < b ? 1 : -1;
      for (std::size_t k = lo; k < hi; ++k) {
        m(k, i) = sign;
      }
    }
    return m;
  }

}  // namespace semibound
