#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "semibound/lattice.hpp"
#include "semibound/linalg.hpp"
#include "support.hpp"

using namespace semibound;
using namespace semibound::test;

namespace {

  // Cofactor expansion along the first row.
  Integer laplace_det(ZMatrix const& m) {
    std::size_t const n = m.rows();
    if (n == 0) {
      return 1;
    }
    if (n == 1) {
      return m(0, 0);
    }
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
      ZMatrix minor(n - 1, n - 1);
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0, c = 0; k < n; ++k) {
          if (k != j) {
            minor(i - 1, c++) = m(i, k);
          }
        }
      }
      Integer const term = m(0, j) * laplace_det(minor);
      total += (j % 2 == 0) ? term : Integer(-term);
    }
    return total;
  }

  // gcd of all maximal minors of the n x k generator matrix: the last
  // determinantal divisor, which equals [Z^n : L] for a full-rank L.
  Integer minors_gcd(std::vector<ZVector> const& vs, std::size_t n) {
    Integer                  g = 0;
    std::vector<std::size_t> pick(n);
    std::vector<bool>        mask(vs.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(n), true);
    do {
      ZMatrix m(n, n);
      for (std::size_t i = 0, c = 0; i < vs.size(); ++i) {
        if (mask[i]) {
          for (std::size_t r = 0; r < n; ++r) {
            m(r, c) = vs[i][r];
          }
          ++c;
        }
      }
      Integer d = laplace_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return g;
  }

  // Subgroup of (Z/d)^n generated by the vectors, by breadth-first search.
  std::set<std::vector<long>> residue_subgroup(std::vector<ZVector> const& vs, std::size_t n, long d) {
    std::set<std::vector<long>>    seen{std::vector<long>(n, 0)};
    std::vector<std::vector<long>> frontier{std::vector<long>(n, 0)};
    while (!frontier.empty()) {
      std::vector<std::vector<long>> next;
      for (auto const& x : frontier) {
        for (auto const& v : vs) {
          std::vector<long> y(n);
          for (std::size_t i = 0; i < n; ++i) {
            y[i] = static_cast<long>(residue(Integer(x[i]) + v[i], static_cast<unsigned long>(d)));
          }
          if (seen.insert(y).second) {
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    return seen;
  }

  std::vector<long> residues(ZVector const& v, long d) {
    std::vector<long> r;
    for (auto const& x : v) {
      r.push_back(static_cast<long>(residue(x, static_cast<unsigned long>(d))));
    }
    return r;
  }

  ZVector random_zvector(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    ZVector                            v(n);
    for (auto& x : v) {
      x = d(rng);
    }
    return v;
  }

  // Brute-force search for integer coefficients in [-r, r].
  bool small_combination(std::vector<ZVector> const& vs, ZVector const& target, int r) {
    std::size_t const  k = vs.size();
    std::vector<int>   c(k, -r);
    while (true) {
      ZVector sum(target.size(), Integer(0));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < target.size(); ++j) {
          sum[j] += c[i] * vs[i][j];
        }
      }
      if (sum == target) {
        return true;
      }
      std::size_t i = 0;
      while (i < k && c[i] == r) {
        c[i++] = -r;
      }
      if (i == k) {
        return false;
      }
      ++c[i];
    }
  }

}  // namespace

TEST_CASE("parse_rational canonical forms") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK_THROWS_AS(parse_rational("2/-1"), Error);
  CHECK(parse_rational("0/7") == 0);
  Rational const r = parse_rational("-6/4");
  CHECK(r.get_den() > 0);
  CHECK(r == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-8/4")) == "-2");
}

TEST_CASE("rationals stay in lowest terms under arithmetic") {
  std::mt19937                       rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int t = 0; t < 200; ++t) {
    int b = d(rng);
    int c = d(rng);
    if (b == 0 || c == 0) {
      continue;
    }
    Rational x(d(rng), b);
    Rational y(d(rng), c);
    x.canonicalize();
    y.canonicalize();
    for (Rational const& v : {Rational(x + y), Rational(x * y), Rational(x - y)}) {
      Integer g;
      Integer num = abs(v.get_num());
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), v.get_den_mpz_t());
      CHECK(v.get_den() > 0);
      CHECK((v == 0 || g == 1));
    }
  }
}

TEST_CASE("hnf_column examples") {
  SUBCASE("identity columns") {
    std::vector<ZVector> vs{{1, 0}, {0, 1}};
    Lattice const        l = hnf_column(2, vs);
    CHECK(l.rank() == 2);
    CHECK(l.basis() == vs);
    CHECK(l.index() == 1);
  }
  SUBCASE("(2,0), (0,3), (1,1) span Z^2") {
    std::vector<ZVector> vs{{2, 0}, {0, 3}, {1, 1}};
    Lattice const        l = hnf_column(2, vs);
    CHECK(l.rank() == 2);
    CHECK(l.index() == 1);
    for (ZVector const& e : {ZVector{1, 0}, ZVector{0, 1}}) {
      CHECK(small_combination(vs, e, 3));
      CHECK(l.contains(e));
    }
  }
  SUBCASE("(2,0), (0,2) has index 4") {
    std::vector<ZVector> vs{{2, 0}, {0, 2}};
    Lattice const        l = hnf_column(2, vs);
    CHECK(l.basis() == vs);
    CHECK(l.index() == 4);
    CHECK(minors_gcd(vs, 2) == 4);
    CHECK_FALSE(l.contains({1, 0}));
    CHECK(l.contains({2, -4}));
  }
  SUBCASE("zero vectors are absorbed") {
    std::vector<ZVector> vs{{0, 0, 0}, {0, 0, 0}};
    CHECK(hnf_column(3, vs).rank() == 0);
    std::vector<ZVector> ws{{0, 0}, {3, 0}, {0, 0}};
    Lattice const        l = hnf_column(2, ws);
    CHECK(l.rank() == 1);
    CHECK(l.basis()[0] == ZVector{3, 0});
    CHECK(l.index() == 0);
  }
}

TEST_CASE("hnf_column satisfies the normal-form conditions") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t const    n = 2 + t % 3;
    std::vector<ZVector> vs;
    for (std::size_t k = 0; k < n + 1 + t % 2; ++k) {
      vs.push_back(random_zvector(rng, n, -4, 4));
    }
    Lattice const l = hnf_column(n, vs);
    auto const&   b = l.basis();
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t const p = l.pivots()[j];
      CHECK(b[j][p] > 0);
      for (std::size_t i = p + 1; i < n; ++i) {
        CHECK(b[j][i] == 0);
      }
      if (j > 0) {
        CHECK(l.pivots()[j - 1] < p);
      }
      for (std::size_t k = j + 1; k < b.size(); ++k) {
        CHECK(b[k][p] >= 0);
        CHECK(b[k][p] < b[j][p]);
      }
    }
  }
}

TEST_CASE("hnf_column index and membership agree with determinantal-divisor oracles") {
  std::mt19937 rng(2024);
  int          checked = 0;
  for (int t = 0; t < 200 && checked < 40; ++t) {
    std::size_t const    n = 2 + t % 2;
    std::vector<ZVector> vs;
    for (std::size_t k = 0; k < n + 1; ++k) {
      vs.push_back(random_zvector(rng, n, -3, 3));
    }
    Integer const d = minors_gcd(vs, n);
    if (d == 0 || d > 24) {
      continue;
    }
    ++checked;
    Lattice const l = hnf_column(n, vs);
    REQUIRE(l.rank() == n);
    CHECK(l.index() == d);

    // Z^n / L has order d, so dZ^n lies in L and membership is decided mod d.
    long const dl  = d.get_si();
    auto const sub = residue_subgroup(vs, n, dl);
    CHECK(Integer(static_cast<unsigned long>(sub.size())) * d
          == [&] {
               Integer p = 1;
               for (std::size_t i = 0; i < n; ++i) {
                 p *= d;
               }
               return p;
             }());
    for (int probe = 0; probe < 25; ++probe) {
      ZVector const v = random_zvector(rng, n, -9, 9);
      CHECK(l.contains(v) == (sub.count(residues(v, dl)) == 1));
    }
    for (auto const& v : vs) {
      auto c = l.coordinates(v);
      REQUIRE(c.has_value());
      CHECK(l.basis_matrix() * *c == v);
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("hnf_column is canonical under shuffling and adding combinations") {
  std::mt19937 rng(99);
  for (int t = 0; t < 150; ++t) {
    std::size_t const    n = 2 + t % 3;
    std::vector<ZVector> vs;
    for (std::size_t k = 0; k < 1 + t % (n + 2); ++k) {
      vs.push_back(random_zvector(rng, n, -5, 5));
    }
    Lattice const reference = hnf_column(n, vs);

    std::vector<ZVector> ws = vs;
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int extra = 0; extra < 2; ++extra) {
      ZVector comb(n, Integer(0));
      for (auto const& v : vs) {
        int const c = coef(rng);
        for (std::size_t i = 0; i < n; ++i) {
          comb[i] += c * v[i];
        }
      }
      ws.push_back(comb);
    }
    // Unimodular column operation: add a multiple of one vector to another.
    if (ws.size() >= 2) {
      int const c = coef(rng);
      for (std::size_t i = 0; i < n; ++i) {
        ws[0][i] += c * ws[1][i];
      }
    }
    std::shuffle(ws.begin(), ws.end(), rng);
    CHECK(hnf_column(n, ws) == reference);
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::size_t const n = 1 + t % 5;
    ZMatrix const     m = random_zmatrix(rng, n, n, -6, 6);
    CHECK(determinant(m) == laplace_det(m));
  }
  CHECK(determinant(z({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(ZMatrix(0, 0)) == 1);
}

TEST_CASE("is_unimodular examples") {
  CHECK(is_unimodular(ZMatrix::identity(3)));
  CHECK(is_unimodular(z({{1, -1}, {0, 1}})));
  CHECK_FALSE(is_unimodular(z({{2, 0}, {0, 1}})));
  CHECK(is_unimodular(z({{0, 1}, {1, 0}})));
}

TEST_CASE("rref, rank and nullspace") {
  QMatrix const m = q({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto const ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(m * ns[0] == QVector(3, Rational(0)));

  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::size_t const r = 1 + t % 4;
    std::size_t const c = 1 + (t / 4) % 4;
    QMatrix const     a = to_rational(random_zmatrix(rng, r, c, -2, 2));
    auto const        basis = nullspace(a);
    CHECK(rank(a) + basis.size() == c);
    for (auto const& v : basis) {
      CHECK(a * v == QVector(r, Rational(0)));
    }
    RowReduction const red = rref(a);
    CHECK(red.pivots.size() == rank(a));
  }
}

TEST_CASE("solve_linear examples") {
  SUBCASE("identity") {
    auto c = solve_linear(QMatrix::identity(2), {1, 0});
    REQUIRE(c);
    CHECK(*c == QVector{1, 0});
  }
  SUBCASE("rank-one consistency") {
    auto c = solve_linear(q({{1, 1}, {0, 0}}), {1, 0});
    REQUIRE(c);
    CHECK((*c)[0] + (*c)[1] == 1);
    CHECK_FALSE(solve_linear(q({{1, 1}, {0, 0}}), {1, 1}));
  }
  SUBCASE("E11 and E22 as 4-vectors give the identity") {
    QMatrix a(4, 2);
    a(0, 0) = 1;
    a(3, 1) = 1;
    auto c  = solve_linear(a, {1, 0, 0, 1});
    REQUIRE(c);
    CHECK(*c == QVector{1, 1});
  }
}

TEST_CASE("solve_linear is sound and complete on random systems") {
  std::mt19937 rng(17);
  for (int t = 0; t < 150; ++t) {
    std::size_t const r = 1 + t % 4;
    std::size_t const c = 1 + (t / 3) % 4;
    QMatrix const     a = to_rational(random_zmatrix(rng, r, c, -3, 3));
    QVector           b(r);
    for (auto& x : b) {
      x = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
      x.canonicalize();
    }
    auto const sol = solve_linear(a, b);
    QMatrix    augmented(r, c + 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        augmented(i, j) = a(i, j);
      }
      augmented(i, c) = b[i];
    }
    bool const consistent = rank(augmented) == rank(a);
    CHECK(sol.has_value() == consistent);
    if (sol) {
      CHECK(a * *sol == b);
    }
  }
}

TEST_CASE("inverse") {
  auto inv = inverse(q({{0, Rational(1, 2)}, {2, 0}}));
  REQUIRE(inv);
  CHECK(*inv == q({{0, Rational(1, 2)}, {2, 0}}));
  CHECK_FALSE(inverse(q({{1, 2}, {2, 4}})));
  std::mt19937 rng(23);
  for (int t = 0; t < 40; ++t) {
    QMatrix const m = to_rational(random_zmatrix(rng, 3, 3, -4, 4));
    auto const    i = inverse(m);
    CHECK(i.has_value() == (rank(m) == 3));
    if (i) {
      CHECK(m * *i == QMatrix::identity(3));
      CHECK(*i * m == QMatrix::identity(3));
    }
  }
}

TEST_CASE("mod_p_reduce examples") {
  CHECK(mod_p_reduce(z({{1, 0}, {0, 0}}), 3) == mod_p_reduce(z({{4, 0}, {0, 3}}), 3));
  CHECK(mod_p_reduce(z({{-1}}), 3)(0, 0) == 2);
  CHECK(mod_p_reduce(z({{-1}}), 2)(0, 0) == 1);
  CHECK(mod_p_reduce(z({{-1}}), 2) == mod_p_reduce(z({{1}}), 2));
  CHECK_THROWS_AS(mod_p_reduce(z({{1}}), 4), Error);
  try {
    mod_p_reduce(z({{1}}), 9);
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_prime);
  }
}

TEST_CASE("mod_p_reduce is a ring homomorphism") {
  std::mt19937 rng(31);
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    for (int t = 0; t < 60; ++t) {
      std::size_t const n = 1 + t % 4;
      ZMatrix const     a = random_zmatrix(rng, n, n, -20, 20);
      ZMatrix const     b = random_zmatrix(rng, n, n, -20, 20);
      CHECK(mod_p_reduce(a * b, p) == mod_p_reduce(a, p) * mod_p_reduce(b, p));
      FpMatrix const reduced = mod_p_reduce(a, p);
      for (auto x : reduced.entries()) {
        CHECK(x < p);
      }
    }
  }
}

TEST_CASE("EchelonBasis is canonical") {
  std::mt19937 rng(41);
  for (int t = 0; t < 50; ++t) {
    std::vector<QVector> vs;
    for (int k = 0; k < 3; ++k) {
      QVector v(4);
      for (auto& x : v) {
        x = static_cast<long>(rng() % 5) - 2;
      }
      vs.push_back(v);
    }
    EchelonBasis a(4);
    EchelonBasis b(4);
    for (auto const& v : vs) {
      a.insert(v);
    }
    std::shuffle(vs.begin(), vs.end(), rng);
    for (auto const& v : vs) {
      b.insert(v);
      CHECK(b.contains(v));
    }
    CHECK(a.basis() == b.basis());
    QMatrix m(vs.size(), 4);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        m(i, j) = vs[i][j];
      }
    }
    CHECK(a.dim() == rank(m));
  }
}

TEST_CASE("matrix products are exact over Q") {
  QMatrix const a = q({{Rational(1, 3), 0}, {0, 3}});
  CHECK(a * a == q({{Rational(1, 9), 0}, {0, 9}}));
  QMatrix const b = q({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}});
  CHECK(b * b == b);
  CHECK(b.hash() == q({{parse_rational("2/4"), parse_rational("3/6")}, {Rational(1, 2), Rational(1, 2)}}).hash());
}
