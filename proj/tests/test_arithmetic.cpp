#include <doctest.h>

#include <random>

#include "semibound/arithmetic.hpp"
#include "semibound/linalg.hpp"
#include "support.hpp"

using namespace semibound;
using namespace semibound::test;

namespace {

  // The lattice is stored scaled by the denominator; invariance is unaffected.
  bool lattice_invariant(SemigroupTable const& s, ConjugationCertificate const& c) {
    std::size_t const n = s.dimension();
    for (auto const& m : s.elements()) {
      for (auto const& v : c.lattice.basis()) {
        QVector const w = m * to_rational(v);
        ZVector       zw(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (w[i].get_den() != 1) {
            return false;
          }
          zw[i] = w[i].get_num();
        }
        if (!c.lattice.contains(zw)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<ZMatrix> identity_block_group(ZMatrix const& g) {
    return {ZMatrix::identity(g.rows()), g};
  }

  // The idempotent, maximal subgroup and adapted group blocks of a finite
  // irreducible entry, computed step by step.
  struct GroupBlocks {
    std::size_t          order = 0;
    std::vector<ZMatrix> blocks;
  };

  GroupBlocks group_blocks(CorpusEntry const& e) {
    auto const s     = adjoin_zero(closure(e.generators));
    auto const cert  = integralize(s);
    auto const green = green_relations(s);
    auto const ideal = zero_minimal_ideal(s, green);
    auto const zero  = *s.zero_index();
    index_type idem  = zero;
    for (auto i : ideal.element_indices) {
      if (i != zero && s.product(i, i) == i) {
        idem = i;
        break;
      }
    }
    REQUIRE(idem != zero);
    auto const group   = maximal_subgroup_at(s, green, idem);
    auto const adapted = adapt_idempotent_basis(cert.conjugated, cert.conjugated[idem]);
    std::vector<ZMatrix> members;
    for (auto g : group.element_indices) {
      members.push_back(adapted.conjugated[g]);
    }
    return {group.order(), restrict_to_block(members, adapted.rank)};
  }

}  // namespace

TEST_CASE("integralize examples") {
  SUBCASE("half-integer involution") {
    auto const s = table_of({q({{0, Rational(1, 2)}, {2, 0}})});
    auto const c = integralize(s);
    CHECK(c.basis == q({{Rational(1, 2), 0}, {0, 1}}));
    CHECK(c.lattice.index() == 2);
    CHECK(c.denominator == 2);
    auto const a = index_in(s, q({{0, Rational(1, 2)}, {2, 0}}));
    CHECK(c.conjugated[a] == z({{0, 1}, {1, 0}}));
    CHECK(verify_conjugation(s, c));
  }
  SUBCASE("integral input keeps the standard lattice") {
    auto const s = with_zero({unit(2, 1, 2), unit(2, 2, 1)});
    auto const c = integralize(s);
    CHECK(c.basis == QMatrix::identity(2));
    CHECK(c.lattice.index() == 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(to_rational(c.conjugated[i]) == s.element(i));
    }
  }
}

TEST_CASE("integralize gives an invariant lattice and a faithful conjugation") {
  std::vector<SemigroupTable> tables;
  for (auto const& e : finite_corpus()) {
    tables.push_back(adjoin_zero(closure(e.generators)));
  }
  // Conjugates of signed permutations by random rational matrices.
  std::mt19937 rng(99);
  for (int t = 0; t < 20; ++t) {
    QMatrix p(2, 2);
    do {
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          p(i, j) = Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
          p(i, j).canonicalize();
        }
      }
    } while (!inverse(p));
    QMatrix const pi = *inverse(p);
    tables.push_back(with_zero({p * q({{0, -1}, {1, 0}}) * pi, p * q({{1, 0}, {0, -1}}) * pi}));
  }
  for (auto const& s : tables) {
    auto const c = integralize(s);
    CHECK(verify_conjugation(s, c));
    CHECK(lattice_invariant(s, c));
    // The lattice contains denominator * Z^n.
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      ZVector e(s.dimension(), Integer(0));
      e[i] = c.denominator;
      CHECK(c.lattice.contains(e));
    }
    // Independent product check on the conjugated matrices.
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        CHECK(c.basis * to_rational(c.conjugated[i] * c.conjugated[j]) * c.inverse
              == s.element(i) * s.element(j));
      }
    }
  }
}

TEST_CASE("adapt_idempotent_basis examples") {
  SUBCASE("[[1,1],[0,0]]") {
    ZMatrix const e = z({{1, 1}, {0, 0}});
    auto const    a = adapt_idempotent_basis(std::vector<ZMatrix>{e}, e);
    CHECK(a.u == z({{1, -1}, {0, 1}}));
    CHECK(a.rank == 1);
    CHECK(a.idempotent_form == z({{1, 0}, {0, 0}}));
    CHECK(a.conjugated[0] == a.idempotent_form);
  }
  SUBCASE("diag(1, 0)") {
    ZMatrix const e = z({{1, 0}, {0, 0}});
    auto const    a = adapt_idempotent_basis(std::vector<ZMatrix>{}, e);
    CHECK(a.u == ZMatrix::identity(2));
    CHECK(a.rank == 1);
  }
  SUBCASE("identity") {
    auto const a = adapt_idempotent_basis(std::vector<ZMatrix>{}, ZMatrix::identity(3));
    CHECK(a.rank == 3);
    CHECK(a.u == ZMatrix::identity(3));
  }
  SUBCASE("zero") {
    auto const a = adapt_idempotent_basis(std::vector<ZMatrix>{}, ZMatrix(2, 2));
    CHECK(a.rank == 0);
    CHECK(is_unimodular(a.u));
  }
  SUBCASE("not idempotent") {
    try {
      adapt_idempotent_basis(std::vector<ZMatrix>{}, z({{2, 0}, {0, 0}}));
      FAIL("expected not_idempotent");
    } catch (Error const& err) {
      CHECK(err.kind() == ErrorKind::not_idempotent);
    }
  }
}

TEST_CASE("adapted bases split Z^n exactly") {
  std::vector<ZMatrix> idems;
  for (auto const& e : finite_corpus()) {
    auto const s = adjoin_zero(closure(e.generators));
    auto const c = integralize(s);
    for (auto i : idempotents(s)) {
      idems.push_back(c.conjugated[i]);
    }
  }
  // e = x y^T with y^T x = 1 is a rank-one integral idempotent.
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    ZMatrix x = random_zmatrix(rng, 3, 1, -3, 3);
    x(2, 0)   = 1;
    ZMatrix y = random_zmatrix(rng, 3, 1, -3, 3);
    y(2, 0)   = 1 - x(0, 0) * y(0, 0) - x(1, 0) * y(1, 0);
    idems.push_back(x * y.transpose());
  }
  for (auto const& e : idems) {
    CAPTURE(to_string(e));
    std::size_t const n = e.rows();
    auto const        a = adapt_idempotent_basis(std::vector<ZMatrix>{e}, e);
    CHECK(is_unimodular(a.u));
    CHECK(a.u * a.u_inverse == ZMatrix::identity(n));
    CHECK(a.rank == rank(to_rational(e)));
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += e(i, i);
    }
    CHECK(trace == static_cast<long>(a.rank));
    for (std::size_t j = 0; j < n; ++j) {
      ZMatrix const col = a.u.block(0, j, n, 1);
      if (j < a.rank) {
        CHECK(e * col == col);
      } else {
        CHECK(e * col == ZMatrix(n, 1));
      }
    }
  }
}

TEST_CASE("choose_prime follows parity") {
  CHECK(choose_prime(std::size_t{1}) == 2);
  CHECK(choose_prime(std::size_t{2}) == 3);
  CHECK(choose_prime(std::size_t{3}) == 2);
  CHECK(choose_prime(std::size_t{6}) == 3);
  CHECK(choose_prime(std::size_t{15}) == 2);
  CHECK(choose_prime(MaximalSubgroup{{0, 1, 2, 3}, 0}) == 3);
}

TEST_CASE("mod_p examples") {
  auto const s     = with_zero({q({{-1}})});
  auto const c     = integralize(s);
  auto const ideal = zero_minimal_ideal(s);
  SUBCASE("sign mod 3 is injective") {
    auto const m = mod_p(s, c.conjugated, 3, ideal);
    CHECK(m.injective);
    CHECK(m.distinct_count == 3);
    CHECK(m.zero_separated);
  }
  SUBCASE("sign mod 2 identifies 1 and -1") {
    auto const m = mod_p(s, c.conjugated, 2, ideal);
    CHECK_FALSE(m.injective);
    CHECK(m.distinct_count == 2);
    CHECK(m.zero_separated);
  }
  SUBCASE("B2 mod 2") {
    auto const b  = with_zero({unit(2, 1, 2), unit(2, 2, 1)});
    auto const cb = integralize(b);
    auto const m  = mod_p(b, cb.conjugated, 2, zero_minimal_ideal(b));
    CHECK(m.injective);
    CHECK(m.distinct_count == 5);
  }
  SUBCASE("composite modulus") {
    try {
      mod_p(s, c.conjugated, 4, ideal);
      FAIL("expected not_prime");
    } catch (Error const& err) {
      CHECK(err.kind() == ErrorKind::not_prime);
    }
  }
  SUBCASE("wrong length") {
    try {
      mod_p(s, std::vector<ZMatrix>{}, 3, ideal);
      FAIL("expected dimension_mismatch");
    } catch (Error const& err) {
      CHECK(err.kind() == ErrorKind::dimension_mismatch);
    }
  }
}

TEST_CASE("nonzero integral idempotents stay nonzero mod p") {
  for (auto const& e : finite_corpus()) {
    auto const s = adjoin_zero(closure(e.generators));
    auto const c = integralize(s);
    for (auto i : idempotents(s)) {
      if (c.conjugated[i] == ZMatrix(s.dimension(), s.dimension())) {
        continue;
      }
      for (unsigned long p : {2UL, 3UL}) {
        CHECK_FALSE(mod_p_reduce(c.conjugated[i], p).is_zero());
      }
    }
  }
}

TEST_CASE("minkowski_check examples") {
  std::vector<ZMatrix> const sign = {z({{1}}), z({{-1}})};
  auto const r2 = minkowski_check(sign, 2);
  CHECK(r2.kernel_size == 2);
  CHECK(r2.consistent());
  auto const r3 = minkowski_check(sign, 3);
  CHECK(r3.kernel_size == 1);
  CHECK(r3.consistent());

  // Infinite-order matrices in the congruence kernel are flagged.
  auto const v3 = minkowski_check(identity_block_group(z({{1, 3}, {0, 1}})), 3);
  CHECK(v3.violations == std::vector<std::size_t>{1});
  auto const v2 = minkowski_check(identity_block_group(z({{1, 2}, {0, 1}})), 2);
  CHECK(v2.violations == std::vector<std::size_t>{1});
  // -1 is congruent to 1 mod 2 and squares to 1.
  CHECK(minkowski_check(identity_block_group(z({{-1, 0}, {0, -1}})), 2).consistent());

  try {
    minkowski_check(std::vector<ZMatrix>{z({{2}})}, 3);
    FAIL("expected not_invertible");
  } catch (Error const& err) {
    CHECK(err.kind() == ErrorKind::not_invertible);
  }
}

TEST_CASE("restrict_to_block") {
  std::vector<ZMatrix> const g = {z({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})};
  CHECK(restrict_to_block(g, 2) == std::vector<ZMatrix>{z({{0, 1}, {1, 0}})});
  try {
    restrict_to_block(g, 1);
    FAIL("expected internal_contradiction");
  } catch (Error const& err) {
    CHECK(err.kind() == ErrorKind::internal_contradiction);
  }
}

TEST_CASE("corpus groups have torsion-free congruence kernels") {
  for (auto const& e : irreducible_corpus()) {
    if (!e.finite) {
      continue;
    }
    CAPTURE(e.name);
    auto const gb = group_blocks(e);
    REQUIRE(gb.blocks.size() == gb.order);
    for (unsigned long p : {2UL, 3UL}) {
      auto const r = minkowski_check(gb.blocks, p);
      CHECK(r.consistent());
      // Oracle: count blocks with every entry congruent to the identity.
      std::size_t kernel = 0;
      for (auto const& b : gb.blocks) {
        bool one = true;
        for (std::size_t i = 0; i < b.rows(); ++i) {
          for (std::size_t j = 0; j < b.cols(); ++j) {
            Integer d = b(i, j) - (i == j ? 1 : 0);
            if (d % static_cast<long>(p) != 0) {
              one = false;
            }
          }
        }
        kernel += one ? 1 : 0;
      }
      CHECK(r.kernel_size == kernel);
      if (p == 3) {
        CHECK(kernel == 1);
      }
    }
  }
}
