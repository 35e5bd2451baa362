#include "ainfty/hochschild.hpp"
#include "ainfty/prelie.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace ainfty;

namespace {

GradedAlgebra one_dim(const RingSpec& ring) {
  DgModule c = DgModule::with_zero_differential(GradedModule(ring, {{0, 1}}));
  MultiMap mu(c, c, 2, 0, {{{0, 0}, {{0, 0}, {0, 0}}, Scalar::one(ring)}});
  return GradedAlgebra(c, mu);
}

// k[x] / x^2 concentrated in degree 0: basis e (the unit) and x.
GradedAlgebra dual_numbers(const RingSpec& ring) {
  DgModule c = DgModule::with_zero_differential(GradedModule(ring, {{0, 2}}));
  Scalar one = Scalar::one(ring);
  BasisElt e{0, 0}, x{0, 1};
  MultiMap mu(c, c, 2, 0, {{e, {e, e}, one}, {x, {e, x}, one}, {x, {x, e}, one}});
  return GradedAlgebra(c, mu);
}

}  // namespace

TEST_SUITE("hochschild") {
  TEST_CASE("graded algebras validate their product") {
    RingSpec q = RingSpec::rationals();
    Matrix d(q, 1, 1);
    d.at(0, 0) = Scalar::one(q);
    DgModule nonzero_diff(GradedModule(q, {{0, 1}, {1, 1}}), {{1, d}});
    CHECK_THROWS_AS(
        GradedAlgebra(nonzero_diff, MultiMap::zero(nonzero_diff, nonzero_diff, 2, 0)),
        ValidationError);

    DgModule flat = DgModule::with_zero_differential(GradedModule(q, {{0, 2}}));
    CHECK_THROWS_AS(GradedAlgebra(flat, MultiMap::zero(flat, flat, 3, 0)), ValidationError);
    CHECK_THROWS_AS(GradedAlgebra(flat, MultiMap::zero(flat, flat, 2, 1)), ValidationError);

    Scalar one = Scalar::one(q);
    MultiMap bad(flat, flat, 2, 0,
                 {{{0, 0}, {{0, 0}, {0, 0}}, one},
                  {{0, 1}, {{0, 0}, {0, 0}}, one},
                  {{0, 0}, {{0, 1}, {0, 0}}, one}});
    CHECK_THROWS_AS(GradedAlgebra(flat, bad), NotAssociative);
  }

  TEST_CASE("the rank one algebra has the alternating differential") {
    GradedAlgebra alg = one_dim(RingSpec::rationals());
    for (int n = 1; n <= 6; ++n) {
      Matrix m = hochschild_matrix(alg, n, 0);
      REQUIRE(m.rows() == 1);
      REQUIRE(m.cols() == 1);
      if (n % 2 == 1) {
        CHECK(m.at(0, 0).is_one());
      } else {
        CHECK(m.at(0, 0).is_zero());
      }
    }
    for (int n = 1; n <= 5; ++n) {
      HochschildGroup g = hh(alg, n, 0);
      CHECK(g.rank == 0);
      CHECK(g.representatives.empty());
    }
  }

  TEST_CASE("the differential squares to zero as matrices and as operators") {
    for (const RingSpec& ring : {RingSpec::rationals(), RingSpec::prime_field(2)}) {
      fixtures::CatalogAlgebra cat = fixtures::catalog_algebra(ring, 1, 1, 0);
      GradedAlgebra alg(cat.h, cat.mu);
      for (int n = 1; n <= 3; ++n) {
        for (int i = -1; i <= 1; ++i) {
          CHECK((hochschild_matrix(alg, n + 1, i) * hochschild_matrix(alg, n, i)).is_zero());
        }
      }
      Sampler s(5);
      for (int t = 0; t < 6; ++t) {
        MultiMap f = s.multimap(alg.complex(), s.uniform(1, 3), s.uniform(-1, 1), 4);
        MultiMap df = hochschild_d(alg, f);
        CHECK(df.arity() == f.arity() + 1);
        CHECK(df.degree() == f.degree());
        CHECK(hochschild_d(alg, df).is_zero());
        CHECK(df == bracket(alg.mu(), f));
      }
    }
  }

  TEST_CASE("a separable product of fields has no higher cohomology") {
    for (const RingSpec& ring : {RingSpec::rationals(), RingSpec::prime_field(2)}) {
      fixtures::CatalogAlgebra cat = fixtures::split_pair_algebra(ring);
      GradedAlgebra alg(cat.h, cat.mu);
      for (int n = 1; n <= 4; ++n) {
        HochschildGroup g = hh(alg, n, 0);
        CHECK(g.rank == 0);
        CHECK(g.cocycle_rank == g.coboundary_rank);
      }
    }
  }

  TEST_CASE("dual numbers carry one dimensional cohomology in low arities") {
    GradedAlgebra alg = dual_numbers(RingSpec::rationals());
    for (int n = 1; n <= 2; ++n) {
      HochschildGroup g = hh(alg, n, 0);
      CHECK(g.rank == 1);
      REQUIRE(g.representatives.size() == 1);
      const MultiMap& rep = g.representatives[0];
      CHECK(hochschild_d(alg, rep).is_zero());
      CHECK(!is_coboundary(alg, rep).has_value());
    }
  }

  TEST_CASE("coboundaries are recognized and their primitives recovered") {
    RingSpec f3 = RingSpec::prime_field(3);
    fixtures::CatalogAlgebra cat = fixtures::catalog_algebra(f3, 1, 1, 1);
    GradedAlgebra alg(cat.h, cat.mu);
    Sampler s(11);
    int nonzero = 0;
    for (int t = 0; t < 8; ++t) {
      MultiMap f = s.multimap(alg.complex(), 2, s.uniform(-1, 1), 3);
      MultiMap c = hochschild_d(alg, f);
      if (c.is_zero()) continue;
      ++nonzero;
      auto u = is_coboundary(alg, c);
      REQUIRE(u.has_value());
      CHECK(hochschild_d(alg, *u) == c);
    }
    CHECK(nonzero > 0);
  }

  TEST_CASE("primitive queries reject bad inputs") {
    GradedAlgebra alg = dual_numbers(RingSpec::rationals());
    MultiMap arity_one = MultiMap::zero(alg.complex(), alg.complex(), 1, 0);
    CHECK(!is_coboundary(alg, arity_one).has_value());  // nothing maps onto arity 1
    Sampler s(23);
    bool found_non_cocycle = false;
    for (int t = 0; t < 40 && !found_non_cocycle; ++t) {
      MultiMap f = s.multimap(alg.complex(), 2, 0, 3);
      if (hochschild_d(alg, f).is_zero()) continue;
      found_non_cocycle = true;
      CHECK_THROWS_AS(is_coboundary(alg, f), NotACocycle);
    }
    CHECK(found_non_cocycle);
    HochschildOptions tight;
    tight.max_arity = 3;
    CHECK_THROWS_AS(hh(alg, 3, 0, tight), ArityOutOfRange);
    CHECK(hh(alg, 2, 0, tight).n == 2);
  }

  TEST_CASE("bracketing with the product anticommutes with the differential") {
    RingSpec f2 = RingSpec::prime_field(2);
    Sampler s(19);
    ArStructure st = fixtures::a3_fixture(s, f2, false);
    std::vector<MultiMap> samples;
    for (int t = 0; t < 6; ++t) {
      samples.push_back(s.multimap(st.complex(), s.uniform(1, 3), s.uniform(-1, 1), 3));
    }
    AnticommuteReport rep = check_anticommute(st, samples);
    CHECK(rep.checked == samples.size());
    CHECK(rep.ok());

    ArStructure only_d(st.complex(), 1, {st.map(1)}, Convention::circle);
    CHECK_THROWS_AS(check_anticommute(only_d, samples), RTooSmall);
  }

  TEST_CASE("integer cohomology of the doubled product carries torsion") {
    // Z algebra: e * e = 2 e. In odd arities d doubles the generator and in
    // even arities it vanishes, so arity 2 cohomology is Z/2.
    RingSpec z = RingSpec::integers();
    DgModule c = DgModule::with_zero_differential(GradedModule(z, {{0, 1}}));
    MultiMap mu(c, c, 2, 0, {{{0, 0}, {{0, 0}, {0, 0}}, Scalar::from_int(z, 2)}});
    GradedAlgebra alg(c, mu);
    HochschildGroup g = hh(alg, 2, 0);
    CHECK(g.rank == 0);
    REQUIRE(g.torsion.size() == 1);
    CHECK(g.torsion[0] == BigInt(2));
  }
}
