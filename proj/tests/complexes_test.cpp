#include "ainfty/prelie.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace ainfty;

namespace {

// e1 -> e0 with d(e1) = e0: contractible two-term complex.
DgModule two_term(const RingSpec& ring) {
  Matrix d(ring, 1, 1);
  d.at(0, 0) = Scalar::one(ring);
  return DgModule(GradedModule(ring, {{0, 1}, {1, 1}}), {{1, d}});
}

DgModule two_dim_zero_diff(const RingSpec& ring) {
  return DgModule::with_zero_differential(GradedModule(ring, {{0, 1}, {1, 1}}));
}

}  // namespace

TEST_SUITE("complexes") {
  TEST_CASE("graded modules reject negative ranks and drop zero ones") {
    RingSpec q = RingSpec::rationals();
    CHECK_THROWS_AS(GradedModule(q, {{0, -1}}), ValidationError);
    GradedModule m(q, {{0, 2}, {3, 0}});
    CHECK(m.dim(3) == 0);
    CHECK(m.dims().size() == 1);
    CHECK(m.total_rank() == 2);
  }

  TEST_CASE("a proposed differential must square to zero") {
    RingSpec q = RingSpec::rationals();
    Matrix one(q, 1, 1);
    one.at(0, 0) = Scalar::one(q);
    CHECK_THROWS_AS(DgModule(GradedModule(q, {{0, 1}, {1, 1}, {2, 1}}), {{1, one}, {2, one}}),
                    NotADifferential);
    Matrix bad(q, 2, 1);
    CHECK_THROWS_AS(DgModule(GradedModule(q, {{0, 1}, {1, 1}}), {{1, bad}}), ShapeMismatch);
  }

  TEST_CASE("suspension shifts degrees up and negates the differential") {
    RingSpec q = RingSpec::rationals();
    DgModule c = two_term(q);
    DgModule sc = suspend(c);
    CHECK(sc.dim(1) == 1);
    CHECK(sc.dim(2) == 1);
    CHECK(sc.diff(2) == c.diff(1).scaled(-Scalar::one(q)));
    CHECK(desuspend(sc) == c);
    GradedMap s = suspension_map(c);
    GradedMap sinv = desuspension_map(c);
    CHECK(compose(sinv, s) == GradedMap::identity(c));
  }

  TEST_CASE("tensor differential follows the sign rule") {
    RingSpec q = RingSpec::rationals();
    DgModule c = two_term(q);
    TensorSpace t = tensor(c, c);
    // Degree 1 tuples in lex order: (e0, e1) then (e1, e0).
    REQUIRE(t.tuples(1).size() == 2);
    CHECK(t.tuples(1)[0] == std::vector<BasisElt>{{0, 0}, {1, 0}});
    CHECK(t.tuples(1)[1] == std::vector<BasisElt>{{1, 0}, {0, 0}});
    // d(e1 @ e1) = e0 @ e1 - e1 @ e0.
    Matrix d2 = t.complex().diff(2);
    REQUIRE(d2.rows() == 2);
    REQUIRE(d2.cols() == 1);
    CHECK(d2.at(0, 0) == Scalar::one(q));
    CHECK(d2.at(1, 0) == -Scalar::one(q));
    CHECK(t.flatten({{0, 0}, {1, 0}}) == BasisElt{1, 0});
    CHECK(t.expand({1, 1}) == std::vector<BasisElt>{{1, 0}, {0, 0}});
  }

  TEST_CASE("stacked suspensions compose to a global sign") {
    RingSpec q = RingSpec::rationals();
    DgModule c = two_dim_zero_diff(q);
    DgModule sc = suspend(c);
    // (s^{-1})^{@n} s^{@n} = (-1)^{n(n-1)/2} id; the sign pattern for
    // n = 1..5 is +, -, -, +, +.
    std::vector<int> expected = {1, -1, -1, 1, 1};
    for (int n = 1; n <= 5; ++n) {
      TensorSpace src = tensor_power(c, n);
      TensorSpace mid = tensor_power(sc, n);
      std::vector<GradedMap> ups(n, suspension_map(c));
      std::vector<GradedMap> downs(n, desuspension_map(c));
      GradedMap round = compose(koszul_tensor(downs, mid, src), koszul_tensor(ups, src, mid));
      Scalar sign = Scalar::from_int(q, expected[n - 1]);
      CHECK(round == GradedMap::identity(src.complex()).scaled(sign));
    }
  }

  TEST_CASE("the mapping complex of a contractible complex is acyclic") {
    RingSpec q = RingSpec::rationals();
    DgModule c = two_term(q);
    HomComplex hom(c, c);
    CHECK(hom.complex().dim(-1) == 1);
    CHECK(hom.complex().dim(0) == 2);
    CHECK(hom.complex().dim(1) == 1);
    HomologyData h = homology(hom.complex());
    for (auto& [n, deg] : h.by_degree) {
      CAPTURE(n);
      CHECK(deg.rank == 0);
    }
  }

  TEST_CASE("chain maps are the kernel of the mapping differential") {
    RingSpec q = RingSpec::rationals();
    DgModule c = two_term(q);
    CHECK(is_chain_map(GradedMap::identity(c)));
    CHECK(hom_differential(GradedMap::identity(c)).is_zero());
    // e0 -> e0, e1 -> 0 fails: d f e1 = 0 but f d e1 = e0.
    Matrix one(q, 1, 1);
    one.at(0, 0) = Scalar::one(q);
    GradedMap proj(c, c, 0, {{0, one}});
    CHECK(!is_chain_map(proj));
    CHECK(!hom_differential(proj).is_zero());
  }

  TEST_CASE("multimap entries merge and drop zeros") {
    RingSpec q = RingSpec::rationals();
    DgModule c = two_dim_zero_diff(q);
    BasisElt e0{0, 0};
    MultiMapEntry plus{e0, {e0, e0}, Scalar::one(q)};
    MultiMapEntry minus{e0, {e0, e0}, -Scalar::one(q)};
    CHECK(MultiMap(c, c, 2, 0, {plus, minus}).is_zero());
    MultiMap doubled(c, c, 2, 0, {plus, plus});
    REQUIRE(doubled.entries().size() == 1);
    CHECK(doubled.entries()[0].coef == Scalar::from_int(q, 2));
    CHECK(doubled - doubled.scaled(Scalar::from_int(q, 2)) == -doubled);
  }

  TEST_CASE("multimap application extends entries linearly") {
    RingSpec q = RingSpec::rationals();
    DgModule c = two_dim_zero_diff(q);
    BasisElt e0{0, 0}, e1{1, 0};
    MultiMap f(c, c, 2, 0, {{e1, {e0, e1}, Scalar::from_int(q, 3)}});
    Vec on_basis = f.apply({e0, e1});
    REQUIRE(on_basis.size() == 1);
    CHECK(on_basis[0] == Scalar::from_int(q, 3));
    CHECK(is_zero_vec(f.apply({e1, e0})));
    auto [deg, val] = f.apply_linear({{0, {Scalar::from_int(q, 2)}}, {1, {Scalar::from_int(q, 5)}}});
    CHECK(deg == 1);
    CHECK(val[0] == Scalar::from_int(q, 30));
  }

  TEST_CASE("insertion picks up the sign of moving g past earlier inputs") {
    RingSpec q = RingSpec::rationals();
    DgModule c = two_dim_zero_diff(q);
    BasisElt e0{0, 0}, e1{1, 0};
    MultiMap f(c, c, 2, -1, {{e1, {e1, e1}, Scalar::one(q)}});
    MultiMap g(c, c, 1, 1, {{e1, {e0}, Scalar::one(q)}});
    // (f o_2 g)(e1, e0) = (-1)^{deg g * deg e1} f(e1, g e0) = -e1.
    MultiMap ins = f.insert_at(2, g);
    REQUIRE(ins.entries().size() == 1);
    CHECK(ins.entries()[0].out == e1);
    CHECK(ins.entries()[0].in == std::vector<BasisElt>{e1, e0});
    CHECK(ins.entries()[0].coef == -Scalar::one(q));
    // Slot 1 has nothing to move past: (f o_1 g)(e0, e1) = +e1.
    MultiMap first = f.insert_at(1, g);
    REQUIRE(first.entries().size() == 1);
    CHECK(first.entries()[0].coef == Scalar::one(q));
  }

  TEST_CASE("operator differential matches the mapping complex differential") {
    RingSpec q = RingSpec::rationals();
    Sampler s(11);
    DgModule c = fixtures::random_split_complex(s, q, 0, 2, 1, 1);
    TensorSpace pow = tensor_power(c, 2);
    for (int t = 0; t < 5; ++t) {
      MultiMap f = s.multimap(c, 2, s.uniform(-1, 1), 3);
      CHECK(hom_differential(f.to_graded_map(pow)) ==
            operator_differential(f).to_graded_map(pow));
      CHECK(MultiMap::from_graded_map(pow, c, f.to_graded_map(pow)) == f);
    }
  }

  TEST_CASE("endomorphism bases round trip their operators") {
    RingSpec f3 = RingSpec::prime_field(3);
    DgModule c = two_term(f3);
    EndoBasis basis(c, 2, 0);
    for (int k = 0; k < basis.size(); ++k) {
      MultiMap b = basis.basis_map(k);
      Vec coords = basis.vectorize(b);
      for (int j = 0; j < basis.size(); ++j) CHECK(coords[j].is_zero() == (j != k));
      CHECK(basis.devectorize(coords) == b);
      auto& [out, in] = basis.elt(k);
      CHECK(basis.index_of(out, in) == k);
    }
    Sampler s(3);
    MultiMap f = s.multimap(c, 2, 0, 4);
    CHECK(basis.devectorize(basis.vectorize(f)) == f);
  }
}
