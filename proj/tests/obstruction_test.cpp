#include "ainfty/obstruction.hpp"
#include "ainfty/prelie.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace ainfty;

namespace {

std::optional<ArStructure> find_blocking(std::uint64_t& seed_out) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto st = fixtures::blocking_fixture(seed);
    if (st) {
      seed_out = seed;
      return st;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("obstructions") {
  TEST_CASE("the obstruction needs level three and valid relations") {
    RingSpec q = RingSpec::rationals();
    Sampler s(3);
    ArStructure good = fixtures::a3_fixture(s, q, true);
    ArStructure level2(good.complex(), 2, {good.map(1), good.map(2)}, Convention::circle);
    CHECK_THROWS_AS(obstruction_cocycle(level2), RTooSmall);

    MultiMap noise = s.multimap(good.complex(), 2, 0, 2);
    while (prelie_differential(noise).is_zero()) noise = s.multimap(good.complex(), 2, 0, 3);
    ArStructure broken(good.complex(), 3, {good.map(1), good.map(2) + noise, good.map(3)},
                       Convention::circle);
    CHECK_THROWS_AS(obstruction_cocycle(broken), InvalidArStructure);
    CHECK_THROWS_AS(extend_to_ainfty(broken, 5), InvalidArStructure);
  }

  TEST_CASE("the obstruction cocycle is closed on operators and on cohomology") {
    for (const RingSpec& ring : {RingSpec::rationals(), RingSpec::prime_field(2)}) {
      Sampler s(9);
      for (int trial = 0; trial < 2; ++trial) {
        ArStructure st = fixtures::a3_fixture(s, ring, trial == 0);
        MultiMap o = obstruction_cocycle(st);
        CHECK(o.arity() == 4);
        CHECK(o.degree() == 1);
        CHECK(o == circle(st.map(2), st.map(3)) + circle(st.map(3), st.map(2)));
        CHECK(prelie_differential(o).is_zero());
        HomologyAlgebra ha = homology_algebra(st);
        MultiMap induced = MultiHomIso(ha.splitting, 4).forward(o);
        GradedAlgebra alg(ha.h, ha.mu);
        CHECK(hochschild_d(alg, induced).is_zero());
      }
    }
  }

  TEST_CASE("one lifting step assembles a valid next level") {
    for (const RingSpec& ring : {RingSpec::rationals(), RingSpec::prime_field(2)}) {
      Sampler s(15);
      ArStructure st = fixtures::a3_fixture(s, ring, true);
      ObstructionReport rep = lift_once(st);
      CHECK(rep.level == 3);
      CHECK(rep.class_zero);
      REQUIRE(rep.primitive.has_value());
      REQUIRE(rep.correction.has_value());
      REQUIRE(rep.next.has_value());
      REQUIRE(rep.extended.has_value());

      HomologyAlgebra ha = homology_algebra(st);
      GradedAlgebra alg(ha.h, ha.mu);
      CHECK(hochschild_d(alg, *rep.primitive) == rep.induced);
      CHECK(operator_differential(*rep.correction).is_zero());
      CHECK(MultiHomIso(ha.splitting, 3).forward(*rep.correction) == *rep.primitive);
      // The new top map solves the corrected relation; at this level the
      // correction term is just the bracket with the product.
      CHECK(prelie_differential(*rep.next) ==
            bracket(st.map(2), *rep.correction - st.map(3)));

      const ArStructure& ext = *rep.extended;
      CHECK(ext.level() == 4);
      CHECK(ext.map(1) == st.map(1));
      CHECK(ext.map(2) == st.map(2));
      CHECK(ext.map(3) == st.map(3) - *rep.correction);
      CHECK(ext.map(4) == *rep.next);
      CHECK(check_ar(ext).ok());
    }
  }

  TEST_CASE("degree zero homology lets the structure extend to level six") {
    for (const RingSpec& ring :
         {RingSpec::rationals(), RingSpec::prime_field(2), RingSpec::integers()}) {
      Sampler s(21);
      ArStructure st = fixtures::a3_fixture(s, ring, true);
      auto out = extend_to_ainfty(st, 6);
      REQUIRE(std::holds_alternative<ArStructure>(out));
      const ArStructure& full = std::get<ArStructure>(out);
      CHECK(full.level() == 6);
      CHECK(check_ar(full).ok());
      CHECK(full.map(1) == st.map(1));
      CHECK(full.map(2) == st.map(2));
    }
  }

  TEST_CASE("extension targets below the current level are rejected") {
    RingSpec q = RingSpec::rationals();
    Sampler s(27);
    ArStructure st = fixtures::a3_fixture(s, q, true);
    CHECK_THROWS_AS(extend_to_ainfty(st, 2), ArityOutOfRange);
  }

  TEST_CASE("a nonzero class blocks the lift, certified exhaustively") {
    std::uint64_t seed = 0;
    auto found = find_blocking(seed);
    REQUIRE(found.has_value());
    const ArStructure& st = *found;
    CHECK(check_ar(st).ok());

    ObstructionReport rep = lift_once(st);
    CHECK(rep.level == 4);
    CHECK(!rep.class_zero);
    CHECK(!rep.primitive.has_value());
    CHECK(!rep.extended.has_value());
    CHECK(!rep.induced.is_zero());
    CHECK(rep.induced.arity() == 5);
    CHECK(rep.induced.degree() == 2);

    // The product on homology vanishes, so the cohomology differential is
    // identically zero: the coboundary space in the obstruction bidegree is
    // exhaustively empty and any nonzero cocycle has nonzero class.
    HomologyAlgebra ha = homology_algebra(st);
    CHECK(ha.mu.is_zero());
    GradedAlgebra alg(ha.h, ha.mu);
    CHECK(hochschild_matrix(alg, 4, 2).is_zero());
    CHECK(hochschild_d(alg, rep.induced).is_zero());

    auto out = extend_to_ainfty(st, 6);
    REQUIRE(std::holds_alternative<ObstructionReport>(out));
    CHECK(std::get<ObstructionReport>(out).level == 4);
    CHECK(!std::get<ObstructionReport>(out).class_zero);
  }

  TEST_CASE("the obstruction class does not depend on the top map representative") {
    // Seeds 0 and 4 share everything except the top map, and shifting the
    // top map by a lifted cycle keeps the relations; the induced cocycle and
    // its class survive both moves.
    auto base = fixtures::blocking_fixture(0);
    auto other_top = fixtures::blocking_fixture(4);
    REQUIRE(base.has_value());
    REQUIRE(other_top.has_value());
    CHECK(base->map(3) == other_top->map(3));
    CHECK(base->map(4) != other_top->map(4));
    CHECK(check_ar(*other_top).ok());

    ObstructionReport want = lift_once(*base);
    ObstructionReport got = lift_once(*other_top);
    CHECK(!want.class_zero);
    CHECK(!got.class_zero);
    CHECK(want.induced == got.induced);

    HomologyAlgebra ha = homology_algebra(*base);
    Sampler s(33);
    MultiMap u = s.multimap(ha.h, 4, 2, 2);
    while (u.is_zero()) u = s.multimap(ha.h, 4, 2, 2);
    MultiMap z = MultiHomIso(ha.splitting, 4).lift(u);
    ArStructure shifted(base->complex(), 4,
                        {base->map(1), base->map(2), base->map(3), base->map(4) + z},
                        Convention::circle);
    CHECK(check_ar(shifted).ok());
    ObstructionReport rep = lift_once(shifted);
    CHECK(!rep.class_zero);
    CHECK(rep.induced == want.induced);
  }
}
