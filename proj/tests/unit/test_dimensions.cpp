#include <random>

#include "codedim/dimensions.hpp"
#include "codedim/error.hpp"
#include "codedim/generators.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace codedim;
using testing_helpers::vs;

TEST_SUITE("dimensions") {
  TEST_CASE("Leray dimension from the table") {
    const auto oct = leray_dimension(hochster_table(cross_polytope(2)));
    CHECK(oct.value == 3);
    REQUIRE(oct.witness);
    CHECK(*oct.witness == BettiWitness{3, vs("111111")});

    const auto cone_sq = leray_dimension(hochster_table(cone(cross_polytope(1))));
    CHECK(cone_sq.value == 2);
    CHECK(*cone_sq.witness == BettiWitness{2, vs("11110")});

    const auto simplex = leray_dimension(hochster_table(SimplicialComplex::simplex(3)));
    CHECK(simplex.value == 0);
    CHECK_FALSE(simplex.witness);
  }

  TEST_CASE("witness ties break by step, then bit pattern") {
    // Square: R = 1 at (1,1100) and (1,0011); R = 2 only at (2,1111).
    const auto t = hochster_table(cross_polytope(1));
    CHECK(*helly_dimension(t).witness == BettiWitness{1, vs("1100")});
    // Two missing vertices: R = 0 at (1,10), (1,01) and (2,11).
    const auto z = leray_dimension(hochster_table(SimplicialComplex::irrelevant(2)));
    CHECK(z.value == 0);
    CHECK(*z.witness == BettiWitness{1, vs("10")});
  }

  TEST_CASE("direct Leray dimension") {
    CHECK(leray_dimension_direct(cone(cross_polytope(2))) == 3);
    CHECK(leray_dimension_direct(complex_of_code(example_code_l26())) == 2);
    CHECK(leray_dimension_direct(SimplicialComplex::simplex(1)) == 0);
  }

  TEST_CASE("Helly dimension") {
    const auto l26 = helly_dimension(hochster_table(complex_of_code(example_code_l26())));
    CHECK(l26.value == 2);
    CHECK(*l26.witness == BettiWitness{1, vs("1101")});
    for (int i = 0; i <= 4; ++i) CHECK(helly_dimension(hochster_table(cross_polytope(i))).value == 1);
    CHECK(helly_dimension(hochster_table(SimplicialComplex::simplex(4))).value == 0);
  }

  TEST_CASE("direct Helly dimension") {
    CHECK(helly_dimension_direct(cross_polytope(2)) == 1);
    for (int m = 2; m <= 7; ++m) CHECK(helly_dimension_direct(hollow_simplex(m)) == m - 1);
    CHECK(helly_dimension_direct(cone(cross_polytope(3))) == 1);
  }

  TEST_CASE("homological dimension, reduced convention") {
    const auto oct = hom_dimension_betti(hochster_table(cross_polytope(2)));
    CHECK(oct.value == 3);
    CHECK(*oct.witness == BettiWitness{3, vs("111111")});
    CHECK(hom_dimension_betti(hochster_table(cone(cross_polytope(1)))).value == 0);
    const auto sq = hom_dimension_betti(hochster_table(cross_polytope(1)));
    CHECK(sq.value == 2);
    CHECK(*sq.witness == BettiWitness{2, vs("1111")});
  }

  TEST_CASE("homological dimension, unreduced convention") {
    CHECK(hom_dimension_unreduced(complex_of_code(example_code_l26())) == 1);
    for (int i = 0; i <= 2; ++i) CHECK(hom_dimension_unreduced(cone(cross_polytope(i))) == 1);
    CHECK(hom_dimension_unreduced(cross_polytope(3)) == 4);
    CHECK_THROWS_AS(hom_dimension_unreduced(SimplicialComplex::irrelevant(2)), Error);
  }

  TEST_CASE("full reports") {
    const auto oct = full_report(cross_polytope(2));
    CHECK(oct.leray.value == 3);
    CHECK(oct.helly.value == 1);
    CHECK(oct.hom_betti.value == 3);
    CHECK(oct.hom_unreduced == 3);
    CHECK(oct.hom_unreduced_degree == 2);
    CHECK(oct.leray_direct_agrees);
    CHECK(oct.helly_direct_agrees);

    const auto k44 = full_report(complete_bipartite_clique(4));
    CHECK(k44.leray.value == 2);
    CHECK(k44.helly.value == 1);
    CHECK(k44.hom_betti.value == 2);

    const auto cone_sq = full_report(cone(cross_polytope(1)));
    CHECK(cone_sq.leray.value == 2);
    CHECK(cone_sq.helly.value == 1);
    CHECK(cone_sq.hom_betti.value == 0);
    CHECK(cone_sq.hom_unreduced == 1);
    CHECK_FALSE(cone_sq.hom_betti.witness);

    const auto irrelevant = full_report(SimplicialComplex::irrelevant(3));
    CHECK(irrelevant.hom_unreduced == 0);
    CHECK_FALSE(irrelevant.hom_unreduced_degree);
  }

  TEST_CASE("hollow simplex on five vertices") {
    const auto r = full_report(hollow_simplex(5));
    CHECK(r.leray.value == 4);
    CHECK(r.helly.value == 4);
  }

  TEST_CASE("checked_report rejects a corrupted table") {
    const auto d = cross_polytope(2);
    auto table = hochster_table(d);
    table.add(1, vs("111100"), 1);
    try {
      checked_report(d, table);
      FAIL("expected a consistency error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kConsistency);
    }
    auto shifted = hochster_table(d);
    shifted.set(3, vs("111111"), 0);
    shifted.set(4, vs("111111"), 1);
    CHECK_THROWS_AS(checked_report(d, shifted), Error);
  }

  TEST_CASE("family laws and the unbounded gap") {
    for (int i = 0; i <= 3; ++i) {
      const auto g = full_report(cross_polytope(i));
      CHECK(g.helly.value == 1);
      CHECK(g.hom_betti.value == i + 1);
      const auto c = full_report(cone(cross_polytope(i)));
      CHECK(c.helly.value == 1);
      CHECK(c.leray.value == i + 1);
      CHECK(c.hom_betti.value == 0);
      CHECK(c.hom_unreduced == 1);
      CHECK(c.leray.value - c.helly.value == i);
      CHECK(c.leray.value - c.hom_betti.value == i + 1);
    }
  }

  TEST_CASE("fuzz: inequalities, oracles, clique criterion and monotonicity, n <= 8") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      auto d = random_complex(n, 0.15 + 0.1 * (trial % 8), rng());
      if (trial % 2) d = restrict(d, VertexSet(n, static_cast<VertexSet::Bits>(rng()) & low_mask(n)));
      const PrimeField f(trial % 3 == 0 ? 3 : 2);
      const auto r = full_report(d, f);
      CHECK(r.leray.value >= r.helly.value);
      CHECK(r.leray.value >= r.hom_betti.value);
      CHECK(r.leray.value >= 0);
      CHECK(is_clique_complex(d) == (r.helly.value <= 1));
      for (std::uint32_t p : {2U, 3U, 5U}) {
        CHECK(helly_dimension(hochster_table(d, PrimeField(p))).value == helly_dimension_direct(d));
      }
      if (r.leray.witness && r.leray.witness->sigma == VertexSet::full(n)) {
        CHECK(r.leray.value == r.hom_betti.value);
      }
      const VertexSet s(n, static_cast<VertexSet::Bits>(rng()) & low_mask(n));
      CHECK(leray_dimension(hochster_table(restrict(d, s), f)).value <= r.leray.value);
    }
  }
}
