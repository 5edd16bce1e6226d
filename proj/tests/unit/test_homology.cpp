#include <random>

#include "codedim/generators.hpp"
#include "codedim/homology.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace codedim;
using testing_helpers::face_table;

namespace {

bool matches_oracle(const SimplicialComplex& d, std::uint32_t p) {
  const auto got = reduced_homology(d, PrimeField(p));
  for (const auto& [k, dim] : oracle::reduced_homology(face_table(d), p)) {
    if (got.at(k) != dim) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("reduced homology of small complexes") {
    const auto circle = reduced_homology(hollow_simplex(3));
    CHECK(circle.at(1) == 1);
    CHECK(circle.at(0) == 0);
    CHECK(circle.at(-1) == 0);
    CHECK(circle.last_degree() == 1);

    const auto sphere = reduced_homology(cross_polytope(2));
    CHECK(sphere.at(2) == 1);
    CHECK(sphere.at(0) == 0);
    CHECK(sphere.at(1) == 0);

    CHECK(reduced_homology(cross_polytope(0)).at(0) == 1);
  }

  TEST_CASE("degenerate complexes") {
    const auto v = reduced_homology(SimplicialComplex::void_complex(3));
    CHECK(v.is_zero());
    CHECK(v.at(-1) == 0);

    const auto irrelevant = reduced_homology(SimplicialComplex::irrelevant(3));
    CHECK(irrelevant.at(-1) == 1);
    CHECK(irrelevant.last_degree() == -1);

    CHECK(reduced_homology(SimplicialComplex::simplex(4)).is_zero());
  }

  TEST_CASE("cones are acyclic") {
    for (int i = 0; i <= 3; ++i) CHECK(reduced_homology(cone(cross_polytope(i))).is_zero());
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      CHECK(reduced_homology(cone(random_complex(6, 0.4, seed)), PrimeField(3)).is_zero());
    }
    CHECK(reduced_homology(cone(SimplicialComplex::irrelevant(2))).is_zero());
  }

  TEST_CASE("unreduced homology") {
    CHECK(unreduced_homology(SimplicialComplex::simplex(1)).at(0) == 1);
    CHECK(unreduced_homology(cross_polytope(0)).at(0) == 2);
    const auto sphere = unreduced_homology(cross_polytope(2));
    CHECK(sphere.at(0) == 1);
    CHECK(sphere.at(1) == 0);
    CHECK(sphere.at(2) == 1);
    CHECK(sphere.first_degree() == 0);
    CHECK(unreduced_homology(SimplicialComplex::void_complex(2)).is_zero());
    CHECK(unreduced_homology(SimplicialComplex::irrelevant(2)).is_zero());
  }

  TEST_CASE("top nonzero degree") {
    CHECK(top_nonzero_degree(reduced_homology(cross_polytope(2)), -2) == 2);
    CHECK(top_nonzero_degree(reduced_homology(SimplicialComplex::simplex(3)), -2) == -2);
    CHECK(top_nonzero_degree(reduced_homology(hollow_simplex(3)), -2) == 1);
    CHECK(top_nonzero_degree(reduced_homology(SimplicialComplex::irrelevant(2)), -2) == -1);
  }

  TEST_CASE("cross-polytope spheres in every characteristic") {
    for (std::uint32_t p : {2U, 3U, 5U}) {
      for (int i = 0; i <= 3; ++i) {
        const auto h = reduced_homology(cross_polytope(i), PrimeField(p));
        CHECK(top_nonzero_degree(h, -2) == i);
        CHECK(h.at(i) == 1);
      }
    }
  }

  TEST_CASE("agrees with the brute-force oracle at several primes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 7);
      auto d = random_complex(n, 0.25 + 0.1 * (trial % 6), rng());
      if (trial % 2) d = restrict(d, VertexSet(n, static_cast<VertexSet::Bits>(rng()) & low_mask(n)));
      for (std::uint32_t p : {2U, 3U, 5U}) CHECK(matches_oracle(d, p));
    }
  }

  TEST_CASE("real projective plane detects the characteristic") {
    // Six-vertex triangulation of RP^2: H̃_1 = H̃_2 = GF(2), acyclic otherwise.
    const int n = 6;
    std::vector<VertexSet> tris;
    for (auto t : std::initializer_list<std::initializer_list<int>>{
             {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
             {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}}) {
      tris.push_back(VertexSet::of(n, t));
    }
    const auto rp2 = SimplicialComplex::from_generators(n, tris);
    const auto mod2 = reduced_homology(rp2, PrimeField(2));
    CHECK(mod2.at(1) == 1);
    CHECK(mod2.at(2) == 1);
    CHECK(reduced_homology(rp2, PrimeField(3)).is_zero());
    CHECK(matches_oracle(rp2, 2));
    CHECK(matches_oracle(rp2, 3));
  }

  TEST_CASE("reduced Euler characteristic on every induced subcomplex, n <= 7") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 7);
      const auto d = random_complex(n, 0.5, rng());
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const auto sub = restrict(d, VertexSet(n, static_cast<VertexSet::Bits>(s)));
        const auto h = reduced_homology(sub, PrimeField(trial % 2 ? 2 : 3));
        CHECK(euler_characteristic(h) == reduced_euler_characteristic(sub));
        CHECK(h.at(sub.dimension() + 1) == 0);
        CHECK(h.at(-2) == 0);
      }
    }
  }
}
