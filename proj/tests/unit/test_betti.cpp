#include <random>
#include <tuple>

#include "codedim/betti.hpp"
#include "codedim/error.hpp"
#include "codedim/generators.hpp"
#include "codedim/homology.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace codedim;
using testing_helpers::face_table;
using testing_helpers::vs;

namespace {

using Expected = std::vector<std::tuple<int, std::string, std::uint64_t>>;

Expected entries_of(const BettiTable& t) {
  Expected out;
  for (const auto& [key, beta] : t.entries()) out.emplace_back(key.step, key.sigma.to_binary(), beta);
  return out;
}

bool matches_koszul_oracle(const SimplicialComplex& d, std::uint32_t p) {
  const auto table = hochster_table(d, PrimeField(p), {.workers = 1});
  const auto expected = oracle::betti_upper_koszul(face_table(d), p);
  if (table.entries().size() != expected.size()) return false;
  for (const auto& [key, beta] : table.entries()) {
    const auto it = expected.find({key.step, key.sigma.bits()});
    if (it == expected.end() || it->second != beta) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("hochster-betti") {
  TEST_CASE("square") {
    const auto t = hochster_table(cross_polytope(1));
    CHECK(entries_of(t) == Expected{{0, "0000", 1}, {1, "1100", 1}, {1, "0011", 1}, {2, "1111", 1}});
    CHECK(level_ranks(t) == std::vector<std::uint64_t>{1, 2, 1});
    const auto r = r_values(t);
    REQUIRE(r.size() == 3);
    CHECK(r[0].value == 1);
    CHECK(r[1].value == 1);
    CHECK(r[2].value == 2);
  }

  TEST_CASE("octahedron") {
    const auto t = hochster_table(cross_polytope(2));
    CHECK(entries_of(t) == Expected{{0, "000000", 1},
                                    {1, "110000", 1},
                                    {1, "001100", 1},
                                    {1, "000011", 1},
                                    {2, "111100", 1},
                                    {2, "110011", 1},
                                    {2, "001111", 1},
                                    {3, "111111", 1}});
  }

  TEST_CASE("cone over the square") {
    const auto t = hochster_table(cone(cross_polytope(1)));
    CHECK(entries_of(t) == Expected{{0, "00000", 1}, {1, "11000", 1}, {1, "00110", 1}, {2, "11110", 1}});
    const auto r = r_values(t);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == RValue{1, vs("11000"), 1});
    CHECK(r[1] == RValue{1, vs("00110"), 1});
    CHECK(r[2] == RValue{2, vs("11110"), 2});
  }

  TEST_CASE("full simplex") {
    const auto t = hochster_table(SimplicialComplex::simplex(3));
    CHECK(entries_of(t) == Expected{{0, "000", 1}});
    CHECK(r_values(t).empty());
    CHECK(level_ranks(t) == std::vector<std::uint64_t>{1});
  }

  TEST_CASE("complete bipartite K44") {
    const auto t = hochster_table(complete_bipartite_clique(4));
    CHECK(level_ranks(t) == std::vector<std::uint64_t>{1, 12, 52, 102, 100, 48, 9});
    CHECK(t.beta(6, VertexSet::full(8)) == 9);
  }

  TEST_CASE("missing vertices contribute Koszul syzygies") {
    // {∅} on two vertices: S/⟨x1, x2⟩.
    const auto t = hochster_table(SimplicialComplex::irrelevant(2));
    CHECK(entries_of(t) == Expected{{0, "00", 1}, {1, "10", 1}, {1, "01", 1}, {2, "11", 1}});
  }

  TEST_CASE("guard and void complex") {
    CHECK_THROWS_AS(hochster_table(SimplicialComplex::void_complex(3)), Error);
    try {
      hochster_table(cross_polytope(3), {}, {.max_vertices = 6});
      FAIL("expected guard error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kGuard);
      CHECK(std::string(e.what()).find("256 subsets") != std::string::npos);
    }
  }

  TEST_CASE("worker count does not change the table") {
    const auto d = cone(cross_polytope(2));
    const auto one = hochster_table(d, {}, {.workers = 1});
    CHECK(hochster_table(d, {}, {.workers = 3}) == one);
    CHECK(hochster_table(d, {}, {.workers = 8}) == one);
  }

  TEST_CASE("Hochster table equals the upper-Koszul route") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      auto d = random_complex(n, 0.2 + 0.1 * (trial % 7), rng());
      if (trial % 3 == 1) d = restrict(d, VertexSet(n, static_cast<VertexSet::Bits>(rng()) & low_mask(n)));
      CHECK(matches_koszul_oracle(d, trial % 2 ? 3 : 2));
    }
    CHECK(matches_koszul_oracle(complete_bipartite_clique(3), 2));
    CHECK(matches_koszul_oracle(cone(cross_polytope(2)), 5));
  }

  TEST_CASE("K22 is the square up to relabeling") {
    CHECK(level_ranks(hochster_table(complete_bipartite_clique(2))) ==
          level_ranks(hochster_table(cross_polytope(1))));
  }

  TEST_CASE("step-one gradings are the minimal nonfaces") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 7);
      auto d = random_complex(n, 0.3 + 0.1 * (trial % 5), rng());
      if (trial % 2) d = restrict(d, VertexSet(n, static_cast<VertexSet::Bits>(rng()) & low_mask(n)));
      const auto t = hochster_table(d);
      std::vector<VertexSet> step_one;
      for (const auto& [key, beta] : t.entries()) {
        CHECK(beta > 0);
        if (key.step == 0) {
          CHECK(key.sigma.is_empty());
          CHECK(beta == 1);
        } else {
          CHECK(key.step <= key.sigma.cardinality());
          // |σ| - i - 1 <= dim Δ|σ
          CHECK(key.sigma.cardinality() - key.step - 1 <= restrict(d, key.sigma).dimension());
        }
        if (key.step == 1) {
          CHECK(beta == 1);
          step_one.push_back(key.sigma);
        }
      }
      CHECK(step_one == minimal_nonfaces(d));
    }
  }

  TEST_CASE("Hochster locality under restriction") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const auto d = random_complex(n, 0.5, rng());
      const VertexSet s0(n, static_cast<VertexSet::Bits>(rng()) & low_mask(n));
      const auto whole = hochster_table(d);
      const auto local = hochster_table(restrict(d, s0));
      for (const auto& [key, beta] : whole.entries()) {
        if (key.sigma.is_subset_of(s0)) CHECK(local.beta(key.step, key.sigma) == beta);
      }
      for (const auto& [key, beta] : local.entries()) {
        if (key.sigma.is_subset_of(s0)) CHECK(whole.beta(key.step, key.sigma) == beta);
      }
    }
  }

  TEST_CASE("alternating Betti sums match Euler characteristics per grading") {
    // Σ_i (-1)^i β_{i,σ} = (-1)^{|σ|+1} χ̃(Δ|σ) for σ ≠ ∅.
    const auto d = random_complex(6, 0.5, 77);
    const auto t = hochster_table(d);
    for (VertexSet::Bits s = 1; s < 64; ++s) {
      const VertexSet sigma(6, s);
      std::int64_t alt = 0;
      for (int i = 0; i <= 6; ++i) {
        const auto b = static_cast<std::int64_t>(t.beta(i, sigma));
        alt += (i % 2 == 0) ? b : -b;
      }
      const auto chi = reduced_euler_characteristic(restrict(d, sigma));
      CHECK(alt == ((sigma.cardinality() % 2 == 1) ? chi : -chi));
    }
  }
}
