#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codedim/complex.hpp"

namespace codedim {

// Γ_i: clique complex on 2(i+1) vertices missing exactly the edges
// {2k+1, 2k+2}, k = 0..i. Γ_0 is two points, Γ_1 a square, Γ_2 the octahedron.
SimplicialComplex cross_polytope(int index);

// Join with a new apex, which becomes vertex n+1.
SimplicialComplex cone(const SimplicialComplex& base);

// Clique complex of K_{r,r} with sides {1..r} and {r+1..2r}.
SimplicialComplex complete_bipartite_clique(int side);

// Boundary of the (m-1)-simplex: every proper subset of [m].
SimplicialComplex hollow_simplex(int m);

// The 14-word code on four neurons whose complex misses only the triangle 124.
Code example_code_l26();

// Downward closure of a random facet sample. Every vertex is present; each
// sampled facet takes every vertex independently with probability density.
// Deterministic for a given seed.
SimplicialComplex random_complex(int n, double density, std::uint64_t seed);

struct GeneratorParams {
  std::optional<int> i;  // cross-polytope index
  std::optional<int> r;  // bipartite side size
  std::optional<int> m;  // hollow simplex size
  std::optional<int> n;  // vertex count
  double density = 0.5;
  std::uint64_t seed = 1;
};

// Builds a fixture by name; see generator_names(). Missing parameters fall
// back to per-generator defaults.
SimplicialComplex named_generator(std::string_view name,
                                  const GeneratorParams& params = {});
const std::vector<std::string>& generator_names();

}  // namespace codedim
