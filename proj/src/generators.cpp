#include "codedim/generators.hpp"

#include <random>
#include <string>
#include <string_view>

#include "codedim/error.hpp"

namespace codedim {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

VertexSet from_binary(std::string_view word) {
  VertexSet::Bits bits = 0;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (word[j] == '1') bits |= VertexSet::Bits{1} << j;
  }
  return VertexSet(static_cast<int>(word.size()), bits);
}

}  // namespace

SimplicialComplex cross_polytope(int index) {
  require(index >= 0 && 2 * (index + 1) <= kMaxRepresentableVertices,
          "cross-polytope index " + std::to_string(index) + " out of range");
  const int n = 2 * (index + 1);
  std::vector<VertexSet> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const bool antipodal = (u % 2 == 1) && v == u + 1;
      if (!antipodal) edges.push_back(VertexSet::of(n, {u, v}));
    }
  }
  return clique_complex(n, edges);
}

SimplicialComplex cone(const SimplicialComplex& base) {
  const int n = base.n() + 1;
  require(n <= kMaxRepresentableVertices, "cone exceeds the representable vertex count");
  if (base.is_void()) return SimplicialComplex::void_complex(n);
  const VertexSet::Bits apex = VertexSet::Bits{1} << (n - 1);
  std::vector<VertexSet> gens{VertexSet(n, apex)};
  for (const auto& f : base.facets()) gens.emplace_back(n, f.bits() | apex);
  return SimplicialComplex::from_generators(n, gens);
}

SimplicialComplex complete_bipartite_clique(int side) {
  require(side >= 1 && 2 * side <= kMaxRepresentableVertices,
          "bipartite side size " + std::to_string(side) + " out of range");
  const int n = 2 * side;
  std::vector<VertexSet> edges;
  for (int u = 1; u <= side; ++u) {
    for (int v = side + 1; v <= n; ++v) edges.push_back(VertexSet::of(n, {u, v}));
  }
  return clique_complex(n, edges);
}

SimplicialComplex hollow_simplex(int m) {
  require(m >= 2 && m <= kMaxRepresentableVertices,
          "hollow simplex size " + std::to_string(m) + " out of range");
  const auto full = VertexSet::full(m);
  std::vector<VertexSet> gens;
  for (int v = 1; v <= m; ++v) gens.push_back(full.without(v));
  return SimplicialComplex::from_generators(m, gens);
}

Code example_code_l26() {
  static constexpr std::string_view kWords[] = {
      "0000", "1000", "0100", "0010", "0001", "1100", "1010",
      "1001", "0110", "0101", "0011", "1110", "1011", "0111"};
  std::vector<VertexSet> words;
  for (auto w : kWords) words.push_back(from_binary(w));
  return Code(4, std::move(words));
}

SimplicialComplex random_complex(int n, double density, std::uint64_t seed) {
  require(n >= 1 && n <= kMaxRepresentableVertices,
          "random complex size " + std::to_string(n) + " out of range");
  require(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");
  // Raw engine output keeps the sample identical across standard libraries.
  std::mt19937_64 engine(seed);
  auto uniform = [&engine] {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  };
  std::vector<VertexSet> gens;
  for (int v = 1; v <= n; ++v) gens.push_back(VertexSet::of(n, {v}));
  const auto facet_count = 1 + engine() % static_cast<std::uint64_t>(2 * n);
  for (std::uint64_t k = 0; k < facet_count; ++k) {
    VertexSet::Bits bits = 0;
    for (int v = 0; v < n; ++v) {
      if (uniform() < density) bits |= VertexSet::Bits{1} << v;
    }
    gens.emplace_back(n, bits);
  }
  return SimplicialComplex::from_generators(n, gens);
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> kNames = {
      "cross-polytope", "cone-cross-polytope", "octahedron", "square",
      "cone-square",    "complete-bipartite",  "hollow-simplex", "full-simplex",
      "l26",            "random"};
  return kNames;
}

SimplicialComplex named_generator(std::string_view name,
                                  const GeneratorParams& params) {
  if (name == "cross-polytope") return cross_polytope(params.i.value_or(2));
  if (name == "cone-cross-polytope") return cone(cross_polytope(params.i.value_or(1)));
  if (name == "octahedron") return cross_polytope(2);
  if (name == "square") return cross_polytope(1);
  if (name == "cone-square") return cone(cross_polytope(1));
  if (name == "complete-bipartite") return complete_bipartite_clique(params.r.value_or(4));
  if (name == "hollow-simplex") return hollow_simplex(params.m.value_or(3));
  if (name == "full-simplex") {
    const int n = params.n.value_or(3);
    require(n >= 0 && n <= kMaxRepresentableVertices, "full simplex size out of range");
    return SimplicialComplex::simplex(n);
  }
  if (name == "l26") return complex_of_code(example_code_l26());
  if (name == "random") return random_complex(params.n.value_or(6), params.density, params.seed);
  std::string known;
  for (const auto& g : generator_names()) known += (known.empty() ? "" : ", ") + g;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown generator '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace codedim
