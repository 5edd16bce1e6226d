#include "codedim/complex.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "codedim/error.hpp"

namespace codedim {

namespace {

using Bits = VertexSet::Bits;

void require_same_n(int expected, const VertexSet& s, const char* what) {
  if (s.n() != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " has ambient n = " + std::to_string(s.n()) +
                    ", expected " + std::to_string(expected));
  }
}

// Keeps the inclusion-maximal nonempty sets, sorted by bit value.
std::vector<Bits> maximal_elements(std::vector<Bits> sets) {
  // Larger sets first so a set only needs checking against kept ones.
  std::sort(sets.begin(), sets.end(), [](Bits a, Bits b) {
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    return ca != cb ? ca > cb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Bits> kept;
  for (Bits s : sets) {
    if (s == 0) continue;
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [s](Bits k) { return (s & ~k) == 0; });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Bron–Kerbosch with pivoting over bitmask adjacency.
void collect_maximal_cliques(const std::vector<Bits>& adjacency, Bits clique,
                             Bits candidates, Bits excluded,
                             std::vector<Bits>& out) {
  if (candidates == 0 && excluded == 0) {
    out.push_back(clique);
    return;
  }
  const Bits pool = candidates | excluded;
  int pivot = std::countr_zero(pool);
  int best = -1;
  for (Bits rest = pool; rest != 0; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const int score = std::popcount(candidates & adjacency[static_cast<std::size_t>(u)]);
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (Bits rest = candidates & ~adjacency[static_cast<std::size_t>(pivot)];
       rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const Bits bit = Bits{1} << v;
    const Bits nbrs = adjacency[static_cast<std::size_t>(v)];
    collect_maximal_cliques(adjacency, clique | bit, candidates & nbrs,
                            excluded & nbrs, out);
    candidates &= ~bit;
    excluded |= bit;
  }
}

}  // namespace

Code::Code(int n, std::vector<VertexSet> words) : n_(n), words_(std::move(words)) {
  if (n < 0 || n > kMaxRepresentableVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "code vertex count " + std::to_string(n) + " out of range");
  }
  for (const auto& w : words_) require_same_n(n, w, "codeword");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(const VertexSet& word) const {
  return std::binary_search(words_.begin(), words_.end(), word);
}

SimplicialComplex::SimplicialComplex(int n) : n_(n) {
  if (n < 0 || n > kMaxRepresentableVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "complex vertex count " + std::to_string(n) + " out of range");
  }
}

SimplicialComplex SimplicialComplex::from_generators(
    int n, const std::vector<VertexSet>& gens) {
  SimplicialComplex out(n);
  if (gens.empty()) return out;
  std::vector<Bits> raw;
  raw.reserve(gens.size());
  for (const auto& g : gens) {
    require_same_n(n, g, "generator");
    raw.push_back(g.bits());
  }
  out.has_empty_face_ = true;
  for (Bits f : maximal_elements(std::move(raw))) out.facets_.emplace_back(n, f);
  return out;
}

SimplicialComplex SimplicialComplex::irrelevant(int n) {
  return from_generators(n, {VertexSet::empty(n)});
}

SimplicialComplex SimplicialComplex::simplex(int n) {
  return from_generators(n, {VertexSet::full(n)});
}

bool SimplicialComplex::contains(const VertexSet& face) const {
  require_same_n(n_, face, "face");
  return contains(face.bits());
}

bool SimplicialComplex::contains(Bits face) const noexcept {
  if (!has_empty_face_) return false;
  if (face == 0) return true;
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](const VertexSet& f) { return (face & ~f.bits()) == 0; });
}

int SimplicialComplex::dimension() const noexcept {
  if (!has_empty_face_) return -2;
  int best = -1;
  for (const auto& f : facets_) best = std::max(best, f.cardinality() - 1);
  return best;
}

VertexSet SimplicialComplex::vertex_support() const {
  Bits all = 0;
  for (const auto& f : facets_) all |= f.bits();
  return VertexSet(n_, all);
}

void SimplicialComplex::for_each_face(
    const std::function<void(Bits)>& visit) const {
  if (!has_empty_face_) return;
  // Extend a face only by vertices above its current maximum so that every
  // face is reached along exactly one path; the candidates are the vertices
  // of facets containing the face.
  std::vector<Bits> stack{0};
  while (!stack.empty()) {
    const Bits face = stack.back();
    stack.pop_back();
    visit(face);
    Bits reachable = 0;
    for (const auto& f : facets_) {
      if ((face & ~f.bits()) == 0) reachable |= f.bits();
    }
    const int start = face == 0 ? 0 : 32 - std::countl_zero(face);
    reachable &= ~low_mask(start);
    for (; reachable != 0; reachable &= reachable - 1) {
      stack.push_back(face | (reachable & (~reachable + 1)));
    }
  }
}

SimplicialComplex complex_of_code(const Code& code) {
  return SimplicialComplex::from_generators(code.n(), code.words());
}

SimplicialComplex restrict(const SimplicialComplex& complex, const VertexSet& s) {
  require_same_n(complex.n(), s, "restriction set");
  if (complex.is_void()) return SimplicialComplex::void_complex(complex.n());
  std::vector<VertexSet> gens{VertexSet::empty(complex.n())};
  gens.reserve(complex.facets().size() + 1);
  for (const auto& f : complex.facets()) gens.push_back(f & s);
  return SimplicialComplex::from_generators(complex.n(), gens);
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex) {
  if (complex.is_void()) {
    throw Error(ErrorCode::kInvalidArgument,
                "void complex has no Stanley-Reisner presentation in this tool");
  }
  const int n = complex.n();
  std::vector<VertexSet> out;
  // A minimal nonface σ is τ ∪ {v} with τ = σ minus its largest vertex, a face.
  complex.for_each_face([&](Bits face) {
    const int start = face == 0 ? 0 : 32 - std::countl_zero(face);
    for (int v = start; v < n; ++v) {
      const Bits candidate = face | (Bits{1} << v);
      if (complex.contains(candidate)) continue;
      bool minimal = true;
      for (Bits rest = face; rest != 0 && minimal; rest &= rest - 1) {
        minimal = complex.contains(candidate & ~(rest & -rest));
      }
      if (minimal) out.emplace_back(n, candidate);
    }
  });
  std::sort(out.begin(), out.end(), GradedOrder{});
  return out;
}

bool is_clique_complex(const SimplicialComplex& complex) {
  const auto nonfaces = minimal_nonfaces(complex);
  return std::all_of(nonfaces.begin(), nonfaces.end(),
                     [](const VertexSet& s) { return s.cardinality() <= 2; });
}

SimplicialComplex clique_complex(int n, const std::vector<VertexSet>& edges) {
  std::vector<Bits> adjacency(static_cast<std::size_t>(std::max(n, 0)), 0);
  SimplicialComplex probe(n);  // validates n
  for (const auto& e : edges) {
    require_same_n(n, e, "edge");
    if (e.cardinality() != 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed edge " + e.to_braces() + ": expected two vertices");
    }
    const auto vs = e.vertices();
    adjacency[static_cast<std::size_t>(vs[0] - 1)] |= Bits{1} << (vs[1] - 1);
    adjacency[static_cast<std::size_t>(vs[1] - 1)] |= Bits{1} << (vs[0] - 1);
  }
  std::vector<Bits> cliques;
  collect_maximal_cliques(adjacency, 0, low_mask(n), 0, cliques);
  std::vector<VertexSet> gens{VertexSet::empty(n)};
  for (Bits c : cliques) gens.emplace_back(n, c);
  return SimplicialComplex::from_generators(n, gens);
}

std::vector<std::uint64_t> face_count_by_dimension(
    const SimplicialComplex& complex) {
  std::vector<std::uint64_t> counts;
  if (complex.is_void()) return counts;
  counts.assign(static_cast<std::size_t>(complex.dimension() + 2), 0);
  complex.for_each_face([&](Bits face) {
    ++counts[static_cast<std::size_t>(std::popcount(face))];
  });
  return counts;
}

}  // namespace codedim
