#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "codedim/vertex_set.hpp"

namespace codedim {

// A combinatorial code: a set of codewords on n neurons. Words are kept
// sorted by bit value with duplicates collapsed; the empty word is allowed.
class Code {
 public:
  Code() = default;
  // Throws Error(kInvalidArgument) if some word lives on a different n.
  Code(int n, std::vector<VertexSet> words);

  int n() const noexcept { return n_; }
  const std::vector<VertexSet>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool contains(const VertexSet& word) const;

 private:
  int n_ = 0;
  std::vector<VertexSet> words_;
};

// Downward-closed family of faces on [n], stored through its facets.
//
// Two degenerate complexes are distinguished: the void complex has no faces
// at all, while the irrelevant complex {∅} has only the empty face. Every
// other complex contains the empty face plus the subsets of its facets.
class SimplicialComplex {
 public:
  // Void complex on n vertices.
  explicit SimplicialComplex(int n = 0);

  // Downward closure of the given generating sets. Non-maximal generators are
  // dropped. A nonempty generator list (even {∅}) gives a nonvoid complex.
  static SimplicialComplex from_generators(int n,
                                           const std::vector<VertexSet>& gens);
  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n); }
  static SimplicialComplex irrelevant(int n);
  static SimplicialComplex simplex(int n);

  int n() const noexcept { return n_; }
  // Maximal faces, sorted by bit value; the empty face never appears here.
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  bool contains_empty_face() const noexcept { return has_empty_face_; }
  bool is_void() const noexcept { return !has_empty_face_; }

  bool contains(const VertexSet& face) const;
  bool contains(VertexSet::Bits face) const noexcept;

  // Largest face dimension; -1 for {∅}, and -2 for the void complex.
  int dimension() const noexcept;
  // Union of the facets.
  VertexSet vertex_support() const;

  // Calls visit(face) for every face, the empty face included. Each face is
  // visited exactly once, in no particular order.
  void for_each_face(const std::function<void(VertexSet::Bits)>& visit) const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  bool has_empty_face_ = false;
  std::vector<VertexSet> facets_;
};

SimplicialComplex complex_of_code(const Code& code);

// Induced subcomplex Δ|_s = {τ ∈ Δ | τ ⊆ s}; the ambient n is kept.
SimplicialComplex restrict(const SimplicialComplex& complex, const VertexSet& s);

// Minimal nonfaces in graded order. Throws for the void complex.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

// True iff every minimal nonface has at most two vertices.
bool is_clique_complex(const SimplicialComplex& complex);

// Clique (flag) complex of a graph; each edge must have exactly two vertices.
SimplicialComplex clique_complex(int n, const std::vector<VertexSet>& edges);

// Entry k+1 holds the number of faces of dimension k, starting at k = -1.
std::vector<std::uint64_t> face_count_by_dimension(
    const SimplicialComplex& complex);

}  // namespace codedim
