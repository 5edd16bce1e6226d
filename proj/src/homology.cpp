#include "codedim/homology.hpp"

#include <algorithm>
#include <bit>

namespace codedim {

namespace {

using Bits = VertexSet::Bits;

// faces[c] holds the faces with c vertices, sorted by bit value.
std::vector<std::vector<Bits>> faces_by_cardinality(const SimplicialComplex& complex) {
  std::vector<std::vector<Bits>> faces(static_cast<std::size_t>(complex.dimension() + 2));
  complex.for_each_face([&](Bits f) {
    faces[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  });
  for (auto& level : faces) std::sort(level.begin(), level.end());
  return faces;
}

// Boundary map from faces with c vertices to faces with c - 1 vertices, one
// sparse column per source face. Removing the j-th smallest vertex carries
// the sign (-1)^j.
std::vector<SparseColumn> boundary_columns(const std::vector<Bits>& targets,
                                           const std::vector<Bits>& sources,
                                           const PrimeField& field) {
  std::vector<SparseColumn> columns(sources.size());
  for (std::size_t col = 0; col < sources.size(); ++col) {
    auto& column = columns[col];
    column.reserve(static_cast<std::size_t>(std::popcount(sources[col])));
    int position = 0;
    for (Bits rest = sources[col]; rest != 0; rest &= rest - 1, ++position) {
      const Bits lowest = rest & (~rest + 1);
      const Bits facet = sources[col] & ~lowest;
      const auto it = std::lower_bound(targets.begin(), targets.end(), facet);
      column.emplace_back(static_cast<std::uint32_t>(it - targets.begin()),
                          field.reduce(position % 2 == 0 ? 1 : -1));
    }
    std::sort(column.begin(), column.end());
  }
  return columns;
}

// A vertex shared by every facet makes the complex a cone, hence acyclic.
bool has_cone_point(const SimplicialComplex& complex) {
  const auto& facets = complex.facets();
  if (facets.empty()) return false;
  Bits common = facets.front().bits();
  for (const auto& f : facets) common &= f.bits();
  return common != 0;
}

}  // namespace

std::uint64_t HomologyProfile::at(int degree) const noexcept {
  if (degree < first_degree_ || degree > last_degree()) return 0;
  return dims_[static_cast<std::size_t>(degree - first_degree_)];
}

bool HomologyProfile::is_zero() const noexcept {
  return std::all_of(dims_.begin(), dims_.end(), [](auto d) { return d == 0; });
}

ReducedHomologyProfile reduced_homology(const SimplicialComplex& complex,
                                        const PrimeField& field) {
  if (complex.is_void()) return HomologyProfile(field, -1, {});
  if (has_cone_point(complex)) {
    return HomologyProfile(field, -1,
                           std::vector<std::uint64_t>(static_cast<std::size_t>(complex.dimension() + 2), 0));
  }
  const auto faces = faces_by_cardinality(complex);
  const std::size_t levels = faces.size();  // cardinalities 0..dim+1
  // ranks[c] = rank of the boundary out of faces with c vertices; ranks[0] = 0.
  std::vector<std::size_t> ranks(levels + 1, 0);
  for (std::size_t c = 1; c < levels; ++c) {
    ranks[c] = rank_sparse(boundary_columns(faces[c - 1], faces[c], field), field);
  }
  std::vector<std::uint64_t> dims(levels);
  for (std::size_t c = 0; c < levels; ++c) {
    dims[c] = faces[c].size() - ranks[c] - ranks[c + 1];
  }
  return HomologyProfile(field, -1, std::move(dims));
}

HomologyProfile unreduced_homology(const SimplicialComplex& complex,
                                   const PrimeField& field) {
  if (complex.dimension() < 0) return HomologyProfile(field, 0, {});
  const auto reduced = reduced_homology(complex, field);
  std::vector<std::uint64_t> dims;
  for (int k = 0; k <= reduced.last_degree(); ++k) dims.push_back(reduced.at(k));
  dims[0] += 1;
  return HomologyProfile(field, 0, std::move(dims));
}

int top_nonzero_degree(const HomologyProfile& profile, int floor) {
  for (int k = profile.last_degree(); k >= profile.first_degree(); --k) {
    if (profile.at(k) > 0) return k;
  }
  return floor;
}

std::int64_t euler_characteristic(const HomologyProfile& profile) {
  std::int64_t sum = 0;
  for (int k = profile.first_degree(); k <= profile.last_degree(); ++k) {
    const auto d = static_cast<std::int64_t>(profile.at(k));
    sum += (k % 2 == 0) ? d : -d;
  }
  return sum;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t sum = 0;
  complex.for_each_face([&](Bits f) { sum += (std::popcount(f) % 2 == 1) ? 1 : -1; });
  return sum;
}

}  // namespace codedim
