#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "codedim/complex.hpp"
#include "oracle.hpp"

namespace testing_helpers {

// "1101" -> VertexSet on n = 4.
inline codedim::VertexSet vs(std::string_view binary) {
  codedim::VertexSet::Bits bits = 0;
  for (std::size_t j = 0; j < binary.size(); ++j) {
    if (binary[j] == '1') bits |= codedim::VertexSet::Bits{1} << j;
  }
  return codedim::VertexSet(static_cast<int>(binary.size()), bits);
}

inline std::vector<codedim::VertexSet> sets(std::initializer_list<std::string_view> words) {
  std::vector<codedim::VertexSet> out;
  for (auto w : words) out.push_back(vs(w));
  return out;
}

inline std::vector<std::string> binaries(const std::vector<codedim::VertexSet>& s) {
  std::vector<std::string> out;
  for (const auto& v : s) out.push_back(v.to_binary());
  return out;
}

inline oracle::FaceTable face_table(const codedim::SimplicialComplex& c) {
  if (c.is_void()) {
    return oracle::FaceTable{c.n(), std::vector<bool>(std::size_t{1} << c.n(), false)};
  }
  std::vector<oracle::Bits> gens{0};
  for (const auto& f : c.facets()) gens.push_back(f.bits());
  return oracle::FaceTable::from_generators(c.n(), gens);
}

}  // namespace testing_helpers
