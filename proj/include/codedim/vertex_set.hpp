#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace codedim {

// Largest ambient vertex count a VertexSet can represent.
inline constexpr int kMaxRepresentableVertices = 32;
// Default guard for the exponential sweeps (2^n induced subcomplexes).
inline constexpr int kDefaultMaxVertices = 24;

// A subset of [n] = {1..n} stored as a bit pattern: bit i set means vertex
// i+1 is a member. Used for faces, codewords and squarefree multidegrees.
class VertexSet {
 public:
  using Bits = std::uint32_t;

  constexpr VertexSet() = default;

  // Throws Error(kInvalidArgument) when n is out of range or bits has members
  // at positions >= n.
  VertexSet(int n, Bits bits);

  static VertexSet empty(int n) { return VertexSet(n, 0); }
  static VertexSet full(int n);
  // Vertices are 1-based, as in {1,2,4}.
  static VertexSet of(int n, std::initializer_list<int> vertices);
  static VertexSet of(int n, const std::vector<int>& vertices);

  constexpr int n() const noexcept { return n_; }
  constexpr Bits bits() const noexcept { return bits_; }
  int cardinality() const noexcept { return std::popcount(bits_); }
  bool is_empty() const noexcept { return bits_ == 0; }

  bool contains(int vertex) const noexcept {
    return vertex >= 1 && vertex <= n_ && ((bits_ >> (vertex - 1)) & 1U) != 0;
  }
  bool is_subset_of(const VertexSet& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  VertexSet with(int vertex) const;
  VertexSet without(int vertex) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator|(const VertexSet& other) const;
  // Complement inside [n].
  VertexSet complement() const;

  // 1-based members in increasing order.
  std::vector<int> vertices() const;

  // "1101" style: character j describes vertex j+1.
  std::string to_binary() const;
  // "{1,2,4}" style; the empty set prints as "{}".
  std::string to_braces() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Order by ambient size, then by bit-pattern value.
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  Bits bits_ = 0;
  int n_ = 0;
};

// Mask with the low n bits set.
constexpr VertexSet::Bits low_mask(int n) {
  return n >= 32 ? ~VertexSet::Bits{0} : ((VertexSet::Bits{1} << n) - 1);
}

// Ordering used for Betti tables and reports: cardinality, then bit value.
struct GradedOrder {
  bool operator()(const VertexSet& a, const VertexSet& b) const noexcept {
    const int ca = a.cardinality();
    const int cb = b.cardinality();
    if (ca != cb) return ca < cb;
    return a.bits() < b.bits();
  }
};

}  // namespace codedim
