#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "codedim/complex.hpp"
#include "codedim/field_linalg.hpp"

namespace codedim {

// (step, grading) key of a multigraded Betti number. Ordered by step, then
// |σ|, then bit value, which is the order of every emitted table.
struct BettiKey {
  int step = 0;
  VertexSet sigma;

  friend bool operator==(const BettiKey&, const BettiKey&) = default;
  friend bool operator<(const BettiKey& a, const BettiKey& b) {
    if (a.step != b.step) return a.step < b.step;
    return GradedOrder{}(a.sigma, b.sigma);
  }
};

// Nonzero multigraded Betti numbers β_{i,σ}(S/I_Δ). Zero entries are never
// stored.
class BettiTable {
 public:
  using Entries = std::map<BettiKey, std::uint64_t>;

  BettiTable() = default;
  BettiTable(int n, PrimeField field) : n_(n), field_(field) {}

  int n() const noexcept { return n_; }
  const PrimeField& field() const noexcept { return field_; }
  const Entries& entries() const noexcept { return entries_; }

  std::uint64_t beta(int step, const VertexSet& sigma) const;
  // Adds to an entry; a zero increment is ignored.
  void add(int step, const VertexSet& sigma, std::uint64_t beta);
  // Overwrites an entry; zero removes it.
  void set(int step, const VertexSet& sigma, std::uint64_t beta);

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_ = 0;
  PrimeField field_;
  Entries entries_;
};

struct SweepOptions {
  // Refuse complexes on more vertices than this.
  int max_vertices = kDefaultMaxVertices;
  // Worker threads for the per-σ sweep; 0 picks the hardware concurrency.
  unsigned workers = 0;
};

// β_{i,σ} = dim H̃_{|σ|-i-1}(Δ|_σ) for every σ ⊆ [n], plus (0, ∅) ↦ 1.
// Throws Error(kGuard) when n exceeds options.max_vertices and
// Error(kInvalidArgument) for the void complex.
BettiTable hochster_table(const SimplicialComplex& complex,
                          const PrimeField& field = {},
                          const SweepOptions& options = {});

// R_{i,σ} = |σ| - i for a positive entry with i >= 1.
struct RValue {
  int step = 0;
  VertexSet sigma;
  int value = 0;

  friend bool operator==(const RValue&, const RValue&) = default;
};

std::vector<RValue> r_values(const BettiTable& table);

// Entry i is Σ_σ β_{i,σ}; trailing zeros trimmed.
std::vector<std::uint64_t> level_ranks(const BettiTable& table);

}  // namespace codedim
