#pragma once

#include <optional>

#include "codedim/betti.hpp"
#include "codedim/complex.hpp"
#include "codedim/field_linalg.hpp"

namespace codedim {

struct BettiWitness {
  int step = 0;
  VertexSet sigma;

  friend bool operator==(const BettiWitness&, const BettiWitness&) = default;
};

// A dimension bound together with the table entry that attains it. The
// witness is empty when the defining maximum ranges over nothing, in which
// case the value is 0.
struct WitnessedDimension {
  int value = 0;
  std::optional<BettiWitness> witness;
};

// Leray dimension: max R_{i,σ} over all entries with i >= 1. Ties go to the
// smallest step, then the smallest bit pattern.
WitnessedDimension leray_dimension(const BettiTable& table);

// Helly dimension: max |σ| - 1 over step-1 entries.
WitnessedDimension helly_dimension(const BettiTable& table);

// Homological dimension read off the full grading σ = [n] (reduced
// convention): max |σ| - i over entries (i, [n]).
WitnessedDimension hom_dimension_betti(const BettiTable& table);

// 1 + the largest k >= 0 with H̃_k(Δ|_σ) ≠ 0 for some σ; 0 if there is none.
int leray_dimension_direct(const SimplicialComplex& complex,
                           const PrimeField& field = {},
                           const SweepOptions& options = {});

// max |σ| - 1 over the minimal nonfaces; 0 if there are none.
int helly_dimension_direct(const SimplicialComplex& complex);

// 1 + the top degree of ordinary (unreduced) homology. Requires at least one
// vertex; throws Error(kInvalidArgument) otherwise.
int hom_dimension_unreduced(const SimplicialComplex& complex,
                            const PrimeField& field = {});

struct DimensionReport {
  int n = 0;
  PrimeField field;
  WitnessedDimension leray;
  WitnessedDimension helly;
  WitnessedDimension hom_betti;
  // 0 for complexes without vertices.
  int hom_unreduced = 0;
  // Top unreduced homology degree behind hom_unreduced.
  std::optional<int> hom_unreduced_degree;
  bool leray_direct_agrees = false;
  bool helly_direct_agrees = false;
};

// Checks a table against the complex it claims to describe: the inequalities
// d_L >= d_H and d_L >= d_hom, and agreement of the Betti formulas with the
// direct Leray and Helly computations. Throws Error(kConsistency) on any
// mismatch and otherwise returns the assembled report.
DimensionReport checked_report(const SimplicialComplex& complex,
                               const BettiTable& table,
                               const SweepOptions& options = {});

// Builds the Hochster table once and returns checked_report on it.
DimensionReport full_report(const SimplicialComplex& complex,
                            const PrimeField& field = {},
                            const SweepOptions& options = {});

}  // namespace codedim
