#include "codedim/dimensions.hpp"

#include <algorithm>
#include <string>

#include "codedim/error.hpp"
#include "codedim/homology.hpp"

namespace codedim {

namespace {

// Entries iterate in (step, |σ|, bits) order and equal R at equal step means
// equal |σ|, so keeping the first maximum breaks ties by step, then bits.
template <typename Filter>
WitnessedDimension max_r_value(const BettiTable& table, Filter keep) {
  WitnessedDimension best;
  for (const auto& [key, beta] : table.entries()) {
    if (key.step < 1 || !keep(key)) continue;
    const int r = key.sigma.cardinality() - key.step;
    const bool better = !best.witness || r > best.value;
    if (better) {
      best.value = r;
      best.witness = BettiWitness{key.step, key.sigma};
    }
  }
  return best;
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::kConsistency, "internal consistency failure: " + what);
}

}  // namespace

WitnessedDimension leray_dimension(const BettiTable& table) {
  return max_r_value(table, [](const BettiKey&) { return true; });
}

WitnessedDimension helly_dimension(const BettiTable& table) {
  return max_r_value(table, [](const BettiKey& k) { return k.step == 1; });
}

WitnessedDimension hom_dimension_betti(const BettiTable& table) {
  const auto full = VertexSet::full(table.n());
  return max_r_value(table, [&](const BettiKey& k) { return k.sigma == full; });
}

int leray_dimension_direct(const SimplicialComplex& complex,
                           const PrimeField& field,
                           const SweepOptions& options) {
  const int n = complex.n();
  if (n > options.max_vertices) {
    throw Error(ErrorCode::kGuard, "complex on " + std::to_string(n) +
                                       " vertices exceeds the guard of " +
                                       std::to_string(options.max_vertices));
  }
  int top = -1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const VertexSet sigma(n, static_cast<VertexSet::Bits>(s));
    const auto profile = reduced_homology(restrict(complex, sigma), field);
    top = std::max(top, top_nonzero_degree(profile, -1));
  }
  return top + 1;
}

int helly_dimension_direct(const SimplicialComplex& complex) {
  int best = 0;
  for (const auto& s : minimal_nonfaces(complex)) {
    best = std::max(best, s.cardinality() - 1);
  }
  return best;
}

int hom_dimension_unreduced(const SimplicialComplex& complex,
                            const PrimeField& field) {
  if (complex.dimension() < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "unreduced homological dimension needs at least one vertex");
  }
  return top_nonzero_degree(unreduced_homology(complex, field), -1) + 1;
}

DimensionReport checked_report(const SimplicialComplex& complex,
                               const BettiTable& table,
                               const SweepOptions& options) {
  if (table.n() != complex.n()) inconsistent("table and complex sizes differ");
  const PrimeField& field = table.field();

  DimensionReport report;
  report.n = complex.n();
  report.field = field;
  report.leray = leray_dimension(table);
  report.helly = helly_dimension(table);
  report.hom_betti = hom_dimension_betti(table);
  if (complex.dimension() >= 0) {
    const auto profile = unreduced_homology(complex, field);
    const int top = top_nonzero_degree(profile, -1);
    report.hom_unreduced = top + 1;
    if (top >= 0) report.hom_unreduced_degree = top;
  }

  if (report.leray.value < report.helly.value) {
    inconsistent("d_L = " + std::to_string(report.leray.value) + " < d_H = " +
                 std::to_string(report.helly.value));
  }
  if (report.leray.value < report.hom_betti.value) {
    inconsistent("d_L = " + std::to_string(report.leray.value) + " < d_hom = " +
                 std::to_string(report.hom_betti.value));
  }
  const int helly_direct = helly_dimension_direct(complex);
  report.helly_direct_agrees = helly_direct == report.helly.value;
  if (!report.helly_direct_agrees) {
    inconsistent("Helly dimension from the table is " +
                 std::to_string(report.helly.value) + " but minimal nonfaces give " +
                 std::to_string(helly_direct));
  }
  const int leray_direct = leray_dimension_direct(complex, field, options);
  report.leray_direct_agrees = leray_direct == report.leray.value;
  if (!report.leray_direct_agrees) {
    inconsistent("Leray dimension from the table is " +
                 std::to_string(report.leray.value) +
                 " but induced subcomplex homology gives " + std::to_string(leray_direct));
  }
  return report;
}

DimensionReport full_report(const SimplicialComplex& complex,
                            const PrimeField& field,
                            const SweepOptions& options) {
  return checked_report(complex, hochster_table(complex, field, options), options);
}

}  // namespace codedim
