#include "codedim/oracle_check.hpp"

#include <random>
#include <sstream>

#include "codedim/betti.hpp"
#include "codedim/dimensions.hpp"
#include "codedim/error.hpp"
#include "codedim/generators.hpp"
#include "codedim/homology.hpp"

namespace codedim {

namespace {

constexpr std::size_t kMaxReportedFailures = 10;

// Random complex for one trial. Odd trials also drop a random set of
// vertices so that degree-one Stanley-Reisner generators show up.
SimplicialComplex trial_complex(int n, std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 engine(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
  const double density = 0.15 + 0.7 * static_cast<double>(engine() >> 11) * 0x1.0p-53;
  auto complex = random_complex(n, density, engine());
  if (trial % 2 == 1) {
    const auto keep = static_cast<VertexSet::Bits>(engine()) & low_mask(n);
    complex = restrict(complex, VertexSet(n, keep | 1U));
  }
  return complex;
}

void corrupt(BettiTable& table) {
  const auto full = VertexSet::full(table.n());
  table.add(1, full, 1);
}

// Empty string on success, otherwise the first violated invariant.
std::string check_trial(const SimplicialComplex& complex, const OracleCheckConfig& config) {
  const PrimeField& field = config.field;
  auto table = hochster_table(complex, field, {.max_vertices = kMaxOracleCheckVertices, .workers = 1});
  if (config.corrupt_table) corrupt(table);

  const auto leray = leray_dimension(table).value;
  const auto helly = helly_dimension(table).value;
  const auto hom = hom_dimension_betti(table).value;
  if (leray < helly) return "d_L < d_H";
  if (leray < hom) return "d_L < d_hom";
  if (helly != helly_dimension_direct(complex)) return "Helly table/direct mismatch";
  if (leray != leray_dimension_direct(complex, field)) return "Leray table/direct mismatch";

  std::vector<VertexSet> step_one;
  for (const auto& [key, beta] : table.entries()) {
    if (key.step != 1) continue;
    if (beta != 1) return "beta_1 at " + key.sigma.to_binary() + " is not 1";
    step_one.push_back(key.sigma);
  }
  if (step_one != minimal_nonfaces(complex)) return "step-1 gradings differ from minimal nonfaces";

  const int n = complex.n();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto sub = restrict(complex, VertexSet(n, static_cast<VertexSet::Bits>(s)));
    if (euler_characteristic(reduced_homology(sub, field)) != reduced_euler_characteristic(sub)) {
      return "Euler identity fails on restriction " + VertexSet(n, static_cast<VertexSet::Bits>(s)).to_binary();
    }
  }
  if (is_clique_complex(complex) != (helly <= 1)) return "clique complex <=> d_H <= 1 fails";
  return {};
}

}  // namespace

OracleCheckSummary run_oracle_check(const OracleCheckConfig& config) {
  if (config.n < 1 || config.n > kMaxOracleCheckVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle check runs exhaustive sub-checks and needs 1 <= n <= " +
                    std::to_string(kMaxOracleCheckVertices));
  }
  OracleCheckSummary summary;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const auto complex = trial_complex(config.n, config.seed, t);
    const auto problem = check_trial(complex, config);
    ++summary.trials;
    if (problem.empty()) {
      ++summary.passed;
      continue;
    }
    ++summary.failed;
    if (summary.failures.size() < kMaxReportedFailures) {
      std::string facets;
      for (const auto& f : complex.facets()) facets += " " + f.to_binary();
      summary.failures.push_back("trial " + std::to_string(t) + ": " + problem +
                                 " (facets:" + facets + ")");
    }
  }
  return summary;
}

std::string summary_to_text(const OracleCheckSummary& summary) {
  std::ostringstream out;
  out << "trials: " << summary.trials << "\n";
  out << "passed: " << summary.passed << "\n";
  out << "failed: " << summary.failed << "\n";
  for (const auto& f : summary.failures) out << "  " << f << "\n";
  return out.str();
}

}  // namespace codedim
