#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codedim/field_linalg.hpp"

namespace codedim {

inline constexpr int kMaxOracleCheckVertices = 8;

struct OracleCheckConfig {
  int n = 6;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  PrimeField field;
  // Test hook: perturb every computed table before checking it.
  bool corrupt_table = false;
};

struct OracleCheckSummary {
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  // One line per failed trial, capped at the first few.
  std::vector<std::string> failures;
};

// Runs the structural invariants on `trials` seeded random complexes on n
// vertices: d_L >= d_H and d_L >= d_hom, Helly and Leray oracle agreement,
// step-1 gradings equal to the minimal nonfaces (each with β = 1), the reduced
// Euler identity on every induced subcomplex, and clique complex <=> d_H <= 1.
// Throws Error(kInvalidArgument) when n is outside [1, 8].
OracleCheckSummary run_oracle_check(const OracleCheckConfig& config);

std::string summary_to_text(const OracleCheckSummary& summary);

}  // namespace codedim
