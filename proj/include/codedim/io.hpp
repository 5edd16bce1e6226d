#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "codedim/betti.hpp"
#include "codedim/complex.hpp"
#include "codedim/dimensions.hpp"

namespace codedim {

// Code files: one codeword per line, '#' starts a comment, and the first
// non-comment line may be "n=<int>". A codeword is a binary string ("1101",
// length n) or a brace set of 1-based vertices ("{1,2,4}", "{}"). Without an
// explicit n, the binary length or else the largest listed vertex is used.
// Throws Error(kParse) with the offending line number.
Code parse_code(std::string_view text);
Code read_code_file(const std::string& path);

// Same grammar; each line is a facet (non-maximal lines are absorbed).
SimplicialComplex parse_complex(std::string_view text);
SimplicialComplex read_complex_file(const std::string& path);

// Inline list such as "1100 1010 {3,4}"; words are separated by whitespace,
// ',' or ';' outside braces.
Code parse_codeword_list(std::string_view list, std::optional<int> n = std::nullopt);

// [{"beta":..,"i":..,"sigma":"0110"}, ...] in table order.
std::string betti_to_json(const BettiTable& table);
BettiTable betti_from_json(std::string_view json, const PrimeField& field);

// Macaulay2 BettiTally layout:
//   BettiTally{(0, {0, 0, 0, 0, 0}, 0) => 1}
//              (1, {1, 1, 0, 0, 0}, 2) => 1
std::string betti_to_m2(const BettiTable& table);
std::string betti_to_text(const BettiTable& table);

std::string report_to_json(const DimensionReport& report);
DimensionReport report_from_json(std::string_view json);
std::string report_to_text(const DimensionReport& report);

}  // namespace codedim
