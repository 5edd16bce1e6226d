#include "codedim/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "codedim/error.hpp"
#include "json.hpp"

namespace codedim {

namespace {

using nlohmann::json;

struct RawWord {
  bool binary = false;
  std::string text;              // binary form
  std::vector<int> vertices;     // brace form
  std::size_t line = 0;
};

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  if (line == 0) throw Error(ErrorCode::kParse, what);
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::size_t line, const char* what) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    parse_error(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

RawWord parse_word(std::string_view token, std::size_t line) {
  RawWord word;
  word.line = line;
  if (!token.empty() && token.front() == '{') {
    if (token.back() != '}') parse_error(line, "unterminated brace set '" + std::string(token) + "'");
    std::string_view inner = trim(token.substr(1, token.size() - 2));
    while (!inner.empty()) {
      const auto comma = inner.find(',');
      const int v = parse_int(inner.substr(0, comma), line, "vertex");
      if (v < 1) parse_error(line, "vertices are numbered from 1");
      word.vertices.push_back(v);
      if (comma == std::string_view::npos) break;
      inner = inner.substr(comma + 1);
      if (trim(inner).empty()) parse_error(line, "trailing comma in brace set");
    }
    return word;
  }
  if (token.empty() || token.find_first_not_of("01") != std::string_view::npos) {
    parse_error(line, "expected a binary string or a brace set, got '" + std::string(token) + "'");
  }
  word.binary = true;
  word.text = std::string(token);
  return word;
}

Code assemble(const std::vector<RawWord>& raw, std::optional<int> declared) {
  std::optional<int> n = declared;
  if (!n) {
    for (const auto& w : raw) {
      if (!w.binary) continue;
      const int len = static_cast<int>(w.text.size());
      if (n && *n != len) {
        parse_error(w.line, "binary codewords have different lengths (" +
                                std::to_string(*n) + " and " + std::to_string(len) + ")");
      }
      n = len;
    }
  }
  if (!n) {
    int largest = 0;
    for (const auto& w : raw) {
      for (int v : w.vertices) largest = std::max(largest, v);
    }
    n = largest;
  }
  if (*n < 0 || *n > kMaxRepresentableVertices) {
    parse_error(0, "vertex count " + std::to_string(*n) + " is not supported (max " +
                       std::to_string(kMaxRepresentableVertices) + ")");
  }
  std::vector<VertexSet> words;
  words.reserve(raw.size());
  for (const auto& w : raw) {
    VertexSet::Bits bits = 0;
    if (w.binary) {
      if (static_cast<int>(w.text.size()) != *n) {
        parse_error(w.line, "codeword '" + w.text + "' has length " +
                                std::to_string(w.text.size()) + ", expected " +
                                std::to_string(*n));
      }
      for (std::size_t j = 0; j < w.text.size(); ++j) {
        if (w.text[j] == '1') bits |= VertexSet::Bits{1} << j;
      }
    } else {
      for (int v : w.vertices) {
        if (v > *n) {
          parse_error(w.line, "vertex " + std::to_string(v) + " exceeds n = " + std::to_string(*n));
        }
        bits |= VertexSet::Bits{1} << (v - 1);
      }
    }
    words.emplace_back(*n, bits);
  }
  return Code(*n, std::move(words));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json witness_json(const WitnessedDimension& d) {
  if (!d.witness) return nullptr;
  return json{{"i", d.witness->step}, {"sigma", d.witness->sigma.to_binary()}};
}

WitnessedDimension witnessed_from_json(const json& value, const json& witness, int n) {
  WitnessedDimension d;
  d.value = value.get<int>();
  if (!witness.is_null()) {
    const auto sigma = witness.at("sigma").get<std::string>();
    VertexSet::Bits bits = 0;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      if (sigma[j] == '1') bits |= VertexSet::Bits{1} << j;
    }
    d.witness = BettiWitness{witness.at("i").get<int>(), VertexSet(n, bits)};
  }
  return d;
}

std::string witness_text(const WitnessedDimension& d) {
  if (!d.witness) return "(empty maximum)";
  return "(i = " + std::to_string(d.witness->step) + ", sigma = " +
         d.witness->sigma.to_binary() + ")";
}

}  // namespace

Code parse_code(std::string_view text) {
  std::vector<RawWord> raw;
  std::optional<int> declared;
  bool seen_content = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!seen_content && line.front() == 'n') {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos || trim(line.substr(0, eq)) != "n") {
        parse_error(line_no, "expected 'n=<int>'");
      }
      declared = parse_int(line.substr(eq + 1), line_no, "vertex count");
      seen_content = true;
      continue;
    }
    seen_content = true;
    raw.push_back(parse_word(line, line_no));
  }
  return assemble(raw, declared);
}

Code read_code_file(const std::string& path) { return parse_code(read_file(path)); }

SimplicialComplex parse_complex(std::string_view text) {
  return complex_of_code(parse_code(text));
}

SimplicialComplex read_complex_file(const std::string& path) {
  return parse_complex(read_file(path));
}

Code parse_codeword_list(std::string_view list, std::optional<int> n) {
  std::vector<RawWord> raw;
  std::string token;
  int depth = 0;
  auto flush = [&] {
    if (!token.empty()) raw.push_back(parse_word(token, 0));
    token.clear();
  };
  for (char ch : list) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    const bool separator = std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';';
    if (depth == 0 && separator) {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      token += ch;
    }
  }
  if (depth != 0) parse_error(0, "unbalanced braces in codeword list");
  flush();
  return assemble(raw, n);
}

std::string betti_to_json(const BettiTable& table) {
  json out = json::array();
  for (const auto& [key, beta] : table.entries()) {
    out.push_back({{"i", key.step}, {"sigma", key.sigma.to_binary()}, {"beta", beta}});
  }
  return out.dump(2) + "\n";
}

BettiTable betti_from_json(std::string_view text, const PrimeField& field) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid Betti JSON: ") + e.what());
  }
  if (!parsed.is_array()) throw Error(ErrorCode::kParse, "Betti JSON must be a list");
  std::optional<int> n;
  std::vector<std::pair<BettiKey, std::uint64_t>> entries;
  try {
    for (const auto& e : parsed) {
      const auto sigma = e.at("sigma").get<std::string>();
      if (n && *n != static_cast<int>(sigma.size())) {
        throw Error(ErrorCode::kParse, "Betti JSON gradings have different lengths");
      }
      n = static_cast<int>(sigma.size());
      if (sigma.find_first_not_of("01") != std::string::npos) {
        throw Error(ErrorCode::kParse, "Betti JSON grading '" + sigma + "' is not binary");
      }
      VertexSet::Bits bits = 0;
      for (std::size_t j = 0; j < sigma.size(); ++j) {
        if (sigma[j] == '1') bits |= VertexSet::Bits{1} << j;
      }
      entries.push_back({{e.at("i").get<int>(), VertexSet(*n, bits)},
                         e.at("beta").get<std::uint64_t>()});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid Betti JSON entry: ") + e.what());
  }
  BettiTable table(n.value_or(0), field);
  for (const auto& [key, beta] : entries) table.add(key.step, key.sigma, beta);
  return table;
}

std::string betti_to_m2(const BettiTable& table) {
  static constexpr std::string_view kHead = "BettiTally{";
  std::string out;
  bool first = true;
  for (const auto& [key, beta] : table.entries()) {
    std::string bits;
    for (int j = 0; j < table.n(); ++j) {
      if (j > 0) bits += ", ";
      bits += key.sigma.contains(j + 1) ? '1' : '0';
    }
    const std::string entry = "(" + std::to_string(key.step) + ", {" + bits + "}, " +
                              std::to_string(key.sigma.cardinality()) + ") => " +
                              std::to_string(beta);
    if (first) {
      out += std::string(kHead) + entry + "}\n";
      first = false;
    } else {
      out += std::string(kHead.size(), ' ') + entry + "\n";
    }
  }
  if (first) out = "BettiTally{}\n";
  return out;
}

std::string betti_to_text(const BettiTable& table) {
  std::ostringstream out;
  out << "field: GF(" << table.field().characteristic() << ")\n";
  out << "vertices: " << table.n() << "\n";
  out << "level ranks:";
  for (auto r : level_ranks(table)) out << ' ' << r;
  out << "\n";
  out << "step  grading";
  out << std::string(static_cast<std::size_t>(std::max(0, table.n() - 7)), ' ');
  out << "  |sigma|  beta\n";
  const auto width = static_cast<std::size_t>(std::max(7, table.n()));
  for (const auto& [key, beta] : table.entries()) {
    std::string grading = key.sigma.to_binary();
    grading.resize(width, ' ');
    std::string step = std::to_string(key.step);
    step.resize(4, ' ');
    std::string size = std::to_string(key.sigma.cardinality());
    size.resize(7, ' ');
    out << step << "  " << grading << "  " << size << "  " << beta << "\n";
  }
  return out.str();
}

std::string report_to_json(const DimensionReport& report) {
  json unreduced_witness = nullptr;
  if (report.hom_unreduced_degree) unreduced_witness = json{{"degree", *report.hom_unreduced_degree}};
  json out = {
      {"n", report.n},
      {"field", report.field.characteristic()},
      {"d_L", report.leray.value},
      {"d_H", report.helly.value},
      {"d_hom_betti", report.hom_betti.value},
      {"d_hom_unreduced", report.hom_unreduced},
      {"witnesses",
       {{"d_L", witness_json(report.leray)},
        {"d_H", witness_json(report.helly)},
        {"d_hom_betti", witness_json(report.hom_betti)},
        {"d_hom_unreduced", unreduced_witness}}},
      {"oracles",
       {{"leray_direct_agrees", report.leray_direct_agrees},
        {"helly_direct_agrees", report.helly_direct_agrees}}},
  };
  return out.dump(2) + "\n";
}

DimensionReport report_from_json(std::string_view text) {
  try {
    const json in = json::parse(text);
    DimensionReport report;
    report.n = in.at("n").get<int>();
    report.field = PrimeField(in.at("field").get<std::uint32_t>());
    const auto& w = in.at("witnesses");
    report.leray = witnessed_from_json(in.at("d_L"), w.at("d_L"), report.n);
    report.helly = witnessed_from_json(in.at("d_H"), w.at("d_H"), report.n);
    report.hom_betti = witnessed_from_json(in.at("d_hom_betti"), w.at("d_hom_betti"), report.n);
    report.hom_unreduced = in.at("d_hom_unreduced").get<int>();
    if (const auto& u = w.at("d_hom_unreduced"); !u.is_null()) {
      report.hom_unreduced_degree = u.at("degree").get<int>();
    }
    report.leray_direct_agrees = in.at("oracles").at("leray_direct_agrees").get<bool>();
    report.helly_direct_agrees = in.at("oracles").at("helly_direct_agrees").get<bool>();
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid report JSON: ") + e.what());
  }
}

std::string report_to_text(const DimensionReport& report) {
  std::ostringstream out;
  out << "field: GF(" << report.field.characteristic() << ")\n";
  out << "vertices: " << report.n << "\n";
  out << "d_L = " << report.leray.value << "  " << witness_text(report.leray) << "\n";
  out << "d_H = " << report.helly.value << "  " << witness_text(report.helly) << "\n";
  out << "d_hom (reduced, from Betti table) = " << report.hom_betti.value << "  "
      << witness_text(report.hom_betti) << "\n";
  out << "d_hom (unreduced homology) = " << report.hom_unreduced;
  if (report.hom_unreduced_degree) {
    out << "  (top degree " << *report.hom_unreduced_degree << ")";
  }
  out << "\n";
  out << "direct Leray check: " << (report.leray_direct_agrees ? "agrees" : "DISAGREES") << "\n";
  out << "direct Helly check: " << (report.helly_direct_agrees ? "agrees" : "DISAGREES") << "\n";
  return out.str();
}

}  // namespace codedim
