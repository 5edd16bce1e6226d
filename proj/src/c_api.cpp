// extern "C" surface over the C++ core. Exceptions never cross this boundary.

#include "codedim/codedim.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "codedim/betti.hpp"
#include "codedim/complex.hpp"
#include "codedim/dimensions.hpp"
#include "codedim/error.hpp"
#include "codedim/generators.hpp"
#include "codedim/io.hpp"
#include "codedim/oracle_check.hpp"

struct codedim_complex {
  codedim::SimplicialComplex value;
};

struct codedim_table {
  codedim::BettiTable value;
};

struct codedim_report {
  codedim::DimensionReport value;
  codedim::BettiTable table;
};

namespace {

thread_local std::string last_error;

codedim_status to_status(codedim::ErrorCode code) {
  switch (code) {
    case codedim::ErrorCode::kInvalidArgument: return CODEDIM_ERR_INVALID_ARGUMENT;
    case codedim::ErrorCode::kParse: return CODEDIM_ERR_PARSE;
    case codedim::ErrorCode::kGuard: return CODEDIM_ERR_GUARD;
    case codedim::ErrorCode::kConsistency: return CODEDIM_ERR_CONSISTENCY;
    case codedim::ErrorCode::kIo: return CODEDIM_ERR_IO;
  }
  return CODEDIM_ERR_INTERNAL;
}

codedim_status fail(codedim_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Body>
codedim_status guarded(Body&& body) {
  try {
    body();
    return CODEDIM_OK;
  } catch (const codedim::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CODEDIM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CODEDIM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

codedim::SweepOptions sweep_options(int max_n) {
  codedim::SweepOptions options;
  if (max_n > 0) options.max_vertices = max_n;
  return options;
}

#define CODEDIM_REQUIRE(cond, what)                                   \
  do {                                                                \
    if (!(cond)) return fail(CODEDIM_ERR_INVALID_ARGUMENT, (what));   \
  } while (0)

codedim_status emit_complex(codedim::SimplicialComplex complex, codedim_complex** out) {
  *out = new codedim_complex{std::move(complex)};
  return CODEDIM_OK;
}

}  // namespace

extern "C" {

const char* codedim_version(void) { return "1.0.0"; }

const char* codedim_last_error(void) { return last_error.c_str(); }

const char* codedim_status_name(codedim_status status) {
  switch (status) {
    case CODEDIM_OK: return "ok";
    case CODEDIM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CODEDIM_ERR_PARSE: return "parse error";
    case CODEDIM_ERR_GUARD: return "size guard exceeded";
    case CODEDIM_ERR_CONSISTENCY: return "internal consistency failure";
    case CODEDIM_ERR_IO: return "i/o error";
    case CODEDIM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void codedim_string_free(char* s) { std::free(s); }

codedim_status codedim_complex_from_code_text(const char* text, codedim_complex** out) {
  CODEDIM_REQUIRE(text != nullptr && out != nullptr, "null argument");
  return guarded([&] { emit_complex(codedim::complex_of_code(codedim::parse_code(text)), out); });
}

codedim_status codedim_complex_from_code_file(const char* path, codedim_complex** out) {
  CODEDIM_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] { emit_complex(codedim::complex_of_code(codedim::read_code_file(path)), out); });
}

codedim_status codedim_complex_from_facet_file(const char* path, codedim_complex** out) {
  CODEDIM_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] { emit_complex(codedim::read_complex_file(path), out); });
}

codedim_status codedim_complex_from_codewords(const char* list, int n, codedim_complex** out) {
  CODEDIM_REQUIRE(list != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    std::optional<int> size;
    if (n > 0) size = n;
    emit_complex(codedim::complex_of_code(codedim::parse_codeword_list(list, size)), out);
  });
}

codedim_status codedim_complex_from_facets(int n, const uint32_t* facets, size_t count,
                                           codedim_complex** out) {
  CODEDIM_REQUIRE(out != nullptr, "null argument");
  CODEDIM_REQUIRE(count == 0 || facets != nullptr, "null facet array");
  return guarded([&] {
    std::vector<codedim::VertexSet> gens;
    gens.reserve(count);
    for (size_t k = 0; k < count; ++k) gens.emplace_back(n, facets[k]);
    emit_complex(codedim::SimplicialComplex::from_generators(n, gens), out);
  });
}

codedim_generator_params codedim_generator_defaults(void) {
  return codedim_generator_params{-1, -1, -1, -1, 0.5, 1};
}

codedim_status codedim_complex_generate(const char* name,
                                        const codedim_generator_params* params,
                                        codedim_complex** out) {
  CODEDIM_REQUIRE(name != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    codedim::GeneratorParams p;
    if (params != nullptr) {
      if (params->i >= 0) p.i = params->i;
      if (params->r >= 0) p.r = params->r;
      if (params->m >= 0) p.m = params->m;
      if (params->n >= 0) p.n = params->n;
      p.density = params->density;
      p.seed = params->seed;
    }
    emit_complex(codedim::named_generator(name, p), out);
  });
}

int codedim_complex_vertex_count(const codedim_complex* complex) {
  return complex == nullptr ? -1 : complex->value.n();
}

size_t codedim_complex_facet_count(const codedim_complex* complex) {
  return complex == nullptr ? 0 : complex->value.facets().size();
}

uint32_t codedim_complex_facet(const codedim_complex* complex, size_t index) {
  if (complex == nullptr || index >= complex->value.facets().size()) return 0;
  return complex->value.facets()[index].bits();
}

int codedim_complex_is_void(const codedim_complex* complex) {
  return complex == nullptr || complex->value.is_void() ? 1 : 0;
}

void codedim_complex_free(codedim_complex* complex) { delete complex; }

codedim_status codedim_table_compute(const codedim_complex* complex, uint32_t p, int max_n,
                                     codedim_table** out) {
  CODEDIM_REQUIRE(complex != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    auto table = codedim::hochster_table(complex->value, codedim::PrimeField(p),
                                         sweep_options(max_n));
    *out = new codedim_table{std::move(table)};
  });
}

size_t codedim_table_entry_count(const codedim_table* table) {
  return table == nullptr ? 0 : table->value.entries().size();
}

codedim_status codedim_table_entry(const codedim_table* table, size_t index, int* step,
                                   uint32_t* sigma, uint64_t* beta) {
  CODEDIM_REQUIRE(table != nullptr, "null table");
  CODEDIM_REQUIRE(index < table->value.entries().size(), "entry index out of range");
  auto it = table->value.entries().begin();
  std::advance(it, static_cast<std::ptrdiff_t>(index));
  if (step != nullptr) *step = it->first.step;
  if (sigma != nullptr) *sigma = it->first.sigma.bits();
  if (beta != nullptr) *beta = it->second;
  return CODEDIM_OK;
}

size_t codedim_table_level_ranks(const codedim_table* table, uint64_t* out, size_t capacity) {
  if (table == nullptr) return 0;
  const auto ranks = codedim::level_ranks(table->value);
  for (size_t k = 0; k < ranks.size() && k < capacity && out != nullptr; ++k) out[k] = ranks[k];
  return ranks.size();
}

codedim_status codedim_table_format(const codedim_table* table, codedim_format format,
                                    char** out) {
  CODEDIM_REQUIRE(table != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    switch (format) {
      case CODEDIM_FORMAT_JSON: *out = copy_string(codedim::betti_to_json(table->value)); return;
      case CODEDIM_FORMAT_TEXT: *out = copy_string(codedim::betti_to_text(table->value)); return;
      case CODEDIM_FORMAT_M2: *out = copy_string(codedim::betti_to_m2(table->value)); return;
    }
    throw codedim::Error(codedim::ErrorCode::kInvalidArgument, "unknown output format");
  });
}

void codedim_table_free(codedim_table* table) { delete table; }

codedim_status codedim_report_compute(const codedim_complex* complex, uint32_t p, int max_n,
                                      codedim_report** out) {
  CODEDIM_REQUIRE(complex != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto options = sweep_options(max_n);
    auto table = codedim::hochster_table(complex->value, codedim::PrimeField(p), options);
    auto report = codedim::checked_report(complex->value, table, options);
    *out = new codedim_report{std::move(report), std::move(table)};
  });
}

codedim_status codedim_report_dimensions(const codedim_report* report, codedim_dimensions* out) {
  CODEDIM_REQUIRE(report != nullptr && out != nullptr, "null argument");
  const auto& r = report->value;
  auto witness = [](const codedim::WitnessedDimension& d, int* step, uint32_t* sigma) {
    *step = d.witness ? d.witness->step : -1;
    *sigma = d.witness ? d.witness->sigma.bits() : 0;
  };
  codedim_dimensions dims{};
  dims.n = r.n;
  dims.field = r.field.characteristic();
  dims.d_leray = r.leray.value;
  dims.d_helly = r.helly.value;
  dims.d_hom_betti = r.hom_betti.value;
  dims.d_hom_unreduced = r.hom_unreduced;
  witness(r.leray, &dims.leray_step, &dims.leray_sigma);
  witness(r.helly, &dims.helly_step, &dims.helly_sigma);
  witness(r.hom_betti, &dims.hom_betti_step, &dims.hom_betti_sigma);
  dims.hom_unreduced_degree = r.hom_unreduced_degree.value_or(-1);
  dims.leray_direct_agrees = r.leray_direct_agrees ? 1 : 0;
  dims.helly_direct_agrees = r.helly_direct_agrees ? 1 : 0;
  *out = dims;
  return CODEDIM_OK;
}

codedim_status codedim_report_format(const codedim_report* report, codedim_format format,
                                     char** out) {
  CODEDIM_REQUIRE(report != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    switch (format) {
      case CODEDIM_FORMAT_JSON: *out = copy_string(codedim::report_to_json(report->value)); return;
      case CODEDIM_FORMAT_TEXT: *out = copy_string(codedim::report_to_text(report->value)); return;
      case CODEDIM_FORMAT_M2: {
        std::string text = codedim::betti_to_m2(report->table);
        const auto& r = report->value;
        text += "-- d_L = " + std::to_string(r.leray.value) + "\n";
        text += "-- d_H = " + std::to_string(r.helly.value) + "\n";
        text += "-- d_hom (Betti) = " + std::to_string(r.hom_betti.value) + "\n";
        text += "-- d_hom (unreduced) = " + std::to_string(r.hom_unreduced) + "\n";
        *out = copy_string(text);
        return;
      }
    }
    throw codedim::Error(codedim::ErrorCode::kInvalidArgument, "unknown output format");
  });
}

void codedim_report_free(codedim_report* report) { delete report; }

codedim_status codedim_oracle_check(int n, uint64_t trials, uint64_t seed, uint32_t p,
                                    unsigned flags, codedim_oracle_summary* summary,
                                    char** text) {
  CODEDIM_REQUIRE(summary != nullptr, "null summary");
  return guarded([&] {
    codedim::OracleCheckConfig config;
    config.n = n;
    config.trials = trials;
    config.seed = seed;
    config.field = codedim::PrimeField(p);
    config.corrupt_table = (flags & CODEDIM_CHECK_CORRUPT_TABLE) != 0;
    const auto result = codedim::run_oracle_check(config);
    summary->trials = result.trials;
    summary->passed = result.passed;
    summary->failed = result.failed;
    if (text != nullptr) *text = copy_string(codedim::summary_to_text(result));
  });
}

}  // extern "C"
