#include "codedim/betti.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <utility>

#include "codedim/error.hpp"
#include "codedim/homology.hpp"

namespace codedim {

namespace {

using Bits = VertexSet::Bits;

struct Contribution {
  int step;
  Bits sigma;
  std::uint64_t beta;
};

void sweep_range(const SimplicialComplex& complex, const PrimeField& field,
                 std::uint64_t begin, std::uint64_t end,
                 std::vector<Contribution>& out) {
  const int n = complex.n();
  for (std::uint64_t s = begin; s < end; ++s) {
    const VertexSet sigma(n, static_cast<Bits>(s));
    const int size = sigma.cardinality();
    const auto profile = reduced_homology(restrict(complex, sigma), field);
    for (int k = profile.first_degree(); k <= profile.last_degree(); ++k) {
      const auto dim = profile.at(k);
      if (dim == 0) continue;
      out.push_back({size - k - 1, sigma.bits(), dim});
    }
  }
}

}  // namespace

std::uint64_t BettiTable::beta(int step, const VertexSet& sigma) const {
  const auto it = entries_.find({step, sigma});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int step, const VertexSet& sigma, std::uint64_t beta) {
  if (beta == 0) return;
  entries_[{step, sigma}] += beta;
}

void BettiTable::set(int step, const VertexSet& sigma, std::uint64_t beta) {
  if (beta == 0) {
    entries_.erase({step, sigma});
  } else {
    entries_[{step, sigma}] = beta;
  }
}

BettiTable hochster_table(const SimplicialComplex& complex,
                          const PrimeField& field,
                          const SweepOptions& options) {
  const int n = complex.n();
  if (n > options.max_vertices) {
    throw Error(ErrorCode::kGuard,
                "complex on " + std::to_string(n) + " vertices exceeds the guard of " +
                    std::to_string(options.max_vertices) + " (sweep would visit " +
                    std::to_string(std::uint64_t{1} << n) + " subsets)");
  }
  if (complex.is_void()) {
    throw Error(ErrorCode::kInvalidArgument,
                "void complex has no Stanley-Reisner presentation in this tool");
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  unsigned workers = options.workers != 0 ? options.workers
                                          : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / 64)));

  std::vector<std::vector<Contribution>> parts(workers);
  if (workers == 1) {
    sweep_range(complex, field, 0, total, parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        sweep_range(complex, field, begin, end, parts[w]);
      });
    }
    for (auto& t : threads) t.join();
  }

  BettiTable table(n, field);
  for (const auto& part : parts) {
    for (const auto& c : part) table.add(c.step, VertexSet(n, c.sigma), c.beta);
  }
  return table;
}

std::vector<RValue> r_values(const BettiTable& table) {
  std::vector<RValue> out;
  for (const auto& [key, beta] : table.entries()) {
    if (key.step < 1) continue;
    out.push_back({key.step, key.sigma, key.sigma.cardinality() - key.step});
  }
  return out;
}

std::vector<std::uint64_t> level_ranks(const BettiTable& table) {
  std::vector<std::uint64_t> ranks;
  for (const auto& [key, beta] : table.entries()) {
    const auto step = static_cast<std::size_t>(key.step);
    if (ranks.size() <= step) ranks.resize(step + 1, 0);
    ranks[step] += beta;
  }
  while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
  return ranks;
}

}  // namespace codedim
