#include "codedim/field_linalg.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "codedim/error.hpp"

namespace codedim {

bool is_prime(std::uint32_t value) noexcept {
  if (value < 2) return false;
  for (std::uint32_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1U << 16) || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "field characteristic " + std::to_string(p) +
                    " is not a prime below 65536");
  }
}

PrimeField::Residue PrimeField::reduce(std::int64_t value) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Residue>(((value % p) + p) % p);
}

PrimeField::Residue PrimeField::inverse(Residue a) const noexcept {
  // Fermat: a^(p-2).
  Residue result = 1;
  Residue base = a % p_;
  for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

void FieldMatrix::reduce(const PrimeField& field) {
  for (auto& e : entries_) e %= field.characteristic();
}

namespace detail {

std::size_t rank_dense(const FieldMatrix& matrix, const PrimeField& field) {
  const std::size_t rows = matrix.rows();
  const std::size_t cols = matrix.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<PrimeField::Residue>> m(rows,
                                                  std::vector<PrimeField::Residue>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = matrix.at(r, c);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const auto inv = field.inverse(m[rank][c]);
    for (std::size_t k = c; k < cols; ++k) m[rank][k] = field.mul(m[rank][k], inv);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const auto factor = m[r][c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = field.sub(m[r][k], field.mul(factor, m[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_gf2_packed(const FieldMatrix& matrix) {
  const std::size_t rows = matrix.rows();
  const std::size_t cols = matrix.cols();
  if (rows == 0 || cols == 0) return 0;
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> packed(rows * words, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (matrix.at(r, c) & 1U) packed[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  auto row = [&](std::size_t r) { return packed.data() + r * words; };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows && (row(pivot)[w] & bit) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) std::swap_ranges(row(pivot), row(pivot) + words, row(rank));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (row(r)[w] & bit) {
        for (std::size_t k = w; k < words; ++k) row(r)[k] ^= row(rank)[k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

std::size_t rank_sparse(std::vector<SparseColumn> columns, const PrimeField& field) {
  // owner[row] = index of the reduced column whose lowest entry sits on row;
  // those columns are normalized so that entry is 1.
  std::uint32_t rows = 0;
  for (const auto& col : columns) {
    if (!col.empty()) rows = std::max(rows, col.back().first + 1);
  }
  std::vector<std::int64_t> owner(rows, -1);
  SparseColumn scratch;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto& col = columns[j];
    while (!col.empty()) {
      const auto low = col.back().first;
      if (owner[low] < 0) {
        const auto inv = field.inverse(col.back().second);
        for (auto& entry : col) entry.second = field.mul(entry.second, inv);
        owner[low] = static_cast<std::int64_t>(j);
        ++rank;
        break;
      }
      // col -= factor * pivot, which clears the lowest entry.
      const auto& pivot = columns[static_cast<std::size_t>(owner[low])];
      const auto factor = col.back().second;
      scratch.clear();
      auto a = col.begin();
      auto b = pivot.begin();
      while (a != col.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != col.end() && a->first < b->first)) {
          scratch.push_back(*a++);
        } else if (a == col.end() || b->first < a->first) {
          scratch.emplace_back(b->first, field.sub(0, field.mul(factor, b->second)));
          ++b;
        } else {
          const auto v = field.sub(a->second, field.mul(factor, b->second));
          if (v != 0) scratch.emplace_back(a->first, v);
          ++a;
          ++b;
        }
      }
      col.swap(scratch);
    }
  }
  return rank;
}

std::size_t rank(const FieldMatrix& matrix, const PrimeField& field) {
  if (field.characteristic() == 2) return detail::rank_gf2_packed(matrix);
  return detail::rank_dense(matrix, field);
}

}  // namespace codedim
