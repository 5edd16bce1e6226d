#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace codedim {

// Coefficient field GF(p) for a prime p < 2^16.
class PrimeField {
 public:
  using Residue = std::uint32_t;

  // GF(2).
  PrimeField() = default;
  // Throws Error(kInvalidArgument) unless p is a prime below 65536.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Residue reduce(std::int64_t value) const noexcept;
  Residue add(Residue a, Residue b) const noexcept { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const noexcept { return (a + p_ - b) % p_; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  // a must be nonzero.
  Residue inverse(Residue a) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 2;
};

bool is_prime(std::uint32_t value) noexcept;

// Dense row-major matrix of residues.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  PrimeField::Residue at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  PrimeField::Residue& at(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  // Reduces every stored entry into [0, p).
  void reduce(const PrimeField& field);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<PrimeField::Residue> entries_;
};

// Sparse column as (row, value) pairs with strictly increasing rows and
// nonzero reduced values.
using SparseColumn = std::vector<std::pair<std::uint32_t, PrimeField::Residue>>;

// Rank by reducing each column against earlier columns on its lowest nonzero
// row. Boundary matrices of simplicial complexes stay sparse under this, so
// it is the route the homology code takes.
std::size_t rank_sparse(std::vector<SparseColumn> columns, const PrimeField& field);

// Rank over GF(p). Entries must already be reduced. GF(2) inputs go through a
// packed XOR elimination; everything else through dense Gaussian elimination.
std::size_t rank(const FieldMatrix& matrix, const PrimeField& field);

namespace detail {
std::size_t rank_dense(const FieldMatrix& matrix, const PrimeField& field);
std::size_t rank_gf2_packed(const FieldMatrix& matrix);
}  // namespace detail

}  // namespace codedim
