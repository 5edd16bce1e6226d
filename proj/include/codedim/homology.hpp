#pragma once

#include <cstdint>
#include <vector>

#include "codedim/complex.hpp"
#include "codedim/field_linalg.hpp"

namespace codedim {

// Homology dimensions by degree. Degrees outside [first_degree, last_degree]
// read as zero.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  HomologyProfile(PrimeField field, int first_degree,
                  std::vector<std::uint64_t> dims)
      : field_(field), first_degree_(first_degree), dims_(std::move(dims)) {}

  const PrimeField& field() const noexcept { return field_; }
  int first_degree() const noexcept { return first_degree_; }
  int last_degree() const noexcept {
    return first_degree_ + static_cast<int>(dims_.size()) - 1;
  }
  std::uint64_t at(int degree) const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

 private:
  PrimeField field_;
  int first_degree_ = -1;
  std::vector<std::uint64_t> dims_;
};

using ReducedHomologyProfile = HomologyProfile;

// Reduced homology from the augmented chain complex. Degrees span
// [-1, dim Δ]; the void complex gives an empty profile and {∅} has a single
// class in degree -1.
ReducedHomologyProfile reduced_homology(const SimplicialComplex& complex,
                                        const PrimeField& field = {});

// Ordinary homology, degrees [0, dim Δ]. Empty for complexes without vertices.
HomologyProfile unreduced_homology(const SimplicialComplex& complex,
                                   const PrimeField& field = {});

// Largest degree with a nonzero dimension, or floor if there is none.
int top_nonzero_degree(const HomologyProfile& profile, int floor);

// Σ_k (-1)^k dim H̃_k.
std::int64_t euler_characteristic(const HomologyProfile& profile);

// Σ over nonempty faces of (-1)^dim, minus one for the empty face.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

}  // namespace codedim
