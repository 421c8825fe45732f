#pragma once

#include <cstdint>
#include <vector>

#include "repzeta/chartab/class_algebra.hpp"
#include "repzeta/chartab/dimension_multiset.hpp"

namespace repzeta::chartab {

/// Smallest prime l with l = 1 (mod exponent) and l > order.
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent);

/// Central characters omega_i = |C_i| chi(g_i) / chi(1) reduced mod `prime`, one vector
/// per irreducible character, sorted lexicographically.
struct CentralCharacters {
  std::uint64_t prime = 0;
  std::vector<std::vector<std::uint64_t>> omega;
};

/// Common eigenvectors of the class matrices over F_l, found by refining eigenspaces
/// under M_1, M_2, ... in class order. Throws MathError if the refinement stalls.
CentralCharacters central_characters(const ClassAlgebra& algebra);

/// Degrees from central characters: d^2 = |G| / sum_i omega_i omega_{i*} / |C_i| (mod l).
DimensionMultiset dixon_degrees(const ClassAlgebra& algebra);
DimensionMultiset dixon_degrees(const ClassAlgebra& algebra, const CentralCharacters& chars);

}  // namespace repzeta::chartab
