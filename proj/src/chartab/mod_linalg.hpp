#pragma once

// Dense linear algebra over F_l for a prime l < 2^32.

#include <cstdint>
#include <vector>

#include "repzeta/rings/poly_mod.hpp"

namespace repzeta::chartab::detail {

struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> a;
  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Similarity transform to upper Hessenberg form: h = q^-1 m q.
void hessenberg(const ModMatrix& m, std::uint64_t l, ModMatrix& h, ModMatrix& q);

/// Characteristic polynomial det(xI - h) of an upper Hessenberg matrix.
rings::PolyModP hessenberg_charpoly(const ModMatrix& h, std::uint64_t l);

/// Basis of the right null space (columns of the result). Row reduction skips zero
/// entries, so Hessenberg input costs O(n^2 (1 + nullity)).
ModMatrix null_space(ModMatrix m, std::uint64_t l);

/// Product a * b.
ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, std::uint64_t l);

/// Reduced column echelon form of the column span of b: returns the basis and the pivot
/// rows (ascending), with basis(pivots[c], c') = [c == c']. Columns must be independent.
ModMatrix column_echelon(const ModMatrix& b, std::uint64_t l, std::vector<std::size_t>& pivots);

}  // namespace repzeta::chartab::detail
