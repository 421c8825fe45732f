#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "repzeta/rings/finite_ring.hpp"

namespace repzeta::groups {

inline constexpr unsigned kMaxDim = 5;

using Elem = rings::FiniteRing::Elem;

/// Square matrix over a table ring, row-major; only the leading n*n entries are used.
struct Matrix {
  std::array<Elem, kMaxDim * kMaxDim> e{};
  bool operator==(const Matrix&) const = default;
};

/// Matrix arithmetic of fixed size n over one ring.
class MatrixOps {
 public:
  MatrixOps(rings::RingPtr ring, unsigned n);

  unsigned n() const { return n_; }
  unsigned entries() const { return n_ * n_; }
  const rings::FiniteRing& ring() const { return *ring_; }
  const rings::RingPtr& ring_ptr() const { return ring_; }

  Elem at(const Matrix& m, unsigned i, unsigned j) const { return m.e[i * n_ + j]; }
  Elem& at(Matrix& m, unsigned i, unsigned j) const { return m.e[i * n_ + j]; }

  Matrix identity() const;
  Matrix zero() const { return Matrix{}; }
  void multiply(const Elem* a, const Elem* b, Elem* out) const;
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  Matrix add(const Matrix& a, const Matrix& b) const;
  Matrix sub(const Matrix& a, const Matrix& b) const;
  Matrix scale(Elem c, const Matrix& a) const;
  Elem det(const Matrix& a) const;
  /// Inverse over a local ring via unit pivots; nullopt when not invertible.
  std::optional<Matrix> inverse(const Matrix& a) const;

  /// Canonical encoding: entries as base-|R| digits, most significant first.
  std::uint64_t encode(const Elem* a) const;
  std::uint64_t encode(const Matrix& a) const { return encode(a.e.data()); }
  Matrix decode(std::uint64_t code) const;

  std::string to_string(const Matrix& a) const;

 private:
  rings::RingPtr ring_;
  unsigned n_;
};

}  // namespace repzeta::groups
