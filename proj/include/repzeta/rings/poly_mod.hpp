#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace repzeta::rings {

/// Dense univariate polynomial over the prime field F_m, coefficients low to high.
/// The zero polynomial has an empty coefficient vector.
class PolyModP {
 public:
  PolyModP(std::uint64_t modulus, std::vector<std::uint64_t> coeffs = {});

  static PolyModP monomial(std::uint64_t modulus, std::uint64_t coeff, std::size_t degree);

  std::uint64_t modulus() const { return m_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t eval(std::uint64_t x) const;

  PolyModP monic() const;

  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  friend bool operator==(const PolyModP& a, const PolyModP& b) = default;

  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const PolyModP& a, const PolyModP& b, PolyModP& q, PolyModP& r);
  friend PolyModP operator%(const PolyModP& a, const PolyModP& b);

  /// Monic gcd (zero if both are zero).
  static PolyModP gcd(PolyModP a, PolyModP b);
  /// base^e mod modulus.
  static PolyModP pow_mod(const PolyModP& base, std::uint64_t e, const PolyModP& modulus);

 private:
  void trim();
  std::uint64_t m_;
  std::vector<std::uint64_t> c_;
};

/// Rabin irreducibility test over F_p.
bool is_irreducible(const PolyModP& f);

/// Distinct roots in F_m of f (nonzero), ascending. Equal-degree splitting uses `rng`.
std::vector<std::uint64_t> distinct_roots(const PolyModP& f, std::mt19937_64& rng);

}  // namespace repzeta::rings
