#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace repzeta::kirillov {

/// Element scale * sum_e c_e zeta_p^e of Q(zeta_p), stored in the power basis
/// 1, zeta, ..., zeta^(p-2). Canonical form: the coefficient vector is primitive with a
/// positive leading nonzero entry (zero is all-zero with scale 0).
class CyclotomicValue {
 public:
  explicit CyclotomicValue(unsigned p);

  /// scale * sum_{e < p} counts[e] zeta^e.
  static CyclotomicValue from_exponent_counts(unsigned p, const std::vector<mpz_class>& counts, const mpq_class& scale = 1);
  static CyclotomicValue root_of_unity(unsigned p, unsigned e);
  static CyclotomicValue rational(unsigned p, const mpq_class& q);

  unsigned p() const { return p_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpq_class& scale() const { return scale_; }
  bool is_zero() const { return scale_ == 0; }
  /// True when the value lies in Q; `out` receives it.
  bool is_rational(mpq_class* out = nullptr) const;

  CyclotomicValue conj() const;
  friend CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b);
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
    return a.p_ == b.p_ && a.scale_ == b.scale_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  /// Exponent counts over all p powers (length p), scaled.
  std::vector<mpq_class> expanded() const;
  void normalize(std::vector<mpq_class> full);

  unsigned p_;
  std::vector<mpz_class> coeffs_;
  mpq_class scale_;
};

}  // namespace repzeta::kirillov
