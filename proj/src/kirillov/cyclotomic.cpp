#include "repzeta/kirillov/cyclotomic.hpp"

#include <stdexcept>

namespace repzeta::kirillov {

CyclotomicValue::CyclotomicValue(unsigned p) : p_(p), coeffs_(p - 1, 0), scale_(0) {
  if (p < 2) throw std::invalid_argument("cyclotomic field needs p >= 2");
}

void CyclotomicValue::normalize(std::vector<mpq_class> full) {
  // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
  const mpq_class top = full[p_ - 1];
  std::vector<mpq_class> c(p_ - 1);
  for (unsigned e = 0; e + 1 < p_; ++e) c[e] = full[e] - top;
  mpz_class den = 1, content = 0;
  for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> ints(p_ - 1);
  for (unsigned e = 0; e + 1 < p_; ++e) {
    ints[e] = c[e].get_num() * (den / c[e].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[e].get_mpz_t());
  }
  if (content == 0) {
    coeffs_.assign(p_ - 1, 0);
    scale_ = 0;
    return;
  }
  for (const auto& v : ints)
    if (v != 0) {
      if (v < 0) content = -content;
      break;
    }
  for (unsigned e = 0; e + 1 < p_; ++e) ints[e] /= content;
  coeffs_ = std::move(ints);
  scale_ = mpq_class(content, den);
  scale_.canonicalize();
}

std::vector<mpq_class> CyclotomicValue::expanded() const {
  std::vector<mpq_class> full(p_, 0);
  for (unsigned e = 0; e + 1 < p_; ++e) full[e] = scale_ * coeffs_[e];
  return full;
}

CyclotomicValue CyclotomicValue::from_exponent_counts(unsigned p, const std::vector<mpz_class>& counts, const mpq_class& scale) {
  if (counts.size() != p) throw std::invalid_argument("exponent counts must have length p");
  CyclotomicValue v(p);
  std::vector<mpq_class> full(p);
  for (unsigned e = 0; e < p; ++e) full[e] = scale * counts[e];
  v.normalize(std::move(full));
  return v;
}

CyclotomicValue CyclotomicValue::root_of_unity(unsigned p, unsigned e) {
  std::vector<mpz_class> counts(p, 0);
  counts[e % p] = 1;
  return from_exponent_counts(p, counts);
}

CyclotomicValue CyclotomicValue::rational(unsigned p, const mpq_class& q) {
  std::vector<mpz_class> counts(p, 0);
  counts[0] = 1;
  return from_exponent_counts(p, counts, q);
}

bool CyclotomicValue::is_rational(mpq_class* out) const {
  for (unsigned e = 1; e + 1 < p_; ++e)
    if (coeffs_[e] != 0) return false;
  if (out) *out = scale_ * coeffs_[0];
  return true;
}

CyclotomicValue CyclotomicValue::conj() const {
  const auto full = expanded();
  std::vector<mpq_class> c(p_, 0);
  for (unsigned e = 0; e < p_; ++e) c[(p_ - e) % p_] = full[e];
  CyclotomicValue v(p_);
  v.normalize(std::move(c));
  return v;
}

CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("cyclotomic values over different fields");
  auto fa = a.expanded();
  const auto fb = b.expanded();
  for (unsigned e = 0; e < a.p_; ++e) fa[e] += fb[e];
  CyclotomicValue v(a.p_);
  v.normalize(std::move(fa));
  return v;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("cyclotomic values over different fields");
  const unsigned p = a.p_;
  std::vector<mpz_class> prod(p, 0);
  for (unsigned i = 0; i + 1 < p; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; j + 1 < p; ++j) prod[(i + j) % p] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CyclotomicValue::from_exponent_counts(p, prod, a.scale_ * b.scale_);
}

std::string CyclotomicValue::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (unsigned e = 0; e + 1 < p_; ++e) {
    if (coeffs_[e] == 0) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[e].get_str();
    if (e > 0) s += "*z^" + std::to_string(e);
  }
  return scale_ == 1 ? s : "(" + scale_.get_str() + ")*(" + s + ")";
}

}  // namespace repzeta::kirillov
