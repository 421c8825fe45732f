#include "repzeta/rings/poly_mod.hpp"

#include <algorithm>
#include <stdexcept>

#include "repzeta/rings/modular.hpp"

namespace repzeta::rings {

PolyModP::PolyModP(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : m_(modulus), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= m_;
  trim();
}

PolyModP PolyModP::monomial(std::uint64_t modulus, std::uint64_t coeff, std::size_t degree) {
  std::vector<std::uint64_t> c(degree + 1, 0);
  c[degree] = coeff;
  return PolyModP(modulus, std::move(c));
}

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t PolyModP::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(mul_mod(acc, x, m_), *it, m_);
  return acc;
}

PolyModP PolyModP::monic() const {
  if (c_.empty()) return *this;
  std::uint64_t inv = inv_mod(c_.back(), m_);
  std::vector<std::uint64_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = mul_mod(c_[i], inv, m_);
  return PolyModP(m_, std::move(c));
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a.coeff(i), b.coeff(i), a.m_);
  return PolyModP(a.m_, std::move(c));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a.coeff(i), b.coeff(i), a.m_);
  return PolyModP(a.m_, std::move(c));
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  if (a.is_zero() || b.is_zero()) return PolyModP(a.m_);
  const std::uint64_t m = a.m_;
  std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
  // Accumulate unreduced products, reducing before the 128-bit accumulator can overflow.
  const bool small = m < (1ULL << 31);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
      if (!small) acc[i + j] %= m;
    }
  }
  std::vector<std::uint64_t> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint64_t>(acc[i] % m);
  return PolyModP(m, std::move(c));
}

void PolyModP::divmod(const PolyModP& a, const PolyModP& b, PolyModP& q, PolyModP& r) {
  if (b.is_zero()) throw std::domain_error("PolyModP: division by zero polynomial");
  const std::uint64_t m = a.m_;
  std::vector<std::uint64_t> rem = a.c_;
  const std::size_t db = b.c_.size() - 1;
  if (rem.size() < b.c_.size()) {
    q = PolyModP(m);
    r = a;
    return;
  }
  std::vector<std::uint64_t> quo(rem.size() - db, 0);
  const std::uint64_t inv_lead = inv_mod(b.c_.back(), m);
  for (std::size_t i = rem.size(); i-- > db;) {
    std::uint64_t coef = mul_mod(rem[i], inv_lead, m);
    if (coef == 0) continue;
    quo[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = sub_mod(rem[i - db + j], mul_mod(coef, b.c_[j], m), m);
    }
  }
  rem.resize(db);
  q = PolyModP(m, std::move(quo));
  r = PolyModP(m, std::move(rem));
}

PolyModP operator%(const PolyModP& a, const PolyModP& b) {
  PolyModP q(a.m_), r(a.m_);
  PolyModP::divmod(a, b, q, r);
  return r;
}

PolyModP PolyModP::gcd(PolyModP a, PolyModP b) {
  while (!b.is_zero()) {
    PolyModP r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyModP PolyModP::pow_mod(const PolyModP& base, std::uint64_t e, const PolyModP& modulus) {
  PolyModP result(base.m_, {1});
  result = result % modulus;
  PolyModP b = base % modulus;
  while (e > 0) {
    if (e & 1) result = (result * b) % modulus;
    e >>= 1;
    if (e > 0) b = (b * b) % modulus;
  }
  return result;
}

bool is_irreducible(const PolyModP& f) {
  const long n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const std::uint64_t p = f.modulus();
  const PolyModP x(p, {0, 1});
  // x^(p^j) mod f for j = 0..n
  std::vector<PolyModP> frob{x % f};
  for (long j = 1; j <= n; ++j) frob.push_back(PolyModP::pow_mod(frob.back(), p, f));
  if (!(frob[static_cast<std::size_t>(n)] - x % f).is_zero()) return false;
  for (std::uint64_t r : prime_divisors(static_cast<std::uint64_t>(n))) {
    PolyModP g = PolyModP::gcd(f, frob[static_cast<std::size_t>(n / static_cast<long>(r))] - x);
    if (g.degree() != 0) return false;
  }
  return true;
}

namespace {

void split_linear(const PolyModP& f, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  const std::uint64_t m = f.modulus();
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    PolyModP g = f.monic();
    out.push_back(sub_mod(0, g.coeff(0), m));
    return;
  }
  if (m == 2) {
    // f is a product of distinct linear factors over F_2: x(x+1)
    out.push_back(0);
    out.push_back(1);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, m - 1);
  for (;;) {
    PolyModP shift(m, {dist(rng), 1});
    PolyModP h = PolyModP::pow_mod(shift, (m - 1) / 2, f) - PolyModP(m, {1});
    PolyModP g = PolyModP::gcd(f, h);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      PolyModP q(m), r(m);
      PolyModP::divmod(f, g, q, r);
      split_linear(g, rng, out);
      split_linear(q, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> distinct_roots(const PolyModP& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw std::domain_error("distinct_roots: zero polynomial");
  const std::uint64_t m = f.modulus();
  const PolyModP fm = f.monic();
  const PolyModP x(m, {0, 1});
  PolyModP xm = PolyModP::pow_mod(x, m, fm);
  PolyModP split = PolyModP::gcd(fm, xm - x);
  std::vector<std::uint64_t> roots;
  split_linear(split, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace repzeta::rings
