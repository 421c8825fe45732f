#include "repzeta/rings/witt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "repzeta/error.hpp"
#include "repzeta/rings/modular.hpp"

namespace repzeta::rings {

IntPoly IntPoly::from_unsorted(std::vector<std::pair<Monomial, mpz_class>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  IntPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

IntPoly IntPoly::constant(const mpz_class& c) {
  IntPoly out;
  if (c != 0) out.terms_.emplace_back(0, c);
  return out;
}

IntPoly IntPoly::variable(unsigned var) {
  if (var >= kMaxVars) throw std::invalid_argument("IntPoly: too many variables");
  IntPoly out;
  out.terms_.emplace_back(Monomial{1} << (8 * var), mpz_class(1));
  return out;
}

mpz_class IntPoly::coefficient(std::span<const unsigned> exponents) const {
  Monomial key = 0;
  for (std::size_t v = 0; v < exponents.size(); ++v) key |= Monomial{exponents[v]} << (8 * v);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const auto& t, Monomial m) { return t.first < m; });
  return (it != terms_.end() && it->first == key) ? it->second : mpz_class(0);
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<std::pair<IntPoly::Monomial, mpz_class>> t(a.terms_);
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return IntPoly::from_unsorted(std::move(t));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<std::pair<IntPoly::Monomial, mpz_class>> t(a.terms_);
  for (const auto& [m, c] : b.terms_) t.emplace_back(m, -c);
  return IntPoly::from_unsorted(std::move(t));
}

IntPoly operator*(const mpz_class& c, const IntPoly& a) {
  IntPoly out;
  if (c == 0) return out;
  out.terms_ = a.terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

namespace {

IntPoly::Monomial add_monomials(IntPoly::Monomial a, IntPoly::Monomial b) {
  IntPoly::Monomial out = 0;
  for (unsigned v = 0; v < IntPoly::kMaxVars; ++v) {
    const unsigned e = IntPoly::exponent(a, v) + IntPoly::exponent(b, v);
    if (e > IntPoly::kMaxExponent) throw std::overflow_error("IntPoly: exponent exceeds 255");
    out |= IntPoly::Monomial{e} << (8 * v);
  }
  return out;
}

}  // namespace

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  std::unordered_map<IntPoly::Monomial, mpz_class> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpz_class& slot = acc[add_monomials(ma, mb)];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  std::vector<std::pair<IntPoly::Monomial, mpz_class>> t;
  t.reserve(acc.size());
  for (auto& [m, c] : acc) t.emplace_back(m, std::move(c));
  return IntPoly::from_unsorted(std::move(t));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPoly IntPoly::exact_div(const mpz_class& d) const {
  IntPoly out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    mpq_class q(c, d);
    q.canonicalize();
    if (q.get_den() != 1) {
      throw MathError("Witt polynomial derivation produced a non-integral coefficient " + q.get_str());
    }
    out.terms_.emplace_back(m, q.get_num());
  }
  return out;
}

std::string IntPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (unsigned v = 0; v < kMaxVars; ++v) {
      unsigned e = exponent(m, v);
      if (e == 0) continue;
      if (any_var) vars << '*';
      any_var = true;
      vars << (v < names.size() ? names[v] : "V" + std::to_string(v));
      if (e > 1) vars << '^' << e;
    }
    if (!any_var) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << vars.str();
    }
  }
  return os.str();
}

std::vector<std::string> WittPolynomialSet::variable_names() const {
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < k; ++i) names.push_back("X" + std::to_string(i));
  for (std::uint32_t i = 0; i < k; ++i) names.push_back("Y" + std::to_string(i));
  return names;
}

IntPoly ghost_component(std::uint32_t p, std::uint32_t n, unsigned offset) {
  IntPoly out;
  mpz_class pi = 1;
  for (std::uint32_t i = 0; i <= n; ++i) {
    out = out + pi * IntPoly::variable(offset + i).pow(static_cast<unsigned>(checked_pow(p, n - i)));
    pi *= p;
  }
  return out;
}

IntPoly ghost_of(std::uint32_t p, std::span<const IntPoly> polys, std::uint32_t n) {
  IntPoly out;
  mpz_class pi = 1;
  for (std::uint32_t i = 0; i <= n; ++i) {
    out = out + pi * polys[i].pow(static_cast<unsigned>(checked_pow(p, n - i)));
    pi *= p;
  }
  return out;
}

namespace {

/// Solves w_n(R) = target_n for R_n given R_0..R_{n-1}; `powers[i]` holds R_i^{p^{n-1-i}}
/// on entry and R_i^{p^{n-i}} on exit.
IntPoly solve_next(std::uint32_t p, std::uint32_t n, const IntPoly& target, std::vector<IntPoly>& powers) {
  IntPoly rest;
  mpz_class pi = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    powers[i] = powers[i].pow(p);
    rest = rest + pi * powers[i];
    pi *= p;
  }
  mpz_class pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
  return (target - rest).exact_div(pn);
}

}  // namespace

WittPolynomialSet derive_witt_polynomials(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("derive_witt_polynomials: p must be prime");
  if (k == 0) throw std::invalid_argument("derive_witt_polynomials: k must be positive");
  if (2 * k > IntPoly::kMaxVars || checked_pow(p, k - 1) > IntPoly::kMaxExponent) {
    throw std::invalid_argument("derive_witt_polynomials: (p, k) too large for the exact oracle");
  }
  WittPolynomialSet set;
  set.p = p;
  set.k = k;
  std::vector<IntPoly> sum_powers, prod_powers;
  for (std::uint32_t n = 0; n < k; ++n) {
    const IntPoly wx = ghost_component(p, n, 0);
    const IntPoly wy = ghost_component(p, n, k);
    IntPoly s = solve_next(p, n, wx + wy, sum_powers);
    IntPoly m = solve_next(p, n, wx * wy, prod_powers);
    sum_powers.push_back(s);
    prod_powers.push_back(m);
    set.sum.push_back(std::move(s));
    set.product.push_back(std::move(m));
  }
  return set;
}

WittRingPtr make_witt_ring(FieldPtr field, std::uint32_t k) {
  auto d = std::make_shared<WittRingDescriptor>();
  d->polys = std::make_shared<const WittPolynomialSet>(derive_witt_polynomials(field->p, k));
  d->field = std::move(field);
  d->k = k;
  return d;
}

FieldElement evaluate(const IntPoly& poly, std::span<const FieldElement> values) {
  if (values.empty()) throw std::invalid_argument("evaluate: no values");
  const FieldPtr& field = values[0].field();
  const std::uint32_t p = field->p;
  FieldElement acc = FieldElement::zero(field);
  // Cache powers per variable as they are requested.
  std::vector<std::vector<FieldElement>> powers(values.size());
  for (const auto& [m, c] : poly.terms()) {
    mpz_class cr = c % p;
    if (cr < 0) cr += p;
    if (cr == 0) continue;
    FieldElement term = FieldElement::from_int(field, cr.get_si());
    for (unsigned v = 0; v < values.size() && !term.is_zero(); ++v) {
      const unsigned e = IntPoly::exponent(m, v);
      if (e == 0) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(FieldElement::one(field));
      while (pw.size() <= e) pw.push_back(pw.back() * values[v]);
      term = term * pw[e];
    }
    acc = acc + term;
  }
  return acc;
}

WittVector::WittVector(WittRingPtr ring, std::vector<FieldElement> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
  if (comps_.size() != ring_->k) throw std::invalid_argument("WittVector: need exactly k components");
  for (const auto& c : comps_) require_same_field(c.field(), ring_->field);
}

WittVector WittVector::zero(const WittRingPtr& ring) {
  return WittVector(ring, std::vector<FieldElement>(ring->k, FieldElement::zero(ring->field)));
}

WittVector WittVector::one(const WittRingPtr& ring) {
  auto z = zero(ring);
  z.comps_[0] = FieldElement::one(ring->field);
  return z;
}

WittVector WittVector::from_index(const WittRingPtr& ring, std::uint64_t index) {
  const std::uint64_t q = ring->field->order();
  std::vector<FieldElement> c;
  for (std::uint32_t i = 0; i < ring->k; ++i) {
    c.push_back(FieldElement::from_index(ring->field, index % q));
    index /= q;
  }
  if (index != 0) throw std::out_of_range("WittVector::from_index: index too large");
  return WittVector(ring, std::move(c));
}

std::uint64_t WittVector::index() const {
  const std::uint64_t q = ring_->field->order();
  std::uint64_t idx = 0;
  for (std::size_t i = comps_.size(); i-- > 0;) idx = idx * q + comps_[i].index();
  return idx;
}

namespace {

void require_same(const WittRingPtr& a, const WittRingPtr& b) {
  if (a == b) return;
  if (!(*a == *b)) throw std::invalid_argument("Witt ring mismatch");
}

WittVector apply(const WittVector& a, const WittVector& b, const std::vector<IntPoly>& polys) {
  std::vector<FieldElement> vals(a.components());
  vals.insert(vals.end(), b.components().begin(), b.components().end());
  std::vector<FieldElement> out;
  out.reserve(polys.size());
  for (const auto& poly : polys) out.push_back(evaluate(poly, vals));
  return WittVector(a.ring(), std::move(out));
}

}  // namespace

WittVector operator+(const WittVector& a, const WittVector& b) {
  require_same(a.ring_, b.ring_);
  return apply(a, b, a.ring_->polys->sum);
}

WittVector operator*(const WittVector& a, const WittVector& b) {
  require_same(a.ring_, b.ring_);
  return apply(a, b, a.ring_->polys->product);
}

bool operator==(const WittVector& a, const WittVector& b) {
  require_same(a.ring_, b.ring_);
  for (std::size_t i = 0; i < a.comps_.size(); ++i)
    if (!(a.comps_[i] == b.comps_[i])) return false;
  return true;
}

std::string WittVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < comps_.size(); ++i) os << (i ? "," : "") << comps_[i].to_string();
  os << ')';
  return os.str();
}

std::uint64_t teichmuller(std::uint64_t c, std::uint32_t p, std::uint32_t k) {
  const std::uint64_t pk = checked_pow(p, k);
  return pow_mod(c % p, checked_pow(p, k - 1), pk);
}

GaloisRingElement witt_to_padic(const WittVector& w, const GaloisRingPtr& target) {
  const auto& field = w.ring()->field;
  if (field->f != 1) throw std::invalid_argument("witt_to_padic: base field must be F_p");
  if (target->f != 1 || target->p != field->p || target->k != w.ring()->k) {
    throw std::invalid_argument("witt_to_padic: target must be Z/p^k with matching p, k");
  }
  const std::uint32_t p = field->p;
  const std::uint32_t k = w.ring()->k;
  const std::uint64_t pk = target->pk;
  std::uint64_t acc = 0;
  std::uint64_t pi = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    acc = add_mod(acc, mul_mod(pi, teichmuller(w.components()[i].coords()[0], p, k), pk), pk);
    pi *= p;
  }
  return GaloisRingElement::from_int(target, static_cast<std::int64_t>(acc));
}

}  // namespace repzeta::rings
