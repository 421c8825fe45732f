#include "repzeta/rings/truncated_poly.hpp"

#include <sstream>
#include <stdexcept>

#include "repzeta/rings/modular.hpp"

namespace repzeta::rings {

namespace {

void require_same(const TruncPolyPtr& a, const TruncPolyPtr& b) {
  if (a == b) return;
  if (!(*a == *b)) throw std::invalid_argument("truncated polynomial ring mismatch");
}

}  // namespace

std::uint64_t TruncPolyDescriptor::order() const { return checked_pow(field->order(), k); }

TruncPolyPtr make_truncated_poly_ring(FieldPtr field, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("truncation length must be positive");
  auto d = std::make_shared<TruncPolyDescriptor>();
  d->field = std::move(field);
  d->k = k;
  return d;
}

TruncPolyElement::TruncPolyElement(TruncPolyPtr ring, std::vector<FieldElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_->k) throw std::invalid_argument("TruncPolyElement: need exactly k coefficients");
  for (const auto& c : coeffs_) require_same_field(c.field(), ring_->field);
}

TruncPolyElement TruncPolyElement::zero(const TruncPolyPtr& ring) {
  return TruncPolyElement(ring, std::vector<FieldElement>(ring->k, FieldElement::zero(ring->field)));
}

TruncPolyElement TruncPolyElement::one(const TruncPolyPtr& ring) { return from_int(ring, 1); }

TruncPolyElement TruncPolyElement::from_int(const TruncPolyPtr& ring, std::int64_t v) {
  auto z = zero(ring);
  z.coeffs_[0] = FieldElement::from_int(ring->field, v);
  return z;
}

TruncPolyElement TruncPolyElement::from_index(const TruncPolyPtr& ring, std::uint64_t index) {
  const std::uint64_t q = ring->field->order();
  std::vector<FieldElement> c;
  c.reserve(ring->k);
  for (std::uint32_t i = 0; i < ring->k; ++i) {
    c.push_back(FieldElement::from_index(ring->field, index % q));
    index /= q;
  }
  if (index != 0) throw std::out_of_range("TruncPolyElement::from_index: index too large");
  return TruncPolyElement(ring, std::move(c));
}

std::uint64_t TruncPolyElement::index() const {
  const std::uint64_t q = ring_->field->order();
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * q + coeffs_[i].index();
  return idx;
}

bool TruncPolyElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

TruncPolyElement TruncPolyElement::operator-() const {
  std::vector<FieldElement> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return TruncPolyElement(ring_, std::move(c));
}

TruncPolyElement operator+(const TruncPolyElement& a, const TruncPolyElement& b) {
  require_same(a.ring_, b.ring_);
  std::vector<FieldElement> c;
  c.reserve(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] + b.coeffs_[i]);
  return TruncPolyElement(a.ring_, std::move(c));
}

TruncPolyElement operator-(const TruncPolyElement& a, const TruncPolyElement& b) { return a + (-b); }

TruncPolyElement operator*(const TruncPolyElement& a, const TruncPolyElement& b) {
  require_same(a.ring_, b.ring_);
  const std::size_t k = a.coeffs_.size();
  std::vector<FieldElement> c(k, FieldElement::zero(a.ring_->field));
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < k; ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncPolyElement(a.ring_, std::move(c));
}

bool operator==(const TruncPolyElement& a, const TruncPolyElement& b) {
  require_same(a.ring_, b.ring_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

TruncPolyElement TruncPolyElement::pow(std::uint64_t e) const {
  TruncPolyElement result = one(ring_);
  TruncPolyElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncPolyElement TruncPolyElement::inverse() const {
  if (!is_unit()) throw std::domain_error("TruncPolyElement: inversion of non-unit");
  // Solve a * b = 1 coefficient by coefficient.
  const std::size_t k = coeffs_.size();
  const FieldElement inv0 = coeffs_[0].inverse();
  std::vector<FieldElement> b(k, FieldElement::zero(ring_->field));
  b[0] = inv0;
  for (std::size_t n = 1; n < k; ++n) {
    FieldElement acc = FieldElement::zero(ring_->field);
    for (std::size_t i = 1; i <= n; ++i) acc = acc + coeffs_[i] * b[n - i];
    b[n] = -(acc * inv0);
  }
  return TruncPolyElement(ring_, std::move(b));
}

std::string TruncPolyElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool bare = i > 0 && coeffs_[i].is_one();
    if (!bare) {
      if (ring_->field->f > 1 && i > 0) os << '(' << coeffs_[i].to_string() << ')';
      else os << coeffs_[i].to_string();
    }
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace repzeta::rings
