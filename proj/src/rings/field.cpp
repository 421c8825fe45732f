#include "repzeta/rings/field.hpp"

#include <sstream>
#include <stdexcept>

#include "repzeta/rings/modular.hpp"
#include "repzeta/rings/poly_mod.hpp"

namespace repzeta::rings {

std::uint64_t FieldDescriptor::order() const { return checked_pow(p, f); }

FieldPtr make_field(std::uint32_t p, std::uint32_t f) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
  if (f == 0) throw std::invalid_argument("make_field: extension degree must be positive");
  auto desc = std::make_shared<FieldDescriptor>();
  desc->p = p;
  desc->f = f;
  if (f == 1) {
    desc->modulus = {0, 1};
    return desc;
  }
  const std::uint64_t count = checked_pow(p, f);
  for (std::uint64_t lower = 0; lower < count; ++lower) {
    std::vector<std::uint64_t> c(f + 1, 0);
    std::uint64_t rest = lower;
    for (std::uint32_t i = 0; i < f; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    c[f] = 1;
    if (is_irreducible(PolyModP(p, c))) {
      desc->modulus.assign(c.begin(), c.end());
      return desc;
    }
  }
  throw std::logic_error("make_field: no irreducible polynomial found");
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw std::invalid_argument("field descriptor mismatch");
}

FieldElement::FieldElement(FieldPtr field, std::vector<std::uint32_t> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_->f) throw std::invalid_argument("FieldElement: wrong coordinate count");
  for (auto& c : coords_) c %= field_->p;
}

FieldElement FieldElement::zero(const FieldPtr& field) {
  return FieldElement(field, std::vector<std::uint32_t>(field->f, 0));
}

FieldElement FieldElement::one(const FieldPtr& field) { return from_int(field, 1); }

FieldElement FieldElement::from_int(const FieldPtr& field, std::int64_t v) {
  std::vector<std::uint32_t> c(field->f, 0);
  const std::int64_t p = field->p;
  c[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::from_index(const FieldPtr& field, std::uint64_t index) {
  std::vector<std::uint32_t> c(field->f, 0);
  for (std::uint32_t i = 0; i < field->f; ++i) {
    c[i] = static_cast<std::uint32_t>(index % field->p);
    index /= field->p;
  }
  if (index != 0) throw std::out_of_range("FieldElement::from_index: index too large");
  return FieldElement(field, std::move(c));
}

std::uint64_t FieldElement::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = coords_.size(); i-- > 0;) idx = idx * field_->p + coords_[i];
  return idx;
}

bool FieldElement::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

FieldElement FieldElement::operator-() const {
  std::vector<std::uint32_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (field_->p - coords_[i]) % field_->p;
  return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  std::vector<std::uint32_t> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coords_[i] + b.coords_[i]) % a.field_->p;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  const std::uint64_t p = a.field_->p;
  const std::size_t f = a.field_->f;
  std::vector<std::uint64_t> prod(2 * f - 1, 0);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.coords_[i]} * b.coords_[j]) % p;
  const auto& mod = a.field_->modulus;
  for (std::size_t i = prod.size(); i-- > f;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < f; ++j) prod[i - f + j] = (prod[i - f + j] + (p - c) * mod[j]) % p;
  }
  std::vector<std::uint32_t> out(f);
  for (std::size_t i = 0; i < f; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return FieldElement(a.field_, std::move(out));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return a.coords_ == b.coords_;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = one(field_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: inversion of zero");
  return pow(field_->order() - 2);
}

std::uint32_t FieldElement::trace() const {
  FieldElement acc = zero(field_);
  FieldElement conj = *this;
  for (std::uint32_t i = 0; i < field_->f; ++i) {
    acc = acc + conj;
    conj = conj.pow(field_->p);
  }
  return acc.coords_[0];
}

std::string FieldElement::to_string() const {
  if (field_->f == 1) return std::to_string(coords_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coords_.size(); i-- > 0;) {
    if (coords_[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || coords_[i] != 1) os << coords_[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace repzeta::rings
