#include "repzeta/rings/galois_ring.hpp"

#include <sstream>
#include <stdexcept>

#include "repzeta/rings/modular.hpp"

namespace repzeta::rings {

namespace {

void require_same(const GaloisRingPtr& a, const GaloisRingPtr& b) {
  if (a == b) return;
  if (!(*a == *b)) throw std::invalid_argument("Galois ring mismatch");
}

}  // namespace

std::uint64_t GaloisRingDescriptor::order() const { return checked_pow(pk, f); }

GaloisRingPtr build_galois_ring(std::uint32_t p, std::uint32_t k, std::uint32_t f) {
  if (k == 0) throw std::invalid_argument("build_galois_ring: k must be positive");
  auto d = std::make_shared<GaloisRingDescriptor>();
  d->residue_field = make_field(p, f);
  d->p = p;
  d->k = k;
  d->f = f;
  d->pk = checked_pow(p, k);
  d->modulus.assign(d->residue_field->modulus.begin(), d->residue_field->modulus.end());
  return d;
}

GaloisRingElement::GaloisRingElement(GaloisRingPtr ring, std::vector<std::uint64_t> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (coords_.size() != ring_->f) throw std::invalid_argument("GaloisRingElement: wrong coordinate count");
  for (auto& c : coords_) c %= ring_->pk;
}

GaloisRingElement GaloisRingElement::zero(const GaloisRingPtr& ring) {
  return GaloisRingElement(ring, std::vector<std::uint64_t>(ring->f, 0));
}

GaloisRingElement GaloisRingElement::one(const GaloisRingPtr& ring) { return from_int(ring, 1); }

GaloisRingElement GaloisRingElement::from_int(const GaloisRingPtr& ring, std::int64_t v) {
  std::vector<std::uint64_t> c(ring->f, 0);
  const auto m = static_cast<std::int64_t>(ring->pk);
  c[0] = static_cast<std::uint64_t>(((v % m) + m) % m);
  return GaloisRingElement(ring, std::move(c));
}

GaloisRingElement GaloisRingElement::from_index(const GaloisRingPtr& ring, std::uint64_t index) {
  std::vector<std::uint64_t> c(ring->f, 0);
  for (std::uint32_t i = 0; i < ring->f; ++i) {
    c[i] = index % ring->pk;
    index /= ring->pk;
  }
  if (index != 0) throw std::out_of_range("GaloisRingElement::from_index: index too large");
  return GaloisRingElement(ring, std::move(c));
}

std::uint64_t GaloisRingElement::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = coords_.size(); i-- > 0;) idx = idx * ring_->pk + coords_[i];
  return idx;
}

bool GaloisRingElement::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

bool GaloisRingElement::is_unit() const {
  for (auto c : coords_)
    if (c % ring_->p != 0) return true;
  return false;
}

FieldElement GaloisRingElement::residue() const {
  std::vector<std::uint32_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint32_t>(coords_[i] % ring_->p);
  return FieldElement(ring_->residue_field, std::move(c));
}

GaloisRingElement GaloisRingElement::operator-() const {
  std::vector<std::uint64_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (ring_->pk - coords_[i]) % ring_->pk;
  return GaloisRingElement(ring_, std::move(c));
}

GaloisRingElement operator+(const GaloisRingElement& a, const GaloisRingElement& b) {
  require_same(a.ring_, b.ring_);
  std::vector<std::uint64_t> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a.coords_[i], b.coords_[i], a.ring_->pk);
  return GaloisRingElement(a.ring_, std::move(c));
}

GaloisRingElement operator-(const GaloisRingElement& a, const GaloisRingElement& b) { return a + (-b); }

GaloisRingElement operator*(const GaloisRingElement& a, const GaloisRingElement& b) {
  require_same(a.ring_, b.ring_);
  const std::uint64_t m = a.ring_->pk;
  const std::size_t f = a.ring_->f;
  std::vector<std::uint64_t> prod(2 * f - 1, 0);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j) prod[i + j] = add_mod(prod[i + j], mul_mod(a.coords_[i], b.coords_[j], m), m);
  const auto& mod = a.ring_->modulus;
  for (std::size_t i = prod.size(); i-- > f;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < f; ++j) prod[i - f + j] = sub_mod(prod[i - f + j], mul_mod(c, mod[j], m), m);
  }
  prod.resize(f);
  return GaloisRingElement(a.ring_, std::move(prod));
}

bool operator==(const GaloisRingElement& a, const GaloisRingElement& b) {
  require_same(a.ring_, b.ring_);
  return a.coords_ == b.coords_;
}

GaloisRingElement GaloisRingElement::pow(std::uint64_t e) const {
  GaloisRingElement result = one(ring_);
  GaloisRingElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

GaloisRingElement GaloisRingElement::inverse() const {
  if (!is_unit()) throw std::domain_error("GaloisRingElement: inversion of non-unit");
  // The unit group has order p^{(k-1)f} (p^f - 1).
  const std::uint64_t q = ring_->residue_field->order();
  const std::uint64_t units = checked_pow(q, ring_->k - 1) * (q - 1);
  return pow(units - 1);
}

std::string GaloisRingElement::to_string() const {
  if (ring_->f == 1) return std::to_string(coords_[0]);
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
