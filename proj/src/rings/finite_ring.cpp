#include "repzeta/rings/finite_ring.hpp"

#include <functional>
#include <stdexcept>

#include "repzeta/rings/field.hpp"
#include "repzeta/rings/galois_ring.hpp"
#include "repzeta/rings/modular.hpp"
#include "repzeta/rings/truncated_poly.hpp"

namespace repzeta::rings {

RingDescriptor RingDescriptor::field(std::uint32_t p, std::uint32_t f) {
  RingDescriptor d;
  d.kind = RingKind::Field;
  d.p = p;
  d.k = 1;
  d.f = f;
  const auto fld = make_field(p, f);
  d.modulus_coeffs.assign(fld->modulus.begin(), fld->modulus.end());
  return d;
}

RingDescriptor RingDescriptor::truncated_poly(std::uint32_t p, std::uint32_t k, std::uint32_t f) {
  RingDescriptor d = field(p, f);
  if (k == 0) throw std::invalid_argument("truncation length must be positive");
  d.kind = RingKind::TruncatedPoly;
  d.k = k;
  return d;
}

RingDescriptor RingDescriptor::galois_ring(std::uint32_t p, std::uint32_t k, std::uint32_t f) {
  const auto gr = build_galois_ring(p, k, f);
  RingDescriptor d;
  d.kind = RingKind::GaloisRing;
  d.p = p;
  d.k = k;
  d.f = f;
  d.modulus_coeffs = gr->modulus;
  return d;
}

std::uint64_t RingDescriptor::order() const { return checked_pow(checked_pow(p, f), k); }
std::uint64_t RingDescriptor::residue_order() const { return checked_pow(p, f); }

std::string RingDescriptor::label() const {
  const std::string q = std::to_string(residue_order());
  switch (kind) {
    case RingKind::Field:
      return "F_" + q;
    case RingKind::TruncatedPoly:
      return "F_" + q + "[t]/(t^" + std::to_string(k) + ")";
    case RingKind::GaloisRing:
      if (f == 1) return "Z/" + std::to_string(checked_pow(p, k));
      return "GR(" + std::to_string(checked_pow(p, k)) + "," + std::to_string(f) + ")";
  }
  return "?";
}

std::string to_string(RingKind kind) {
  switch (kind) {
    case RingKind::Field:
      return "field";
    case RingKind::TruncatedPoly:
      return "truncated_poly";
    case RingKind::GaloisRing:
      return "galois_ring";
  }
  return "?";
}

RingKind ring_kind_from_string(const std::string& s) {
  if (s == "field") return RingKind::Field;
  if (s == "truncated_poly") return RingKind::TruncatedPoly;
  if (s == "galois_ring") return RingKind::GaloisRing;
  throw std::invalid_argument("unknown ring kind: " + s);
}

void to_json(nlohmann::json& j, const RingDescriptor& d) {
  j = nlohmann::json{{"kind", to_string(d.kind)}, {"p", d.p}, {"k", d.k}, {"f", d.f}, {"modulus_coeffs", d.modulus_coeffs}};
}

void from_json(const nlohmann::json& j, RingDescriptor& d) {
  const RingKind kind = ring_kind_from_string(j.at("kind").get<std::string>());
  const auto p = j.at("p").get<std::uint32_t>();
  const auto k = j.at("k").get<std::uint32_t>();
  const auto f = j.at("f").get<std::uint32_t>();
  switch (kind) {
    case RingKind::Field:
      d = RingDescriptor::field(p, f);
      break;
    case RingKind::TruncatedPoly:
      d = RingDescriptor::truncated_poly(p, k, f);
      break;
    case RingKind::GaloisRing:
      d = RingDescriptor::galois_ring(p, k, f);
      break;
  }
  if (j.contains("modulus_coeffs") && j.at("modulus_coeffs").get<std::vector<std::uint64_t>>() != d.modulus_coeffs) {
    throw std::invalid_argument("ring descriptor modulus does not match the canonical construction");
  }
}

namespace {

/// Uniform view of an exact ring model used to fill the Cayley tables.
struct ExactOps {
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> add, mul;
  std::function<std::uint32_t(std::uint64_t)> residue;
  std::function<std::string(std::uint64_t)> name;
  std::function<std::uint32_t(std::uint64_t)> trace;
};

ExactOps exact_ops(const RingDescriptor& d) {
  ExactOps ops;
  switch (d.kind) {
    case RingKind::Field: {
      auto fld = make_field(d.p, d.f);
      auto el = [fld](std::uint64_t i) { return FieldElement::from_index(fld, i); };
      ops.add = [el](auto a, auto b) { return (el(a) + el(b)).index(); };
      ops.mul = [el](auto a, auto b) { return (el(a) * el(b)).index(); };
      ops.residue = [](auto a) { return static_cast<std::uint32_t>(a); };
      ops.name = [el](auto a) { return el(a).to_string(); };
      ops.trace = [el](auto a) { return el(a).trace(); };
      break;
    }
    case RingKind::TruncatedPoly: {
      auto ring = make_truncated_poly_ring(make_field(d.p, d.f), d.k);
      auto el = [ring](std::uint64_t i) { return TruncPolyElement::from_index(ring, i); };
      ops.add = [el](auto a, auto b) { return (el(a) + el(b)).index(); };
      ops.mul = [el](auto a, auto b) { return (el(a) * el(b)).index(); };
      ops.residue = [el](auto a) { return static_cast<std::uint32_t>(el(a).coeffs()[0].index()); };
      ops.name = [el](auto a) { return el(a).to_string(); };
      break;
    }
    case RingKind::GaloisRing: {
      auto ring = build_galois_ring(d.p, d.k, d.f);
      auto el = [ring](std::uint64_t i) { return GaloisRingElement::from_index(ring, i); };
      ops.add = [el](auto a, auto b) { return (el(a) + el(b)).index(); };
      ops.mul = [el](auto a, auto b) { return (el(a) * el(b)).index(); };
      ops.residue = [el](auto a) { return static_cast<std::uint32_t>(el(a).residue().index()); };
      ops.name = [el](auto a) { return el(a).to_string(); };
      break;
    }
  }
  return ops;
}

}  // namespace

std::shared_ptr<const FiniteRing> FiniteRing::build(const RingDescriptor& desc) {
  const std::uint64_t order = desc.order();
  if (order > kMaxOrder) throw std::invalid_argument("FiniteRing: ring too large for table model: " + desc.label());
  std::shared_ptr<FiniteRing> r(new FiniteRing());
  r->desc_ = desc;
  r->n_ = static_cast<std::uint32_t>(order);
  r->q_ = static_cast<std::uint32_t>(desc.residue_order());
  r->char_ = desc.kind == RingKind::GaloisRing ? checked_pow(desc.p, desc.k) : desc.p;
  const ExactOps ops = exact_ops(desc);
  const std::size_t n = r->n_;
  r->add_.resize(n * n);
  r->mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const auto s = static_cast<Elem>(ops.add(a, b));
      const auto m = static_cast<Elem>(ops.mul(a, b));
      r->add_[a * n + b] = r->add_[b * n + a] = s;
      r->mul_[a * n + b] = r->mul_[b * n + a] = m;
    }
  }
  r->neg_.assign(n, 0);
  r->inv_.assign(n, kNoInverse);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (r->add_[a * n + b] == 0) r->neg_[a] = static_cast<Elem>(b);
      if (r->mul_[a * n + b] == 1) r->inv_[a] = static_cast<Elem>(b);
    }
  }
  r->residue_.resize(n);
  r->section_.assign(r->q_, kNoInverse);
  r->names_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    r->residue_[a] = ops.residue(a);
    if (r->section_[r->residue_[a]] == kNoInverse) r->section_[r->residue_[a]] = static_cast<Elem>(a);
    if (r->residue_[a] == 0) r->ideal_.push_back(static_cast<Elem>(a));
    r->names_[a] = ops.name(a);
  }
  if (ops.trace) {
    r->trace_.resize(n);
    for (std::size_t a = 0; a < n; ++a) r->trace_[a] = ops.trace(a);
  }
  return r;
}

FiniteRing::Elem FiniteRing::inv(Elem a) const {
  if (inv_[a] == kNoInverse) throw std::domain_error("FiniteRing: inversion of non-unit " + names_[a]);
  return inv_[a];
}

FiniteRing::Elem FiniteRing::from_int(std::int64_t v) const {
  const auto c = static_cast<std::int64_t>(char_);
  std::int64_t r = ((v % c) + c) % c;
  // Integers map into the prime subring, spanned by repeated addition of one.
  Elem acc = 0;
  for (std::int64_t i = 0; i < r; ++i) acc = add(acc, 1);
  return acc;
}

std::uint32_t FiniteRing::trace(Elem a) const {
  if (trace_.empty()) throw std::logic_error("FiniteRing::trace: ring is not a field");
  return trace_[a];
}

}  // namespace repzeta::rings
