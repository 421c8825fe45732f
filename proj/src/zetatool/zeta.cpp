#include "repzeta/zetatool/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "repzeta/error.hpp"

namespace repzeta::zetatool {

BigReal::BigReal(mpfr_prec_t precision) { mpfr_init2(value_, precision); mpfr_set_zero(value_, 1); }
BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}
BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}
BigReal::~BigReal() { mpfr_clear(value_); }

namespace {

mpz_class pow_u(std::uint64_t base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace

mpq_class zeta_exact(const DimensionMultiset& z, long s) {
  mpq_class total = 0;
  for (const auto& [d, m] : z.degrees) {
    const mpz_class p = pow_u(d, static_cast<unsigned long>(s < 0 ? -s : s));
    mpq_class term = s < 0 ? mpq_class(p) : mpq_class(mpz_class(1), p);
    term.canonicalize();
    total += term * static_cast<unsigned long>(m);
  }
  return total;
}

BigReal zeta_real(const DimensionMultiset& z, const mpq_class& s, mpfr_prec_t precision) {
  BigReal total(precision), sr(precision), term(precision);
  mpfr_set_q(sr.get(), s.get_mpq_t(), MPFR_RNDN);
  mpfr_neg(sr.get(), sr.get(), MPFR_RNDN);
  for (const auto& [d, m] : z.degrees) {
    mpfr_set_ui(term.get(), static_cast<unsigned long>(d), MPFR_RNDN);
    mpfr_pow(term.get(), term.get(), sr.get(), MPFR_RNDN);
    mpfr_mul_ui(term.get(), term.get(), static_cast<unsigned long>(m), MPFR_RNDN);
    mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
  }
  return total;
}

SemiPolynomial::SemiPolynomial(std::vector<SemiTerm> terms) {
  std::map<std::uint64_t, mpq_class> merged;
  for (auto& t : terms) {
    if (t.d == 0) throw std::invalid_argument("semi-polynomial exponent tag must be positive");
    merged[t.d] += t.coeff;
  }
  for (auto& [d, c] : merged)
    if (c != 0) terms_.push_back(SemiTerm{c, d});
}

std::string SemiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + t.coeff.get_str() + ")";
    s += t.d == 1 ? "" : "*u^(-log " + std::to_string(t.d) + ")";
  }
  return s;
}

BigReal SemiPolynomial::evaluate_log(const BigReal& t, mpfr_prec_t precision) const {
  BigReal total(precision), term(precision), c(precision);
  for (const auto& st : terms_) {
    // a * d^(-t)
    mpfr_set_ui(term.get(), static_cast<unsigned long>(st.d), MPFR_RNDN);
    mpfr_log(term.get(), term.get(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), t.get(), MPFR_RNDN);
    mpfr_neg(term.get(), term.get(), MPFR_RNDN);
    mpfr_exp(term.get(), term.get(), MPFR_RNDN);
    mpfr_set_q(c.get(), st.coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), c.get(), MPFR_RNDN);
    mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
  }
  return total;
}

SemiPolynomial difference_semipoly(const DimensionMultiset& z1, const DimensionMultiset& z2) {
  std::vector<SemiTerm> terms;
  for (const auto& [d, m] : z1.degrees) terms.push_back({mpq_class(static_cast<unsigned long>(m)), d});
  for (const auto& [d, m] : z2.degrees) terms.push_back({-mpq_class(static_cast<unsigned long>(m)), d});
  return SemiPolynomial(std::move(terms));
}

std::uint64_t descartes_bound(const std::vector<mpq_class>& coeffs) {
  std::uint64_t switches = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++switches;
    last = s;
  }
  return 2 * switches;
}

std::uint64_t descartes_bound(const SemiPolynomial& sp) {
  std::vector<mpq_class> c;
  for (const auto& t : sp.terms()) c.push_back(t.coeff);
  return descartes_bound(c);
}

int certified_sign(const SemiPolynomial& sp, const mpq_class& u, mpfr_prec_t start, mpfr_prec_t max_precision) {
  if (u <= 0) throw std::invalid_argument("certified_sign: u must be positive");
  if (u == 1) {
    mpq_class s = 0;
    for (const auto& t : sp.terms()) s += t.coeff;
    return sgn(s);
  }
  for (mpfr_prec_t prec = start; prec <= max_precision; prec *= 2) {
    BigReal t(prec), total(prec), bound(prec), term(prec), c(prec), scale(prec);
    mpfr_set_q(t.get(), u.get_mpq_t(), MPFR_RNDN);
    mpfr_log(t.get(), t.get(), MPFR_RNDN);
    for (const auto& st : sp.terms()) {
      mpfr_set_ui(term.get(), static_cast<unsigned long>(st.d), MPFR_RNDN);
      mpfr_log(term.get(), term.get(), MPFR_RNDN);
      mpfr_mul(term.get(), term.get(), t.get(), MPFR_RNDN);
      mpfr_neg(term.get(), term.get(), MPFR_RNDN);
      // relative error of exp(x) computed from a rounded x is about (|x| + a few ulps)
      mpfr_abs(scale.get(), term.get(), MPFR_RNDU);
      mpfr_add_ui(scale.get(), scale.get(), 8, MPFR_RNDU);
      mpfr_exp(term.get(), term.get(), MPFR_RNDN);
      mpfr_set_q(c.get(), st.coeff.get_mpq_t(), MPFR_RNDN);
      mpfr_mul(term.get(), term.get(), c.get(), MPFR_RNDN);
      mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
      mpfr_abs(c.get(), term.get(), MPFR_RNDU);
      mpfr_mul(c.get(), c.get(), scale.get(), MPFR_RNDU);
      mpfr_add(bound.get(), bound.get(), c.get(), MPFR_RNDU);
    }
    mpfr_mul_2si(bound.get(), bound.get(), -static_cast<long>(prec) + 4, MPFR_RNDU);
    mpfr_abs(c.get(), total.get(), MPFR_RNDN);
    if (mpfr_cmp(c.get(), bound.get()) > 0) return total.sign();
  }
  return 0;
}

RootProbe probe_positive_roots(const SemiPolynomial& sp, std::size_t half_grid, unsigned bisections) {
  RootProbe out;
  const auto& terms = sp.terms();
  if (terms.empty()) {
    out.identically_zero = true;
    return out;
  }
  if (terms.size() == 1) return out;
  // Beyond |t| = T one extreme term dominates the rest, so every root has |log u| < T.
  auto dominance = [&](std::size_t lead, std::size_t next) {
    double rest = 0;
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (i != lead) rest += std::fabs(terms[i].coeff.get_d());
    const double ratio = std::fabs(std::log(static_cast<double>(terms[next].d)) - std::log(static_cast<double>(terms[lead].d)));
    return std::log(std::max(rest / std::fabs(terms[lead].coeff.get_d()), 1.0)) / ratio;
  };
  const double t_max = std::max(dominance(0, 1), dominance(terms.size() - 1, terms.size() - 2)) + 1.0;
  const double h = t_max / static_cast<double>(half_grid);

  std::vector<mpq_class> grid;
  for (long j = -static_cast<long>(half_grid); j <= static_cast<long>(half_grid); ++j)
    grid.push_back(j == 0 ? mpq_class(1) : mpq_class(std::exp(static_cast<double>(j) * h)));
  int prev_sign = 0;
  mpq_class prev_u;
  for (const auto& u : grid) {
    const int s = certified_sign(sp, u);
    if (s == 0) {
      out.zeros.push_back(u);
      prev_sign = 0;
      continue;
    }
    if (prev_sign != 0 && s != prev_sign) {
      mpq_class lo = prev_u, hi = u;
      int slo = prev_sign;
      for (unsigned b = 0; b < bisections; ++b) {
        mpq_class mid = (lo + hi) / 2;
        const int sm = certified_sign(sp, mid);
        if (sm == 0) break;
        if (sm == slo) lo = mid;
        else hi = mid;
      }
      out.brackets.emplace_back(lo, hi);
    }
    prev_sign = s;
    prev_u = u;
  }
  return out;
}

std::string to_string(Mode m) { return m == Mode::Direct ? "direct" : "prop21"; }

Mode mode_from_string(const std::string& s) {
  if (s == "direct") return Mode::Direct;
  if (s == "prop21") return Mode::Prop21;
  throw std::invalid_argument("unknown equivalence mode '" + s + "'");
}

Verdict check_equivalence(const DimensionMultiset& z1, const DimensionMultiset& z2, Mode mode) {
  Verdict v;
  v.n1 = z1.distinct();
  v.n2 = z2.distinct();
  v.mode = mode;
  const long k = static_cast<long>(z1.distinct());
  if (mode == Mode::Direct) {
    v.equal = z1.degrees == z2.degrees;
  } else {
    v.equal = true;
    for (long s = 0; s <= 8 * k; s += 2) {
      v.points.push_back(s);
      if (zeta_exact(z1, s) != zeta_exact(z2, s)) v.equal = false;
    }
  }
  if (!v.equal) {
    for (long s = -2; s <= 8 * k; s += 2)
      if (zeta_exact(z1, s) != zeta_exact(z2, s)) {
        v.witness_s = s;
        break;
      }
    if (!v.witness_s) throw MathError("distinct multisets agree at s = -2, 0, ..., 8N(z1)");
  }
  return v;
}

std::pair<Verdict, Verdict> check_equivalence_both(const DimensionMultiset& z1, const DimensionMultiset& z2) {
  auto direct = check_equivalence(z1, z2, Mode::Direct);
  auto prop = check_equivalence(z1, z2, Mode::Prop21);
  if (direct.equal != prop.equal)
    throw MathError("finite-evaluation verdict disagrees with direct comparison for " + z1.to_string() + " vs " +
                    z2.to_string());
  return {std::move(direct), std::move(prop)};
}

void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json{{"n1", v.n1}, {"n2", v.n2}, {"mode", to_string(v.mode)}, {"points", v.points}, {"equal", v.equal}};
  j["witness_s"] = v.witness_s ? nlohmann::json(*v.witness_s) : nlohmann::json(nullptr);
}

std::set<std::uint64_t> sigma_set(const std::set<std::uint64_t>& a, std::uint64_t m, std::size_t max_size) {
  if (a.empty()) throw std::invalid_argument("sigma_set: A must be nonempty");
  if (m == 0) throw std::invalid_argument("sigma_set: M must be positive");
  std::set<std::uint64_t> result(a.begin(), a.end());
  std::set<std::uint64_t> layer = result;  // sums of exactly r elements
  for (std::uint64_t r = 2; r <= m; ++r) {
    std::set<std::uint64_t> next;
    for (std::uint64_t x : layer)
      for (std::uint64_t y : a) {
        next.insert(x + y);
        if (next.size() > max_size) throw BudgetExceeded("sigma_set exceeds " + std::to_string(max_size) + " elements");
      }
    result.insert(next.begin(), next.end());
    if (result.size() > max_size) throw BudgetExceeded("sigma_set exceeds " + std::to_string(max_size) + " elements");
    layer = std::move(next);
  }
  return result;
}

}  // namespace repzeta::zetatool
