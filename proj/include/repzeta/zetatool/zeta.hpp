#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>
#include <json.hpp>

#include "repzeta/chartab/dimension_multiset.hpp"

namespace repzeta::zetatool {

using chartab::DimensionMultiset;

/// Owning MPFR value.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t precision = 128);
  BigReal(const BigReal& other);
  BigReal& operator=(const BigReal& other);
  ~BigReal();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }

 private:
  mpfr_t value_;
};

/// zeta(s) = sum_d m_d d^-s, exact for integer s.
mpq_class zeta_exact(const DimensionMultiset& z, long s);
/// zeta(s) for rational s, rounded to the given precision.
BigReal zeta_real(const DimensionMultiset& z, const mpq_class& s, mpfr_prec_t precision = 256);

/// coefficient * u^(-log d).
struct SemiTerm {
  mpq_class coeff;
  std::uint64_t d = 1;
};

/// Finite sum of terms a u^(-log d), d a positive integer. Terms are kept with distinct d,
/// nonzero coefficients, sorted by d ascending (that is, by exponent descending).
class SemiPolynomial {
 public:
  SemiPolynomial() = default;
  explicit SemiPolynomial(std::vector<SemiTerm> terms);

  const std::vector<SemiTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::string to_string() const;

  /// Value at u = e^t.
  BigReal evaluate_log(const BigReal& t, mpfr_prec_t precision) const;

 private:
  std::vector<SemiTerm> terms_;
};

/// zeta_1(log u) - zeta_2(log u).
SemiPolynomial difference_semipoly(const DimensionMultiset& z1, const DimensionMultiset& z2);

/// Twice the number of sign switches in a coefficient list ordered by exponent.
std::uint64_t descartes_bound(const std::vector<mpq_class>& coeffs_by_exponent);
std::uint64_t descartes_bound(const SemiPolynomial& sp);

/// Sign of sp at a positive rational u: -1, 0 or 1. Precision is doubled from `start`
/// until the rounding bound separates the value from zero; 0 means it was exactly zero
/// (u = 1) or could not be separated below `max_precision`.
int certified_sign(const SemiPolynomial& sp, const mpq_class& u, mpfr_prec_t start = 128,
                   mpfr_prec_t max_precision = 8192);

struct RootProbe {
  bool identically_zero = false;
  std::vector<mpq_class> zeros;                               // grid points with sign 0
  std::vector<std::pair<mpq_class, mpq_class>> brackets;      // sign changes, narrowed by bisection
  std::size_t count() const { return zeros.size() + brackets.size(); }
};

/// Distinct positive roots detected by sign changes on a grid that covers every root
/// (grid in log u, containing u = 1), each bracket narrowed by rational bisection.
RootProbe probe_positive_roots(const SemiPolynomial& sp, std::size_t half_grid = 1024, unsigned bisections = 24);

enum class Mode { Direct, Prop21 };
std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

struct Verdict {
  std::size_t n1 = 0;  // N(z1)
  std::size_t n2 = 0;  // N(z2)
  Mode mode = Mode::Direct;
  std::vector<long> points;
  bool equal = false;
  std::optional<long> witness_s;
};

/// Direct: compare the multisets. Prop21: with k = N(z1), compare zeta exactly at
/// s = 0, 2, ..., 8k. When unequal the witness is the first s in -2, 0, 2, ... where the
/// zeta values differ.
Verdict check_equivalence(const DimensionMultiset& z1, const DimensionMultiset& z2, Mode mode);
/// Both verdicts; throws MathError if they disagree.
std::pair<Verdict, Verdict> check_equivalence_both(const DimensionMultiset& z1, const DimensionMultiset& z2);

void to_json(nlohmann::json& j, const Verdict& v);

/// All sums of between 1 and M elements of A (with repetition). Throws BudgetExceeded if
/// the result would exceed `max_size` elements.
std::set<std::uint64_t> sigma_set(const std::set<std::uint64_t>& a, std::uint64_t m, std::size_t max_size = 10'000'000);

}  // namespace repzeta::zetatool
