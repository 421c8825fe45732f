#include "repzeta/kirillov/exp_log.hpp"

#include <stdexcept>

namespace repzeta::kirillov {

namespace {

void require_small_n(const MatrixOps& ops) {
  // 1/k for k < n must exist.
  if (ops.ring().prime() < ops.n())
    throw std::domain_error("exp/log need residue characteristic " + std::to_string(ops.ring().prime()) + " >= n = " +
                            std::to_string(ops.n()));
}

}  // namespace

bool is_nilpotent(const MatrixOps& ops, const Matrix& a) {
  Matrix power = a;
  for (unsigned k = 1; k < ops.n(); ++k) power = ops.multiply(power, a);
  return power == ops.zero();
}

bool is_unipotent(const MatrixOps& ops, const Matrix& u) { return is_nilpotent(ops, ops.sub(u, ops.identity())); }

Matrix matrix_exp(const MatrixOps& ops, const Matrix& a) {
  require_small_n(ops);
  if (!is_nilpotent(ops, a)) throw std::invalid_argument("matrix_exp: argument is not nilpotent");
  const auto& r = ops.ring();
  Matrix result = ops.identity();
  Matrix term = ops.identity();  // A^k / k!
  for (unsigned k = 1; k < ops.n(); ++k) {
    term = ops.scale(r.inv(r.from_int(k)), ops.multiply(term, a));
    result = ops.add(result, term);
  }
  return result;
}

Matrix matrix_log(const MatrixOps& ops, const Matrix& u) {
  require_small_n(ops);
  if (!is_unipotent(ops, u)) throw std::invalid_argument("matrix_log: argument is not unipotent");
  const auto& r = ops.ring();
  const Matrix x = ops.sub(ops.identity(), u);
  Matrix power = ops.identity();
  Matrix sum = ops.zero();
  for (unsigned k = 1; k < ops.n(); ++k) {
    power = ops.multiply(power, x);
    sum = ops.add(sum, ops.scale(r.inv(r.from_int(k)), power));
  }
  return ops.sub(ops.zero(), sum);
}

}  // namespace repzeta::kirillov
