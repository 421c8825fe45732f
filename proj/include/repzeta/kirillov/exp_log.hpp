#pragma once

#include "repzeta/groups/matrix.hpp"

namespace repzeta::kirillov {

using groups::Matrix;
using groups::MatrixOps;

bool is_nilpotent(const MatrixOps& ops, const Matrix& a);
bool is_unipotent(const MatrixOps& ops, const Matrix& u);

/// exp(A) = sum_{k < n} A^k / k! for nilpotent A. Requires residue characteristic p >= n
/// (std::domain_error) and a nilpotent argument (std::invalid_argument).
Matrix matrix_exp(const MatrixOps& ops, const Matrix& a);
/// log(u) = -sum_{1 <= k < n} (I - u)^k / k for unipotent u; same preconditions.
Matrix matrix_log(const MatrixOps& ops, const Matrix& u);

}  // namespace repzeta::kirillov
