#include "repzeta/groups/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "repzeta/rings/modular.hpp"

namespace repzeta::groups {

MatrixOps::MatrixOps(rings::RingPtr ring, unsigned n) : ring_(std::move(ring)), n_(n) {
  if (n == 0 || n > kMaxDim) throw std::invalid_argument("MatrixOps: unsupported matrix size " + std::to_string(n));
  // Encodings must fit in 64 bits.
  const unsigned __int128 space = static_cast<unsigned __int128>(rings::checked_pow(ring_->size(), n * n - 1)) * ring_->size();
  if (space > UINT64_MAX) throw std::invalid_argument("MatrixOps: matrix encoding exceeds 64 bits");
}

Matrix MatrixOps::identity() const {
  Matrix m{};
  for (unsigned i = 0; i < n_; ++i) m.e[i * n_ + i] = ring_->one();
  return m;
}

void MatrixOps::multiply(const Elem* a, const Elem* b, Elem* out) const {
  const auto& r = *ring_;
  if (n_ == 2) {
    out[0] = r.add(r.mul(a[0], b[0]), r.mul(a[1], b[2]));
    out[1] = r.add(r.mul(a[0], b[1]), r.mul(a[1], b[3]));
    out[2] = r.add(r.mul(a[2], b[0]), r.mul(a[3], b[2]));
    out[3] = r.add(r.mul(a[2], b[1]), r.mul(a[3], b[3]));
    return;
  }
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      Elem acc = r.mul(a[i * n_], b[j]);
      for (unsigned k = 1; k < n_; ++k) acc = r.add(acc, r.mul(a[i * n_ + k], b[k * n_ + j]));
      out[i * n_ + j] = acc;
    }
  }
}

Matrix MatrixOps::multiply(const Matrix& a, const Matrix& b) const {
  Matrix out{};
  multiply(a.e.data(), b.e.data(), out.e.data());
  return out;
}

Matrix MatrixOps::add(const Matrix& a, const Matrix& b) const {
  Matrix out{};
  for (unsigned i = 0; i < entries(); ++i) out.e[i] = ring_->add(a.e[i], b.e[i]);
  return out;
}

Matrix MatrixOps::sub(const Matrix& a, const Matrix& b) const {
  Matrix out{};
  for (unsigned i = 0; i < entries(); ++i) out.e[i] = ring_->sub(a.e[i], b.e[i]);
  return out;
}

Matrix MatrixOps::scale(Elem c, const Matrix& a) const {
  Matrix out{};
  for (unsigned i = 0; i < entries(); ++i) out.e[i] = ring_->mul(c, a.e[i]);
  return out;
}

Elem MatrixOps::det(const Matrix& a) const {
  const auto& r = *ring_;
  if (n_ == 1) return a.e[0];
  if (n_ == 2) return r.sub(r.mul(a.e[0], a.e[3]), r.mul(a.e[1], a.e[2]));
  // Leibniz expansion; exact over any commutative ring.
  std::array<unsigned, kMaxDim> perm{};
  std::iota(perm.begin(), perm.begin() + n_, 0u);
  Elem total = 0;
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = i + 1; j < n_; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Elem term = r.one();
    for (unsigned i = 0; i < n_ && term != 0; ++i) term = r.mul(term, a.e[i * n_ + perm[i]]);
    total = (inversions % 2 == 0) ? r.add(total, term) : r.sub(total, term);
  } while (std::next_permutation(perm.begin(), perm.begin() + n_));
  return total;
}

std::optional<Matrix> MatrixOps::inverse(const Matrix& a) const {
  const auto& r = *ring_;
  Matrix m = a;
  Matrix inv = identity();
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = n_;
    for (unsigned row = col; row < n_; ++row) {
      if (r.is_unit(m.e[row * n_ + col])) {
        pivot = row;
        break;
      }
    }
    // In a local ring a column without a unit below the diagonal means a non-unit determinant.
    if (pivot == n_) return std::nullopt;
    if (pivot != col) {
      for (unsigned j = 0; j < n_; ++j) {
        std::swap(m.e[pivot * n_ + j], m.e[col * n_ + j]);
        std::swap(inv.e[pivot * n_ + j], inv.e[col * n_ + j]);
      }
    }
    const Elem s = r.inv(m.e[col * n_ + col]);
    for (unsigned j = 0; j < n_; ++j) {
      m.e[col * n_ + j] = r.mul(s, m.e[col * n_ + j]);
      inv.e[col * n_ + j] = r.mul(s, inv.e[col * n_ + j]);
    }
    for (unsigned row = 0; row < n_; ++row) {
      if (row == col) continue;
      const Elem factor = m.e[row * n_ + col];
      if (factor == 0) continue;
      for (unsigned j = 0; j < n_; ++j) {
        m.e[row * n_ + j] = r.sub(m.e[row * n_ + j], r.mul(factor, m.e[col * n_ + j]));
        inv.e[row * n_ + j] = r.sub(inv.e[row * n_ + j], r.mul(factor, inv.e[col * n_ + j]));
      }
    }
  }
  return inv;
}

std::uint64_t MatrixOps::encode(const Elem* a) const {
  const std::uint64_t base = ring_->size();
  std::uint64_t code = 0;
  for (unsigned i = 0; i < entries(); ++i) code = code * base + a[i];
  return code;
}

Matrix MatrixOps::decode(std::uint64_t code) const {
  const std::uint64_t base = ring_->size();
  Matrix m{};
  for (unsigned i = entries(); i-- > 0;) {
    m.e[i] = static_cast<Elem>(code % base);
    code /= base;
  }
  return m;
}

std::string MatrixOps::to_string(const Matrix& a) const {
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (unsigned j = 0; j < n_; ++j) os << (j ? ", " : "") << ring_->to_string(a.e[i * n_ + j]);
  }
  os << ']';
  return os.str();
}

}  // namespace repzeta::groups
