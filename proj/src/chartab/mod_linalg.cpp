#include "mod_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "repzeta/rings/modular.hpp"

namespace repzeta::chartab::detail {

using rings::inv_mod;

namespace {

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t l) { return a * b % l; }
inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t l) { return a >= b ? a - b : a + l - b; }

}  // namespace

void hessenberg(const ModMatrix& m, std::uint64_t l, ModMatrix& h, ModMatrix& q) {
  const std::size_t n = m.rows;
  h = m;
  q = ModMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) q(i, i) = 1;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
      for (std::size_t r = 0; r < n; ++r) std::swap(q(r, piv), q(r, j + 1));
    }
    const std::uint64_t inv = inv_mod(h(j + 1, j), l);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      const std::uint64_t u = mulm(h(k, j), inv, l);
      // row_k -= u row_{j+1}; then column_{j+1} += u column_k
      for (std::size_t c = j; c < n; ++c) h(k, c) = subm(h(k, c), mulm(u, h(j + 1, c), l), l);
      for (std::size_t r = 0; r < n; ++r) {
        h(r, j + 1) = (h(r, j + 1) + mulm(u, h(r, k), l)) % l;
        q(r, j + 1) = (q(r, j + 1) + mulm(u, q(r, k), l)) % l;
      }
    }
  }
}

rings::PolyModP hessenberg_charpoly(const ModMatrix& h, std::uint64_t l) {
  const std::size_t n = h.rows;
  // p[m] = charpoly of the leading m x m block.
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    const std::size_t c = m - 1;  // new column / row index
    std::vector<std::uint64_t> cur(m + 1, 0);
    // (x - h_cc) p[m-1]
    for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
      cur[d + 1] = (cur[d + 1] + p[m - 1][d]) % l;
      cur[d] = subm(cur[d], mulm(h(c, c), p[m - 1][d], l), l);
    }
    // - sum_{i=1}^{c} h_{c-i, c} (prod_{t=c-i+1}^{c} h_{t, t-1}) p[c-i]
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i <= c; ++i) {
      prod = mulm(prod, h(c - i + 1, c - i), l);
      if (prod == 0) break;
      const std::uint64_t coef = mulm(h(c - i, c), prod, l);
      if (coef == 0) continue;
      const auto& prev = p[c - i];
      for (std::size_t d = 0; d < prev.size(); ++d) cur[d] = subm(cur[d], mulm(coef, prev[d], l), l);
    }
    p[m] = std::move(cur);
  }
  return rings::PolyModP(l, p[n]);
}

ModMatrix null_space(ModMatrix m, std::uint64_t l) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::size_t> pivot_col;  // pivot column of echelon row t
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != row)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(piv, k), m(row, k));
    const std::uint64_t inv = inv_mod(m(row, c), l);
    for (std::size_t k = c; k < cols; ++k) m(row, k) = mulm(m(row, k), inv, l);
    for (std::size_t r = row + 1; r < rows; ++r) {
      const std::uint64_t u = m(r, c);
      if (u == 0) continue;
      for (std::size_t k = c; k < cols; ++k) m(r, k) = subm(m(r, k), mulm(u, m(row, k), l), l);
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  ModMatrix out(cols, free.size());
  std::vector<std::uint64_t> x(cols);
  for (std::size_t f = 0; f < free.size(); ++f) {
    std::fill(x.begin(), x.end(), 0);
    x[free[f]] = 1;
    for (std::size_t t = pivot_col.size(); t-- > 0;) {
      const std::size_t c = pivot_col[t];
      std::uint64_t s = 0;
      for (std::size_t k = c + 1; k < cols; ++k)
        if (m(t, k) != 0 && x[k] != 0) s = (s + mulm(m(t, k), x[k], l)) % l;
      x[c] = s == 0 ? 0 : l - s;
    }
    for (std::size_t c = 0; c < cols; ++c) out(c, f) = x[c];
  }
  return out;
}

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, std::uint64_t l) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  ModMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const std::uint64_t u = a(i, k);
      if (u == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = (c(i, j) + u * b(k, j)) % l;
    }
  return c;
}

ModMatrix column_echelon(const ModMatrix& b, std::uint64_t l, std::vector<std::size_t>& pivots) {
  // Work on the transpose: rows are the spanning vectors.
  const std::size_t n = b.rows, e = b.cols;
  ModMatrix v(e, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < e; ++j) v(j, i) = b(i, j);
  std::vector<std::size_t> piv;
  for (std::size_t t = 0; t < e; ++t) {
    std::size_t c = 0;
    while (c < n && v(t, c) == 0) ++c;
    if (c == n) throw std::invalid_argument("column_echelon: dependent columns");
    const std::uint64_t inv = inv_mod(v(t, c), l);
    for (std::size_t k = 0; k < n; ++k) v(t, k) = mulm(v(t, k), inv, l);
    for (std::size_t s = 0; s < e; ++s) {
      if (s == t || v(s, c) == 0) continue;
      const std::uint64_t u = v(s, c);
      for (std::size_t k = 0; k < n; ++k) v(s, k) = subm(v(s, k), mulm(u, v(t, k), l), l);
    }
    piv.push_back(c);
  }
  // Order columns by pivot row.
  std::vector<std::size_t> order(e);
  for (std::size_t t = 0; t < e; ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return piv[x] < piv[y]; });
  ModMatrix out(n, e);
  pivots.assign(e, 0);
  for (std::size_t c = 0; c < e; ++c) {
    pivots[c] = piv[order[c]];
    for (std::size_t i = 0; i < n; ++i) out(i, c) = v(order[c], i);
  }
  return out;
}

}  // namespace repzeta::chartab::detail
