#include "operalg/linalg.hpp"

namespace operalg {

RatMat identity_matrix(std::size_t n) {
  RatMat m(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

RatVec mat_apply(const RatMat& a, const RatVec& x) {
  RatVec out(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0 && x[j] != 0) out[i] += a[i][j] * x[j];
  return out;
}

RatMat mat_inverse(const RatMat& a) {
  std::size_t n = a.size();
  RatMat work = a;
  RatMat inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work[piv][col] == 0) ++piv;
    if (piv == n) throw InputError("singular matrix");
    std::swap(work[piv], work[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      Rat f = work[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<int> rref_in_place(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rat d = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  RatMat aug(rows, RatVec(cols + 1, Rat(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots = rref_in_place(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == static_cast<int>(cols)) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[static_cast<std::size_t>(pivots[k])] = aug[k][cols];
  return x;
}

}  // namespace operalg
