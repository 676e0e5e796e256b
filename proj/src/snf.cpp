#include "twinrep/snf.hpp"

#include <cmath>
#include <cstdlib>

#include "twinrep/error.hpp"

namespace twinrep::groups {

IntMat int_identity(size_t n) {
  IntMat m(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; i++) m[i][i] = 1;
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  IntMat m(r, std::vector<long long>(c, 0));
  for (size_t i = 0; i < r; i++)
    for (size_t t = 0; t < k; t++) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < c; j++) m[i][j] += a[i][t] * b[t][j];
    }
  return m;
}

long long int_det(const IntMat& a) {
  size_t n = a.size();
  IntMat m = a;
  long long prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; k++) {
    if (m[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && m[r][k] == 0) r++;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; i++)
      for (size_t j = k + 1; j < n; j++) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

namespace {

struct Snf {
  IntMat s, u, v, w;  // invariant: original = u * s * v,  w = v^-1
  size_t rows, cols;

  explicit Snf(const IntMat& a) : s(a) {
    rows = a.size();
    cols = rows ? a[0].size() : 0;
    u = int_identity(rows);
    v = int_identity(cols);
    w = int_identity(cols);
  }

  void row_swap(size_t i, size_t j) {
    std::swap(s[i], s[j]);
    for (size_t r = 0; r < rows; r++) std::swap(u[r][i], u[r][j]);
  }
  // row i += k * row j
  void row_add(size_t i, size_t j, long long k) {
    for (size_t c = 0; c < cols; c++) s[i][c] += k * s[j][c];
    for (size_t r = 0; r < rows; r++) u[r][j] -= k * u[r][i];
  }
  void row_neg(size_t i) {
    for (size_t c = 0; c < cols; c++) s[i][c] = -s[i][c];
    for (size_t r = 0; r < rows; r++) u[r][i] = -u[r][i];
  }
  void col_swap(size_t i, size_t j) {
    for (size_t r = 0; r < rows; r++) std::swap(s[r][i], s[r][j]);
    std::swap(v[i], v[j]);
    for (size_t r = 0; r < cols; r++) std::swap(w[r][i], w[r][j]);
  }
  // col j += k * col i
  void col_add(size_t j, size_t i, long long k) {
    for (size_t r = 0; r < rows; r++) s[r][j] += k * s[r][i];
    for (size_t c = 0; c < cols; c++) v[i][c] -= k * v[j][c];
    for (size_t r = 0; r < cols; r++) w[r][j] += k * w[r][i];
  }

  bool find_pivot(size_t t, size_t& pi, size_t& pj) {
    long long best = 0;
    for (size_t i = t; i < rows; i++)
      for (size_t j = t; j < cols; j++) {
        long long m = std::llabs(s[i][j]);
        if (m != 0 && (best == 0 || m < best)) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    return best != 0;
  }

  void eliminate(size_t t) {
    for (;;) {
      size_t pi = t, pj = t;
      if (!find_pivot(t, pi, pj)) return;
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (size_t i = t + 1; i < rows; i++) {
        if (s[i][t] == 0) continue;
        long long q = s[i][t] / s[t][t];
        row_add(i, t, -q);
        if (s[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; j++) {
        if (s[t][j] == 0) continue;
        long long q = s[t][j] / s[t][t];
        col_add(j, t, -q);
        if (s[t][j] != 0) clean = false;
      }
      if (clean) {
        if (s[t][t] < 0) row_neg(t);
        return;
      }
    }
  }

  void run() {
    size_t steps = std::min(rows, cols);
    for (size_t t = 0; t < steps; t++) eliminate(t);
    // enforce the divisibility chain
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i + 1 < steps; i++) {
        long long d = s[i][i], e = s[i + 1][i + 1];
        if (d == 0 && e != 0) {
          // zero before nonzero: swap into order
          row_swap(i, i + 1);
          col_swap(i, i + 1);
          changed = true;
          continue;
        }
        if (d != 0 && e % d != 0) {
          col_add(i, i + 1, 1);  // pulls e into column i
          eliminate(i);
          for (size_t t = i + 1; t < steps; t++) eliminate(t);
          changed = true;
        }
      }
    }
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& a) {
  for (const auto& row : a)
    if (row.size() != (a.empty() ? 0 : a[0].size())) throw Error("ragged integer matrix");
  Snf snf(a);
  snf.run();
  return SnfResult{snf.u, snf.s, snf.v, snf.w};
}

}  // namespace twinrep::groups
