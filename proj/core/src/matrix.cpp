#include "quatinv/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace quatinv {

Mat mat_identity(int n) {
  Mat m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  size_t m = a.size(), k = b.size(), n = b[0].size();
  assert(a[0].size() == k);
  Mat r(m, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < m; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

std::vector<Int> vec_mat(const std::vector<Int>& v, const Mat& a) {
  assert(!a.empty() && v.size() == a.size());
  std::vector<Int> r(a[0].size(), Int(0));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * a[i][j];
  }
  return r;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat r(a[0].size(), std::vector<Int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

Int mat_det(Mat m) {
  int n = (int)m.size();
  if (n == 0) return Int(1);
  assert((int)m[0].size() == n);
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] /= denom;
      }
      m[i][k] = 0;
    }
    denom = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Mat mat_adjugate(const Mat& a) {
  int n = (int)a.size();
  Mat adj(n, std::vector<Int>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor;
      minor.reserve(n - 1);
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Int> row;
        row.reserve(n - 1);
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      Int d = mat_det(std::move(minor));
      adj[j][i] = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

Mat hnf_rows(Mat a) {
  if (a.empty()) return a;
  size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t j = 0; j < cols && r < rows; ++j) {
    // gcd-eliminate column j below row r
    for (;;) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i)
        if (a[i][j] != 0 && (best == rows || abs(a[i][j]) < abs(a[best][j])))
          best = i;
      if (best == rows) break;  // column all zero from r down
      std::swap(a[r], a[best]);
      bool clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (a[i][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[r][j].get_mpz_t());
        for (size_t c = 0; c < cols; ++c) a[i][c] -= q * a[r][c];
        if (a[i][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][j] == 0) continue;
    if (a[r][j] < 0)
      for (size_t c = 0; c < cols; ++c) a[r][c] = -a[r][c];
    for (size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[r][j].get_mpz_t());
      if (q != 0)
        for (size_t c = 0; c < cols; ++c) a[i][c] -= q * a[r][c];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

namespace {
int pivot_col(const std::vector<Int>& row) {
  for (size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return (int)j;
  return -1;
}
}  // namespace

bool hnf_contains(const Mat& h, const std::vector<Int>& v) {
  std::vector<Int> w = v;
  size_t row = 0;
  for (size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0) continue;
    while (row < h.size() && pivot_col(h[row]) < (int)j) ++row;
    if (row >= h.size() || pivot_col(h[row]) != (int)j) return false;
    if (w[j] % h[row][j] != 0) return false;
    Int q = w[j] / h[row][j];
    for (size_t c = j; c < w.size(); ++c) w[c] -= q * h[row][c];
  }
  return true;
}

std::vector<Int> hnf_coords(const Mat& h, const std::vector<Int>& v) {
  std::vector<Int> w = v, coords(h.size(), Int(0));
  size_t row = 0;
  for (size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0) continue;
    while (row < h.size() && pivot_col(h[row]) < (int)j) ++row;
    if (row >= h.size() || pivot_col(h[row]) != (int)j || w[j] % h[row][j] != 0)
      throw std::domain_error("hnf_coords: vector not in lattice");
    Int q = w[j] / h[row][j];
    coords[row] = q;
    for (size_t c = j; c < w.size(); ++c) w[c] -= q * h[row][c];
  }
  return coords;
}

void snf(const Mat& a0, Mat& u, Mat& v, Mat& d) {
  d = a0;
  int m = (int)d.size();
  int n = m ? (int)d[0].size() : 0;
  u = mat_identity(m);
  v = mat_identity(n);
  auto row_sub = [&](int i, int k, const Int& q) {
    for (int c = 0; c < n; ++c) d[i][c] -= q * d[k][c];
    for (int c = 0; c < m; ++c) u[i][c] -= q * u[k][c];
  };
  auto col_sub = [&](int j, int k, const Int& q) {
    for (int r = 0; r < m; ++r) d[r][j] -= q * d[r][k];
    for (int r = 0; r < n; ++r) v[r][j] -= q * v[r][k];
  };
  auto row_swap = [&](int i, int k) {
    std::swap(d[i], d[k]);
    std::swap(u[i], u[k]);
  };
  auto col_swap = [&](int j, int k) {
    for (int r = 0; r < m; ++r) std::swap(d[r][j], d[r][k]);
    for (int r = 0; r < n; ++r) std::swap(v[r][j], v[r][k]);
  };
  auto row_neg = [&](int i) {
    for (int c = 0; c < n; ++c) d[i][c] = -d[i][c];
    for (int c = 0; c < m; ++c) u[i][c] = -u[i][c];
  };
  int k = std::min(m, n);

  // clear row t and column t of the trailing block, smallest pivot first;
  // every pass through `stage` strictly shrinks the pivot, so this stops
  auto diag_from = [&](int t0) {
    for (int t = t0; t < k; ++t) {
    stage:
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (d[i][j] != 0 &&
              (pi < 0 || abs(d[i][j]) < abs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return;  // trailing block is zero
      if (pi != t) row_swap(t, pi);
      if (pj != t) col_swap(t, pj);
      if (d[t][t] < 0) row_neg(t);
      for (int i = t + 1; i < m; ++i)
        if (d[i][t] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
          row_sub(i, t, q);
        }
      for (int i = t + 1; i < m; ++i)
        if (d[i][t] != 0) goto stage;
      for (int j = t + 1; j < n; ++j)
        if (d[t][j] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
          col_sub(j, t, q);
        }
      for (int j = t + 1; j < n; ++j)
        if (d[t][j] != 0) goto stage;
    }
  };

  diag_from(0);
  // enforce d[i] | d[i+1]: mixing the rows puts gcd at position i, then
  // rediagonalizing restores shape; the early diagonal only ever shrinks
  for (int i = 0; i + 1 < k;) {
    if (d[i][i] == 0 || d[i + 1][i + 1] % d[i][i] == 0) {
      ++i;
      continue;
    }
    for (int c = 0; c < n; ++c) d[i][c] += d[i + 1][c];
    for (int c = 0; c < m; ++c) u[i][c] += u[i + 1][c];
    diag_from(i);
    i = i > 0 ? i - 1 : 0;
  }
  (void)pivot_col;
}

std::vector<std::vector<Int>> left_kernel_mod_p(const Mat& a, const Int& p) {
  int m = (int)a.size();
  if (m == 0) return {};
  int n = (int)a[0].size();
  // reduce [A | I] by row ops over F_p; kernel rows are those with A-part 0
  Mat w(m, std::vector<Int>(n + m, Int(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      w[i][j] = a[i][j] % p;
      if (w[i][j] < 0) w[i][j] += p;
    }
    w[i][n + i] = 1;
  }
  int r = 0;
  for (int j = 0; j < n && r < m; ++j) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (w[i][j] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(w[r], w[piv]);
    Int inv = invmod(w[r][j], p);
    for (int c = 0; c < n + m; ++c) w[r][c] = w[r][c] * inv % p;
    for (int i = 0; i < m; ++i) {
      if (i == r || w[i][j] == 0) continue;
      Int f = w[i][j];
      for (int c = 0; c < n + m; ++c) {
        w[i][c] = (w[i][c] - f * w[r][c]) % p;
        if (w[i][c] < 0) w[i][c] += p;
      }
    }
    ++r;
  }
  std::vector<std::vector<Int>> ker;
  for (int i = r; i < m; ++i)
    ker.emplace_back(w[i].begin() + n, w[i].end());
  return ker;
}

}  // namespace quatinv
