#include "quatinv/lattice.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace quatinv {

void enumerate_qform(const std::vector<std::vector<double>>& gram, double bound,
                     const std::function<bool(const std::vector<long>&)>& cb) {
  const int n = (int)gram.size();
  assert(n > 0 && bound > 0);

  // upper Cholesky q(v) = sum_i d_i (v_i + sum_{j>i} u_ij v_j)^2
  std::vector<std::vector<double>> a = gram;
  std::vector<double> d(n);
  std::vector<std::vector<double>> u(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; i++) {
    d[i] = a[i][i];
    if (!(d[i] > 0)) throw std::invalid_argument("enumerate_qform: form not positive definite");
    for (int j = i + 1; j < n; j++) u[i][j] = a[i][j] / d[i];
    for (int j = i + 1; j < n; j++)
      for (int k = j; k < n; k++) a[j][k] -= d[i] * u[i][j] * u[i][k];
  }

  const double pad = bound * 1e-9 + 1e-9;
  std::vector<long> v(n, 0);
  std::vector<double> center(n, 0.0), remain(n, 0.0);
  bool stop = false;

  // iterative depth-first walk from the last coordinate down
  std::function<void(int, double)> walk = [&](int i, double left) {
    if (stop) return;
    if (i < 0) {
      // skip zero; sign convention: highest nonzero coordinate positive
      for (int k = n - 1; k >= 0; k--) {
        if (v[k] > 0) break;
        if (v[k] < 0 || k == 0) return;
      }
      if (!cb(v)) stop = true;
      return;
    }
    double c = 0.0;
    for (int j = i + 1; j < n; j++) c += u[i][j] * v[j];
    double radius = std::sqrt((left + pad) / d[i]);
    long lo = (long)std::ceil(-c - radius - 1e-12);
    long hi = (long)std::floor(-c + radius + 1e-12);
    for (long t = lo; t <= hi && !stop; t++) {
      v[i] = t;
      double term = d[i] * (t + c) * (t + c);
      if (term <= left + pad) walk(i - 1, left - term);
    }
    v[i] = 0;
  };
  walk(n - 1, bound);
}

}  // namespace quatinv
