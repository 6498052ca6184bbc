#include "quatinv/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace quatinv {

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c.emplace_back(v);
  normalize();
}

void ZPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Int ZPoly::content() const {
  Int g = 0;
  for (const Int& a : c) g = gcd(g, a);
  if (!c.empty() && lead() < 0) g = -g;
  return g;
}

ZPoly ZPoly::primitive() const {
  if (is_zero()) return *this;
  Int g = content();
  ZPoly r = *this;
  for (Int& a : r.c) a /= g;
  return r;
}

ZPoly ZPoly::derivative() const {
  ZPoly r;
  for (int i = 1; i < (int)c.size(); ++i) r.c.push_back(c[i] * i);
  r.normalize();
  return r;
}

ZPoly ZPoly::scaled(const Int& k) const {
  ZPoly r = *this;
  for (Int& a : r.c) a *= k;
  r.normalize();
  return r;
}

ZPoly ZPoly::shifted(int k) const {
  if (is_zero()) return *this;
  ZPoly r;
  r.c.assign(c.size() + k, Int(0));
  for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
  return r;
}

Int ZPoly::eval(const Int& x) const {
  Int r = 0;
  for (int i = deg(); i >= 0; --i) r = r * x + c[i];
  return r;
}

Rat ZPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (int i = deg(); i >= 0; --i) r = r * x + c[i];
  return r;
}

RInterval ZPoly::eval(const RInterval& x) const {
  RInterval r = RInterval::exact(0L, x.prec());
  for (int i = deg(); i >= 0; --i) r = r * x + RInterval::exact(c[i], x.prec());
  return r;
}

std::complex<double> ZPoly::eval(std::complex<double> x) const {
  std::complex<double> r = 0;
  for (int i = deg(); i >= 0; --i) r = r * x + c[i].get_d();
  return r;
}

std::string ZPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c[i] == 0) continue;
    Int a = c[i];
    if (!first) os << (a > 0 ? " + " : " - ");
    if (first && a < 0) os << "-";
    first = false;
    Int aa = abs(a);
    if (i == 0 || aa != 1) os << aa.get_str();
    if (i > 0) {
      if (aa != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.normalize();
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.normalize();
  return r;
}

ZPoly operator-(const ZPoly& a) {
  ZPoly r = a;
  for (Int& v : r.c) v = -v;
  return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  ZPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.normalize();
  return r;
}

void pseudo_divmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
  if (b.is_zero()) throw std::domain_error("pseudo_divmod by zero");
  q = ZPoly();
  r = a;
  int db = b.deg();
  const Int& lb = b.lead();
  int steps = a.deg() - db + 1;
  if (steps <= 0) return;
  q.c.assign(steps, Int(0));
  for (int k = 0; k < steps; ++k) {
    // multiply the whole state by lb each round so division stays integral
    for (Int& v : q.c) v *= lb;
    for (Int& v : r.c) v *= lb;
    if (r.deg() == a.deg() - k) {
      Int t = r.lead() / lb;  // exact: r.lead was just multiplied by lb
      q.c[a.deg() - db - k] += t;
      for (int i = 0; i <= db; ++i) r.c[a.deg() - k - db + i] -= t * b.c[i];
      r.normalize();
    }
  }
  q.normalize();
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("divexact by zero");
  if (a.is_zero()) return ZPoly();
  if (a.deg() < b.deg()) throw std::domain_error("divexact: degree");
  ZPoly r = a, q;
  int db = b.deg();
  q.c.assign(a.deg() - db + 1, Int(0));
  for (int i = a.deg() - db; i >= 0; --i) {
    if (r.deg() == i + db) {
      Int t = r.lead() / b.lead();
      if (t * b.lead() != r.lead()) throw std::domain_error("divexact: leading");
      q.c[i] = t;
      for (int j = 0; j <= db; ++j) r.c[i + j] -= t * b.c[j];
      r.normalize();
    }
  }
  if (!r.is_zero()) throw std::domain_error("divexact: nonzero remainder");
  q.normalize();
  return q;
}

namespace {

// Sylvester matrix determinant by fraction-free Bareiss elimination.  Degrees
// stay small here, so the O(n^3) big-integer cost is irrelevant next to
// getting the signs and transition rules right.
Int sylvester_det(const ZPoly& a, const ZPoly& b) {
  int m = a.deg(), n = b.deg();
  int sz = m + n;
  if (sz == 0) return Int(1);
  std::vector<std::vector<Int>> M(sz, std::vector<Int>(sz, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a.c[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.c[n - j];
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k < sz - 1; ++k) {
    if (M[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < sz; ++i)
        if (M[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < sz; ++i) {
      for (int j = k + 1; j < sz; ++j) {
        M[i][j] = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        M[i][j] /= denom;  // exact by Bareiss
      }
      M[i][k] = 0;
    }
    denom = M[k][k];
  }
  return sign > 0 ? M[sz - 1][sz - 1] : -M[sz - 1][sz - 1];
}

}  // namespace

Int resultant(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return Int(0);
  if (a.deg() == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.c[0].get_mpz_t(), b.deg());
    return r;
  }
  if (b.deg() == 0) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.c[0].get_mpz_t(), a.deg());
    return r;
  }
  return sylvester_det(a, b);
}

Int discriminant(const ZPoly& f) {
  int n = f.deg();
  if (n < 1) throw std::domain_error("discriminant of constant");
  if (n == 1) return Int(1);
  Int res = resultant(f, f.derivative());
  Int d = res / f.lead();
  assert(d * f.lead() == res);
  return ((n * (n - 1) / 2) % 2 == 0) ? d : -d;
}

ZPoly gcd_primitive(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = a0.primitive(), b = b0.primitive();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.is_zero()) {
    ZPoly q, r;
    pseudo_divmod(a, b, q, r);
    a = b;
    b = r.primitive();
  }
  if (a.lead() < 0) a = -a;
  return a;
}

ZPoly squarefree_part(const ZPoly& f) {
  if (f.deg() <= 1) return f.primitive();
  ZPoly g = gcd_primitive(f, f.derivative());
  if (g.deg() == 0) return f.primitive();
  return divexact(f.primitive().scaled(g.lead()), g).primitive();
}

namespace {

int sgn_rat(const Rat& v) { return sgn(v); }

// divide out |content| only; the chain needs signs preserved
ZPoly prim_signed(const ZPoly& p) {
  if (p.is_zero()) return p;
  Int g = abs(p.content());
  ZPoly r = p;
  for (Int& a : r.c) a /= g;
  return r;
}

std::vector<ZPoly> sturm_chain(const ZPoly& f) {
  std::vector<ZPoly> chain;
  chain.push_back(prim_signed(f));
  chain.push_back(prim_signed(f.derivative()));
  while (!chain.back().is_zero() && chain.back().deg() >= 0) {
    const ZPoly a = chain[chain.size() - 2];
    const ZPoly b = chain.back();
    ZPoly q, r;
    pseudo_divmod(a, b, q, r);
    if (r.is_zero()) break;
    // r = lead(b)^k * (a mod b); Sturm wants -(a mod b) up to positive scale
    int k = a.deg() - b.deg() + 1;
    bool scale_neg = b.lead() < 0 && (k % 2 == 1);
    chain.push_back(prim_signed(scale_neg ? r : -r));
  }
  return chain;
}

int sign_variations(const std::vector<ZPoly>& chain, const Rat& x) {
  int var = 0, last = 0;
  for (const ZPoly& p : chain) {
    int s = sgn_rat(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

int sign_variations_at_inf(const std::vector<ZPoly>& chain, int dir) {
  // dir = +1 for +infinity, -1 for -infinity
  int var = 0, last = 0;
  for (const ZPoly& p : chain) {
    if (p.is_zero()) continue;
    int s = sgn(p.lead());
    if (dir < 0 && p.deg() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

}  // namespace

int num_real_roots(const ZPoly& f) {
  ZPoly g = squarefree_part(f);
  if (g.deg() <= 0) return 0;
  auto chain = sturm_chain(g);
  return sign_variations_at_inf(chain, -1) - sign_variations_at_inf(chain, +1);
}

Rat root_bound(const ZPoly& f) {
  // Cauchy: 1 + max |c_i| / |lead|
  Rat m = 0;
  for (int i = 0; i < f.deg(); ++i) {
    Rat t = Rat(abs(f.c[i])) / Rat(abs(f.lead()));
    if (t > m) m = t;
  }
  return m + 1;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const ZPoly& f0) {
  ZPoly f = squarefree_part(f0);
  std::vector<std::pair<Rat, Rat>> out;
  if (f.deg() <= 0) return out;
  auto chain = sturm_chain(f);
  auto count = [&](const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };
  Rat B = root_bound(f);
  // roots counted in half-open (a, b]; endpoints +-B are never roots
  struct Seg {
    Rat a, b;
    int n;
  };
  std::vector<Seg> stack{{-B, B, count(-B, B)}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.n == 0) continue;
    if (s.n == 1 && sgn_rat(f.eval(s.a)) * sgn_rat(f.eval(s.b)) < 0) {
      out.emplace_back(s.a, s.b);
      continue;
    }
    Rat m = (s.a + s.b) / 2;
    if (f.eval(m) == 0) {
      // exact rational root at m; carve out a strict sign-change box
      Rat eps = (s.b - s.a) / 4;
      while (count(m - eps, m + eps) != 1 || f.eval(m - eps) == 0 ||
             f.eval(m + eps) == 0)
        eps /= 2;
      out.emplace_back(m - eps, m + eps);
      int left = count(s.a, m - eps);
      int right = count(m + eps, s.b);
      if (left) stack.push_back({s.a, m - eps, left});
      if (right) stack.push_back({m + eps, s.b, right});
    } else {
      int left = count(s.a, m);
      int right = s.n - left;
      if (left) stack.push_back({s.a, m, left});
      if (right) stack.push_back({m, s.b, right});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

void refine_root(const ZPoly& f, Rat& lo, Rat& hi, const Rat& width) {
  int slo = sgn_rat(f.eval(lo));
  assert(slo != 0 && sgn_rat(f.eval(hi)) == -slo);
  while (hi - lo > width) {
    Rat m = (lo + hi) / 2;
    int sm = sgn_rat(f.eval(m));
    if (sm == 0) {
      // m is the root; shrink symmetrically keeping strict signs
      Rat eps = (hi - lo) / 8;
      while (eps >= width / 2) eps /= 2;
      Rat a = m - eps, b = m + eps;
      if (sgn_rat(f.eval(a)) == slo && sgn_rat(f.eval(b)) == -slo) {
        lo = a;
        hi = b;
        return;
      }
      eps /= 2;
      lo = m - eps;
      hi = m + eps;
      return;
    }
    if (sm == slo)
      lo = m;
    else
      hi = m;
  }
}

ZPoly cyclotomic_poly(int m) {
  assert(m >= 1);
  static std::map<int, ZPoly> memo;
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  std::vector<Int> xm(m + 1, 0);
  xm[0] = -1;
  xm[m] = 1;
  ZPoly phi(std::move(xm));
  for (int d = 1; d < m; ++d)
    if (m % d == 0) phi = divexact(phi, cyclotomic_poly(d));
  memo[m] = phi;
  return phi;
}

ZPoly cos_minpoly(int q) {
  assert(q >= 1);
  if (q == 1) return ZPoly{2, 1};  // 2cos(pi) = -2
  ZPoly phi = cyclotomic_poly(2 * q);
  int e = phi.deg() / 2;
  assert(phi.deg() == 2 * e);
  for (int i = 0; i <= e; ++i) assert(phi.coeff(i) == phi.coeff(2 * e - i));
  // phi(x)/x^e = c_e + sum c_{e+k} (x^k + x^-k); substitute y = x + 1/x via
  // p_k(y) = x^k + x^-k, p_0 = 2, p_1 = y, p_k = y p_{k-1} - p_{k-2}
  ZPoly y{0, 1};
  ZPoly pkm1{2}, pk = y;
  ZPoly psi{phi.coeff(e)};
  for (int k = 1; k <= e; ++k) {
    psi = psi + pk.scaled(phi.coeff(e + k));
    ZPoly next = y * pk - pkm1;
    pkm1 = pk;
    pk = next;
  }
  assert(psi.is_monic() && psi.deg() == e);
  return psi;
}

std::vector<std::complex<double>> roots_double(const ZPoly& f) {
  int n = f.deg();
  std::vector<std::complex<double>> z(n);
  if (n <= 0) return z;
  // seed on a slightly irrational circle to dodge symmetric stalls
  double R = root_bound(f).get_d();
  R = std::min(R, 1e8);
  for (int i = 0; i < n; ++i) {
    double th = 2 * M_PI * i / n + 0.4;
    z[i] = std::complex<double>(0.7 * R * std::cos(th), 0.7 * R * std::sin(th));
  }
  ZPoly df = f.derivative();
  for (int iter = 0; iter < 400; ++iter) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> p = f.eval(z[i]);
      std::complex<double> dp = df.eval(z[i]);
      std::complex<double> ratio = (dp == 0.0) ? 0.0 : p / dp;
      std::complex<double> s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      std::complex<double> delta = ratio / (1.0 - ratio * s);
      z[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * std::max(1.0, R)) break;
  }
  return z;
}

}  // namespace quatinv
