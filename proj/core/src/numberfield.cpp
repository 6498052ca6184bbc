#include "quatinv/numberfield.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "quatinv/polyfactor.hpp"

namespace quatinv {

namespace {

// Rational polynomial scratch type for gcd-based inversion.  Dense, c[i] is
// the x^i coefficient, trailing zeros trimmed.
using QPoly = std::vector<Rat>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  qtrim(c);
  return c;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  assert(!b.empty());
  qtrim(a);
  q.clear();
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i + 1 < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    qtrim(a);
  }
  r = std::move(a);
  qtrim(q);
}

// monic g = gcd(a, m) together with u such that u*a == g (mod m)
void qxgcd_mod(QPoly a, QPoly m, QPoly& g, QPoly& u) {
  QPoly r0 = std::move(m), r1 = std::move(a);
  QPoly u0, u1{Rat(1)};
  qtrim(r0);
  qtrim(r1);
  while (!r1.empty()) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly u2 = qsub(u0, qmul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  assert(!r0.empty());
  Rat lead = r0.back();
  for (auto& x : r0) x /= lead;
  for (auto& x : u0) x /= lead;
  g = std::move(r0);
  u = std::move(u0);
}

int rat_sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace

const NumberField& NumberField::make(const ZPoly& f) {
  static std::map<std::string, std::unique_ptr<NumberField>> cache;
  std::string key = f.str();
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<NumberField>(f)).first;
  return *it->second;
}

NumberField::NumberField(const ZPoly& f) : f_(f) {
  if (f_.deg() < 2) throw std::invalid_argument("number field: degree >= 2 required");
  if (!f_.is_monic()) throw std::invalid_argument("number field: monic polynomial required");
  if (!is_irreducible_z(f_)) throw std::invalid_argument("number field: reducible polynomial");
  n_ = f_.deg();
  poly_disc_ = discriminant(f_);
  assert(poly_disc_ != 0);

  r_ = num_real_roots(f_);
  c_ = (n_ - r_) / 2;
  assert(r_ + 2 * c_ == n_);
  for (auto& [lo, hi] : isolate_real_roots(f_)) {
    RealRoot rr;
    rr.lo = lo;
    rr.hi = hi;
    rr.sign_lo = rat_sign(f_.eval(lo));
    assert(rr.sign_lo != 0);
    rr.bits = 0;
    real_roots_.push_back(std::move(rr));
  }
  assert((int)real_roots_.size() == r_);

  // power sums of the roots via Newton's identities, for traces
  power_sums_.assign(n_, Int(0));
  power_sums_[0] = n_;
  for (int k = 1; k < n_; ++k) {
    Int s = -k * f_.coeff(n_ - k);
    for (int j = 1; j < k; ++j) s -= f_.coeff(n_ - j) * power_sums_[k - j];
    power_sums_[k] = s;
  }

  compute_maximal_order();
}

void NumberField::canonicalize(FieldElement& a) const {
  if ((int)a.num.size() > n_) {
    for (int k = (int)a.num.size() - 1; k >= n_; --k) {
      Int c = a.num[k];
      if (c != 0)
        for (int i = 0; i < n_; ++i) a.num[k - n_ + i] -= c * f_.c[i];
      a.num[k] = 0;
    }
  }
  a.num.resize(n_, Int(0));
  assert(a.den != 0);
  if (a.den < 0) {
    a.den = -a.den;
    for (auto& v : a.num) v = -v;
  }
  Int g = a.den;
  for (const auto& v : a.num) g = gcd(g, v);
  if (g > 1) {
    a.den /= g;
    for (auto& v : a.num) v /= g;
  }
}

FieldElement NumberField::zero() const { return element({}); }
FieldElement NumberField::one() const { return element({Int(1)}); }

FieldElement NumberField::gen() const { return element({Int(0), Int(1)}); }

FieldElement NumberField::from_int(const Int& v) const { return element({v}); }

FieldElement NumberField::from_rat(const Rat& v) const {
  return element({v.get_num()}, v.get_den());
}

FieldElement NumberField::element(std::vector<Int> num, Int den) const {
  FieldElement a{std::move(num), std::move(den)};
  canonicalize(a);
  return a;
}

FieldElement NumberField::basis_element(int i) const {
  assert(i >= 0 && i < n_);
  return element(basis_[i], basis_den_);
}

bool NumberField::is_zero(const FieldElement& a) const {
  for (const auto& v : a.num)
    if (v != 0) return false;
  return true;
}

bool NumberField::is_rational(const FieldElement& a) const {
  for (int i = 1; i < n_; ++i)
    if (a.num[i] != 0) return false;
  return true;
}

bool NumberField::equal(const FieldElement& a, const FieldElement& b) const {
  return a.den == b.den && a.num == b.num;
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  r.num.resize(n_);
  for (int i = 0; i < n_; ++i) r.num[i] = a.num[i] * b.den + b.num[i] * a.den;
  r.den = a.den * b.den;
  canonicalize(r);
  return r;
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement NumberField::neg(const FieldElement& a) const {
  FieldElement r = a;
  for (auto& v : r.num) v = -v;
  return r;
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  r.num.assign(2 * n_ - 1, Int(0));
  for (int i = 0; i < n_; ++i) {
    if (a.num[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (b.num[j] == 0) continue;
      r.num[i + j] += a.num[i] * b.num[j];
    }
  }
  r.den = a.den * b.den;
  canonicalize(r);
  return r;
}

FieldElement NumberField::mul_rat(const FieldElement& a, const Rat& k) const {
  FieldElement r = a;
  Int kn = k.get_num();
  for (auto& v : r.num) v *= kn;
  r.den *= k.get_den();
  canonicalize(r);
  return r;
}

FieldElement NumberField::inverse(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("field inverse of zero");
  QPoly ap(n_), fp(n_ + 1);
  for (int i = 0; i < n_; ++i) ap[i] = Rat(a.num[i]);
  for (int i = 0; i <= n_; ++i) fp[i] = Rat(f_.c[i]);
  QPoly g, u;
  qxgcd_mod(ap, fp, g, u);
  assert(g.size() == 1 && g[0] == 1);
  // (num/den)^-1 = den * u(w)
  FieldElement r = zero();
  Int den_lcm = 1;
  for (const auto& x : u) den_lcm = lcm(den_lcm, x.get_den());
  r.num.assign(n_, Int(0));
  for (size_t i = 0; i < u.size(); ++i)
    r.num[i] = u[i].get_num() * (den_lcm / u[i].get_den()) * a.den;
  r.den = den_lcm;
  canonicalize(r);
  return r;
}

FieldElement NumberField::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inverse(b));
}

FieldElement NumberField::pow(const FieldElement& a, const Int& e) const {
  if (e < 0) return inverse(pow(a, -e));
  FieldElement r = one(), base = a;
  size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (size_t i = nbits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, base);
  }
  return r;
}

Rat NumberField::norm(const FieldElement& a) const {
  if (is_zero(a)) return Rat(0);
  std::vector<Int> co = a.num;
  ZPoly g(std::move(co));
  Int rn = resultant(f_, g);
  Rat den_pow(1);
  if (a.den != 1) {
    Int dp = 1;
    for (int i = 0; i < n_; ++i) dp *= a.den;
    den_pow = Rat(dp);
  }
  Rat result = Rat(rn) / den_pow;
  result.canonicalize();
  return result;
}

Rat NumberField::trace(const FieldElement& a) const {
  Int s = 0;
  for (int k = 0; k < n_; ++k) s += a.num[k] * power_sums_[k];
  Rat t = Rat(s) / Rat(a.den);
  t.canonicalize();
  return t;
}

std::vector<Rat> NumberField::charpoly(const FieldElement& a) const {
  // multiplication matrix: row j holds the power coordinates of a * w^j
  std::vector<std::vector<Rat>> M(n_, std::vector<Rat>(n_, Rat(0)));
  FieldElement cur = a;
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) {
      M[j][i] = Rat(cur.num[i]) / Rat(cur.den);
      M[j][i].canonicalize();
    }
    if (j + 1 < n_) cur = mul(cur, gen());
  }
  // Faddeev-LeVerrier
  std::vector<Rat> c(n_ + 1, Rat(0));
  c[n_] = 1;
  std::vector<std::vector<Rat>> N(n_, std::vector<Rat>(n_, Rat(0)));
  for (int i = 0; i < n_; ++i) N[i][i] = 1;
  for (int k = 1; k <= n_; ++k) {
    std::vector<std::vector<Rat>> Mk(n_, std::vector<Rat>(n_, Rat(0)));
    for (int i = 0; i < n_; ++i)
      for (int l = 0; l < n_; ++l) {
        if (M[i][l] == 0) continue;
        for (int j = 0; j < n_; ++j) Mk[i][j] += M[i][l] * N[l][j];
      }
    Rat tr(0);
    for (int i = 0; i < n_; ++i) tr += Mk[i][i];
    Rat ck = -tr / k;
    ck.canonicalize();
    c[n_ - k] = ck;
    N = std::move(Mk);
    for (int i = 0; i < n_; ++i) N[i][i] += ck;
  }
  return c;
}

ZPoly NumberField::minpoly(const FieldElement& a) const {
  std::vector<Rat> cp = charpoly(a);
  Int den_lcm = 1;
  for (const auto& x : cp) den_lcm = lcm(den_lcm, x.get_den());
  std::vector<Int> ic(cp.size());
  for (size_t i = 0; i < cp.size(); ++i)
    ic[i] = cp[i].get_num() * (den_lcm / cp[i].get_den());
  ZPoly pz(std::move(ic));
  auto factors = factor_z(pz);
  // charpoly is a power of the minimal polynomial, so exactly one distinct
  // irreducible factor of positive degree survives
  for (auto& [g, mult] : factors) {
    if (g.deg() < 1) continue;
    // paranoid check that g really kills a
    FieldElement acc = zero();
    for (int i = g.deg(); i >= 0; --i) {
      acc = mul(acc, a);
      acc = add(acc, from_int(g.c[i]));
    }
    if (is_zero(acc)) return g;
  }
  throw std::logic_error("minpoly: no factor of the characteristic polynomial vanished");
}

bool NumberField::is_integral(const FieldElement& a) const {
  std::vector<Int> tmp;
  return integral_coords(a, tmp);
}

bool NumberField::integral_coords(const FieldElement& a, std::vector<Int>& out) const {
  std::vector<Int> t(n_);
  for (int i = 0; i < n_; ++i) {
    Int x = basis_den_ * a.num[i];
    if (x % a.den != 0) return false;
    t[i] = x / a.den;
  }
  if (!hnf_contains(basis_, t)) return false;
  out = hnf_coords(basis_, t);
  return true;
}

FieldElement NumberField::from_integral_coords(const std::vector<Int>& v) const {
  assert((int)v.size() == n_);
  FieldElement r;
  r.num.assign(n_, Int(0));
  for (int i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n_; ++j) r.num[j] += v[i] * basis_[i][j];
  }
  r.den = basis_den_;
  canonicalize(r);
  return r;
}

// ---- maximal order (round 2) ----

void NumberField::compute_maximal_order() {
  basis_ = mat_identity(n_);
  basis_den_ = 1;

  Int pd = poly_disc_ < 0 ? Int(-poly_disc_) : poly_disc_;
  auto fac = factor(pd);
  for (const auto& [p, e] : fac) {
    if (e < 2) continue;  // p-maximal already
    // enlarge at p until the radical idealizer stabilizes
    for (;;) {
      int m = 0;
      Int pm = 1;
      while (pm < n_) {
        pm *= p;
        ++m;
      }
      // x -> x^(p^m) is F_p-linear on O/pO and its kernel is the radical
      auto reduce_mod_p = [&](const FieldElement& x) {
        std::vector<Int> co;
        bool ok = integral_coords(x, co);
        assert(ok);
        for (auto& v : co) {
          v %= p;
          if (v < 0) v += p;
        }
        return co;
      };
      auto pow_mod_p = [&](FieldElement x, const Int& e2) {
        FieldElement r = one();
        size_t nb = mpz_sizeinbase(e2.get_mpz_t(), 2);
        for (size_t i = nb; i-- > 0;) {
          r = from_integral_coords(reduce_mod_p(mul(r, r)));
          if (mpz_tstbit(e2.get_mpz_t(), i))
            r = from_integral_coords(reduce_mod_p(mul(r, x)));
        }
        return r;
      };
      Mat phi(n_);
      for (int i = 0; i < n_; ++i)
        phi[i] = reduce_mod_p(pow_mod_p(basis_element(i), pm));
      Mat rad = left_kernel_mod_p(phi, p);
      for (int i = 0; i < n_; ++i) {
        std::vector<Int> row(n_, Int(0));
        row[i] = p;
        rad.push_back(std::move(row));
      }
      Mat A = hnf_rows(std::move(rad));  // radical ideal, coordinates in O

      // idealizer: O' = (1/p) { x in O : x A <= p A }
      Mat cond(n_);
      for (int j = 0; j < n_; ++j) {
        cond[j].reserve((size_t)n_ * n_);
        FieldElement bj = basis_element(j);
        for (int l = 0; l < n_; ++l) {
          FieldElement prod = mul(bj, from_integral_coords(A[l]));
          std::vector<Int> co;
          bool ok = integral_coords(prod, co);
          assert(ok);
          std::vector<Int> gamma = hnf_coords(A, co);
          for (auto& v : gamma) {
            v %= p;
            if (v < 0) v += p;
            cond[j].push_back(v);
          }
        }
      }
      auto uker = left_kernel_mod_p(cond, p);
      if (uker.empty()) break;  // p-maximal

      Mat up = std::move(uker);
      for (int i = 0; i < n_; ++i) {
        std::vector<Int> row(n_, Int(0));
        row[i] = p;
        up.push_back(std::move(row));
      }
      Mat U = hnf_rows(std::move(up));
      Mat nb = hnf_rows(mat_mul(U, basis_));
      Int nden = p * basis_den_;
      Int g = nden;
      for (const auto& row : nb)
        for (const auto& v : row) g = gcd(g, v);
      if (g > 1) {
        nden /= g;
        for (auto& row : nb)
          for (auto& v : row) v /= g;
      }
      basis_ = std::move(nb);
      basis_den_ = std::move(nden);
    }
  }

  assert((int)basis_.size() == n_);
  // 1 is in the order, so the first pivot divides the denominator
  assert(basis_den_ % basis_[0][0] == 0);

  // discriminant from the trace pairing on the integral basis
  Mat gram(n_, std::vector<Int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      Rat t = trace(mul(basis_element(i), basis_element(j)));
      assert(t.get_den() == 1);
      gram[i][j] = t.get_num();
      gram[j][i] = gram[i][j];
    }
  disc_ = mat_det(gram);
  assert(disc_ != 0 && poly_disc_ % disc_ == 0);
  Int q = poly_disc_ / disc_;
  assert(q > 0);
  index_ = isqrt(q);
  assert(index_ * index_ == q);
  Int dmod = disc_ % 4;
  if (dmod < 0) dmod += 4;
  assert(dmod == 0 || dmod == 1);
}

// ---- embeddings ----

void NumberField::refine_real(int j, long bits) const {
  RealRoot& rr = real_roots_[j];
  if (rr.bits >= bits) return;
  Rat target = Rat(1) / Rat(Int(1) << (unsigned long)bits);
  while (rr.hi - rr.lo > target) {
    Rat mid = (rr.lo + rr.hi) / 2;
    int s = rat_sign(f_.eval(mid));
    assert(s != 0);  // f is irreducible of degree >= 2
    if (s == rr.sign_lo)
      rr.lo = mid;
    else
      rr.hi = mid;
  }
  rr.bits = bits;
}

RInterval NumberField::embed_real(const FieldElement& a, int place, long prec) const {
  assert(place >= 0 && place < r_);
  long bits = std::max<long>(64, prec);
  for (;;) {
    refine_real(place, bits);
    const RealRoot& rr = real_roots_[place];
    long wp = bits + 64;
    RInterval x = RInterval::span(rr.lo, rr.hi, wp);
    RInterval y = RInterval::exact(a.num[n_ - 1], wp);
    for (int i = n_ - 2; i >= 0; --i)
      y = y * x + RInterval::exact(a.num[i], wp);
    if (a.den != 1) y = y / RInterval::exact(a.den, wp);
    if (y.width_below_2exp(-prec)) return y;
    bits *= 2;
    assert(bits < (1L << 24));
  }
}

void NumberField::ensure_complex(long prec) const {
  if (c_ == 0) return;
  if (complex_prec_ >= prec && (int)complex_roots_.size() == c_) return;
  long wp = 2 * std::max<long>(prec, 64) + 32;

  std::vector<std::pair<double, double>> seeds;
  if (!complex_roots_.empty()) {
    for (const auto& cr : complex_roots_) seeds.push_back({cr.re.mid(), cr.im.mid()});
  } else {
    std::vector<std::complex<double>> all = roots_double(f_);
    std::sort(all.begin(), all.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                return a.imag() > b.imag();
              });
    for (int i = 0; i < c_; ++i) {
      assert(all[i].imag() > 1e-12);
      seeds.push_back({all[i].real(), all[i].imag()});
    }
  }

  int iters = 2;
  while ((40L << iters) < wp + 80) ++iters;

  ZPoly fd = f_.derivative();
  std::vector<ComplexRoot> out;
  for (const auto& [sr, si] : seeds) {
    CInterval z{RInterval::of(sr, sr, wp), RInterval::of(si, si, wp)};
    auto horner = [&](const ZPoly& g) {
      CInterval y{RInterval::exact(g.c.back(), wp), RInterval::exact(Int(0), wp)};
      for (int i = g.deg() - 1; i >= 0; --i) {
        y = y * z;
        y.re = y.re + RInterval::exact(g.c[i], wp);
      }
      return y;
    };
    for (int it = 0; it < iters; ++it) {
      CInterval fu = horner(f_);
      CInterval du = horner(fd);
      if (!du.abs_sq().is_positive()) break;
      z = z - fu / du;
    }
    CInterval fu = horner(f_);
    CInterval du = horner(fd);
    if (!du.abs_sq().is_positive())
      throw std::runtime_error("complex root certification: derivative not bounded away from 0");
    RInterval rad =
        (fu.abs_sq().sqrt() / du.abs_sq().sqrt()) * RInterval::exact(Int(n_), wp);
    RInterval sym = RInterval::of(-1.0, 1.0, wp);
    out.push_back(ComplexRoot{z.re + rad * sym, z.im + rad * sym});
  }

  for (int i = 0; i < c_; ++i) {
    if (!out[i].im.is_positive())
      throw std::runtime_error("complex root certification: box touches the real axis");
    for (int j = 0; j < i; ++j) {
      bool sep_re = out[i].re.strictly_below(out[j].re) || out[j].re.strictly_below(out[i].re);
      bool sep_im = out[i].im.strictly_below(out[j].im) || out[j].im.strictly_below(out[i].im);
      if (!sep_re && !sep_im)
        throw std::runtime_error("complex root certification: boxes overlap");
    }
  }
  if (complex_roots_.empty()) {
    std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
      if (a.re.strictly_below(b.re)) return true;
      if (b.re.strictly_below(a.re)) return false;
      return a.im.strictly_below(b.im);
    });
  }
  complex_roots_ = std::move(out);
  complex_prec_ = prec;
}

CInterval NumberField::embed_complex(const FieldElement& a, int place, long prec) const {
  assert(place >= r_ && place < r_ + c_);
  long bits = std::max<long>(64, prec);
  for (;;) {
    ensure_complex(bits);
    const ComplexRoot& cr = complex_roots_[place - r_];
    long wp = bits + 64;
    CInterval x{cr.re, cr.im};
    CInterval y{RInterval::exact(a.num[n_ - 1], wp), RInterval::exact(Int(0), wp)};
    for (int i = n_ - 2; i >= 0; --i) {
      y = y * x;
      y.re = y.re + RInterval::exact(a.num[i], wp);
    }
    if (a.den != 1) {
      RInterval d = RInterval::exact(a.den, wp);
      y.re = y.re / d;
      y.im = y.im / d;
    }
    if (y.re.width_below_2exp(-prec) && y.im.width_below_2exp(-prec)) return y;
    bits *= 2;
    assert(bits < (1L << 24));
  }
}

int NumberField::sign_at(const FieldElement& a, int place) const {
  assert(place >= 0 && place < r_);
  assert(!is_zero(a));
  for (long prec = 32;; prec *= 2) {
    RInterval y = embed_real(a, place, prec);
    if (y.is_positive()) return 1;
    if (y.is_negative()) return -1;
    assert(prec < (1L << 24));
  }
}

std::vector<int> NumberField::real_signs(const FieldElement& a) const {
  std::vector<int> s(r_);
  for (int i = 0; i < r_; ++i) s[i] = sign_at(a, i);
  return s;
}

bool NumberField::totally_positive(const FieldElement& a) const {
  for (int i = 0; i < r_; ++i)
    if (sign_at(a, i) < 0) return false;
  return true;
}

RInterval NumberField::t2_norm(const FieldElement& a, long prec) const {
  long wp = prec + 32;
  RInterval s = RInterval::exact(Int(0), wp);
  for (int i = 0; i < r_; ++i) {
    RInterval x = embed_real(a, i, wp);
    s = s + x.sq();
  }
  RInterval two = RInterval::exact(Int(2), wp);
  for (int j = r_; j < r_ + c_; ++j) {
    CInterval z = embed_complex(a, j, wp);
    s = s + two * z.abs_sq();
  }
  return s;
}

// ---- formatting and parsing ----

std::string NumberField::str(const FieldElement& a, const std::string& var) const {
  std::vector<Int> co = a.num;
  ZPoly p(std::move(co));
  if (a.den == 1) return p.str(var);
  std::ostringstream os;
  os << "(" << p.str(var) << ")/" << a.den;
  return os.str();
}

FieldElement NumberField::parse(const std::string& s) const {
  std::string t;
  for (char ch : s)
    if (!std::isspace((unsigned char)ch)) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty element string");

  // (inner)/d
  if (t[0] == '(') {
    size_t close = t.rfind(')');
    if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis");
    FieldElement inner = parse(t.substr(1, close - 1));
    if (close + 1 == t.size()) return inner;
    if (t[close + 1] != '/') throw std::invalid_argument("expected / after parenthesis");
    Int d(t.substr(close + 2));
    return mul_rat(inner, Rat(1) / Rat(d));
  }

  FieldElement acc = zero();
  size_t i = 0;
  while (i < t.size()) {
    int sign = 1;
    while (i < t.size() && (t[i] == '+' || t[i] == '-')) {
      if (t[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= t.size()) throw std::invalid_argument("dangling sign");
    // coefficient
    Rat coeff(1);
    bool saw_num = false;
    size_t j = i;
    while (j < t.size() && std::isdigit((unsigned char)t[j])) ++j;
    if (j > i) {
      saw_num = true;
      Int numpart(t.substr(i, j - i));
      Int denpart(1);
      if (j < t.size() && t[j] == '/' && j + 1 < t.size() &&
          std::isdigit((unsigned char)t[j + 1])) {
        size_t k = j + 1;
        while (k < t.size() && std::isdigit((unsigned char)t[k])) ++k;
        denpart = Int(t.substr(j + 1, k - j - 1));
        j = k;
      }
      coeff = Rat(numpart) / Rat(denpart);
      i = j;
    }
    if (i < t.size() && t[i] == '*') ++i;
    long e = 0;
    if (i < t.size() && t[i] == 'w') {
      ++i;
      e = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        size_t k = i;
        while (k < t.size() && std::isdigit((unsigned char)t[k])) ++k;
        if (k == i) throw std::invalid_argument("missing exponent");
        e = std::stol(t.substr(i, k - i));
        i = k;
      }
    } else if (!saw_num) {
      throw std::invalid_argument("expected coefficient or w");
    }
    // divided-by suffix applying to the whole term, as in "w/2"
    if (i < t.size() && t[i] == '/') {
      size_t k = i + 1;
      while (k < t.size() && std::isdigit((unsigned char)t[k])) ++k;
      if (k == i + 1) throw std::invalid_argument("missing denominator");
      coeff /= Rat(Int(t.substr(i + 1, k - i - 1)));
      i = k;
    }
    if (sign < 0) coeff = -coeff;
    FieldElement term = e == 0 ? from_rat(coeff) : mul_rat(pow(gen(), Int(e)), coeff);
    acc = add(acc, term);
  }
  return acc;
}

}  // namespace quatinv
