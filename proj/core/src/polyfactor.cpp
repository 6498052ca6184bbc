#include "quatinv/polyfactor.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <random>
#include <stdexcept>

namespace quatinv {

bool FpPoly::operator<(const FpPoly& o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  for (int i = deg(); i >= 0; --i)
    if (c[i] != o.c[i]) return c[i] < o.c[i];
  return false;
}

namespace {
void trim(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

FpPoly FpCtx::reduce(const ZPoly& f) const {
  FpPoly r;
  r.c.reserve(f.c.size());
  for (const Int& a : f.c) {
    Int v = a % p_;
    if (v < 0) v += p_;
    r.c.push_back(v);
  }
  trim(r.c);
  return r;
}

ZPoly FpCtx::lift(const FpPoly& f) const { return ZPoly(f.c); }

FpPoly FpCtx::add(const FpPoly& a, const FpPoly& b) const {
  FpPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) {
    r.c[i] += b.c[i];
    if (r.c[i] >= p_) r.c[i] -= p_;
  }
  trim(r.c);
  return r;
}

FpPoly FpCtx::sub(const FpPoly& a, const FpPoly& b) const {
  FpPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) {
    r.c[i] -= b.c[i];
    if (r.c[i] < 0) r.c[i] += p_;
  }
  trim(r.c);
  return r;
}

FpPoly FpCtx::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.is_zero() || b.is_zero()) return FpPoly();
  FpPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  for (Int& v : r.c) v %= p_;
  trim(r.c);
  return r;
}

void FpCtx::divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) const {
  if (b.is_zero()) throw std::domain_error("FpCtx::divmod by zero");
  Int linv = invmod(b.c.back(), p_);
  r = a;
  q.c.assign(a.deg() >= b.deg() ? a.deg() - b.deg() + 1 : 0, Int(0));
  while (r.deg() >= b.deg()) {
    int shift = r.deg() - b.deg();
    Int t = r.c.back() * linv % p_;
    q.c[shift] = t;
    for (int i = 0; i <= b.deg(); ++i) {
      Int& v = r.c[shift + i];
      v = (v - t * b.c[i]) % p_;
      if (v < 0) v += p_;
    }
    trim(r.c);
  }
  trim(q.c);
}

FpPoly FpCtx::mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) const {
  FpPoly prod = mul(a, b), q, r;
  divmod(prod, m, q, r);
  return r;
}

FpPoly FpCtx::monic(const FpPoly& a) const {
  if (a.is_zero() || a.c.back() == 1) return a;
  Int linv = invmod(a.c.back(), p_);
  FpPoly r = a;
  for (Int& v : r.c) v = v * linv % p_;
  return r;
}

FpPoly FpCtx::gcd(const FpPoly& a0, const FpPoly& b0) const {
  FpPoly a = a0, b = b0;
  while (!b.is_zero()) {
    FpPoly q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return monic(a);
}

FpPoly FpCtx::powmod(const FpPoly& base, const Int& e, const FpPoly& m) const {
  FpPoly result = constant(1), b = base;
  {
    FpPoly q, r;
    divmod(b, m, q, r);
    b = r;
  }
  for (long i = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; --i) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

FpPoly FpCtx::derivative(const FpPoly& a) const {
  FpPoly r;
  for (int i = 1; i <= a.deg(); ++i) r.c.push_back(a.c[i] * i % p_);
  trim(r.c);
  return r;
}

FpPoly FpCtx::xpoly() const {
  FpPoly r;
  r.c = {Int(0), Int(1)};
  if (p_ == 1) r.c.clear();
  return r;
}

FpPoly FpCtx::constant(const Int& v) const {
  FpPoly r;
  Int u = v % p_;
  if (u < 0) u += p_;
  if (u != 0) r.c = {u};
  return r;
}

namespace {

// p-th root of f when f'(x) = 0 in F_p[x]: exponents are multiples of p and
// coefficients are Frobenius-fixed
FpPoly pth_root(const FpPoly& f, const Int& p) {
  if (!p.fits_ulong_p()) throw std::domain_error("pth_root: p too large");
  unsigned long pl = p.get_ui();
  FpPoly r;
  for (size_t i = 0; i < f.c.size(); i += pl) r.c.push_back(f.c[i]);
  trim(r.c);
  return r;
}

}  // namespace

std::vector<FpPoly> FpCtx::squarefree_split(const FpPoly& f,
                                            std::vector<int>& mult) const {
  // returns pairwise coprime monic squarefree parts with multiplicities
  std::vector<FpPoly> parts;
  FpPoly fm = monic(f);
  FpPoly fp = derivative(fm);
  if (fp.is_zero()) {
    FpPoly root = pth_root(fm, p_);
    std::vector<int> m2;
    auto sub = squarefree_split(root, m2);
    for (size_t i = 0; i < sub.size(); ++i) {
      parts.push_back(sub[i]);
      mult.push_back(m2[i] * (int)p_.get_ui());
    }
    return parts;
  }
  FpPoly g = gcd(fm, fp);
  FpPoly q, r, w;
  divmod(fm, g, q, r);
  w = q;
  int i = 1;
  while (w.deg() > 0) {
    FpPoly y = gcd(w, g);
    divmod(w, y, q, r);
    if (q.deg() > 0) {
      parts.push_back(monic(q));
      mult.push_back(i);
    }
    w = y;
    divmod(g, y, q, r);
    g = q;
    ++i;
  }
  if (g.deg() > 0) {
    FpPoly root = pth_root(monic(g), p_);
    std::vector<int> m2;
    auto sub = squarefree_split(root, m2);
    for (size_t j = 0; j < sub.size(); ++j) {
      parts.push_back(sub[j]);
      mult.push_back(m2[j] * (int)p_.get_ui());
    }
  }
  return parts;
}

void FpCtx::ddf(const FpPoly& f,
                std::vector<std::pair<FpPoly, int>>& out) const {
  // f monic squarefree; out gets (product of degree-d irreducibles, d)
  FpPoly cur = f;
  FpPoly h = xpoly();
  {
    FpPoly q, r;
    divmod(h, cur, q, r);
    h = r;
  }
  int d = 0;
  while (cur.deg() > 2 * d) {
    ++d;
    h = powmod(h, p_, cur);
    FpPoly g = gcd(sub(h, xpoly()), cur);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      FpPoly q, r;
      divmod(cur, g, q, r);
      cur = q;
      divmod(h, cur, q, r);
      h = r;
    }
  }
  if (cur.deg() > 0) out.emplace_back(cur, cur.deg());
}

void FpCtx::edf(const FpPoly& f, int d, std::vector<FpPoly>& out) const {
  if (f.deg() == d) {
    out.push_back(monic(f));
    return;
  }
  // deterministic per-(p, f) randomness so runs are reproducible
  std::seed_seq seq{(unsigned)mpz_fdiv_ui(p_.get_mpz_t(), 1000000007u),
                    (unsigned)f.deg(), (unsigned)d, 0x5eedu};
  std::mt19937_64 rng(seq);
  Int pd_half;
  if (p_ != 2) {
    Int pd;
    mpz_pow_ui(pd.get_mpz_t(), p_.get_mpz_t(), d);
    pd_half = (pd - 1) / 2;
  }
  for (int attempt = 0;; ++attempt) {
    FpPoly a;
    a.c.resize(f.deg());
    int pbits = (int)mpz_sizeinbase(p_.get_mpz_t(), 2);
    for (auto& v : a.c) {
      Int acc = 0;
      for (int done = 0; done < pbits + 64; done += 32) {
        acc <<= 32;
        acc += (unsigned long)(uint32_t)rng();
      }
      v = acc % p_;
    }
    trim(a.c);
    if (a.deg() < 1) continue;
    FpPoly g = gcd(a, f);
    if (g.deg() == 0) {
      if (p_ == 2) {
        // trace map over F_2
        FpPoly t = a, s = a;
        for (int i = 1; i < d; ++i) {
          s = mulmod(s, s, f);
          t = add(t, s);
        }
        g = gcd(t, f);
      } else {
        FpPoly b = powmod(a, pd_half, f);
        g = gcd(sub(b, constant(1)), f);
      }
    }
    if (g.deg() > 0 && g.deg() < f.deg()) {
      FpPoly q, r;
      divmod(f, g, q, r);
      edf(g, d, out);
      edf(q, d, out);
      return;
    }
    if (attempt > 200)
      throw std::runtime_error("edf: no split found, is the input valid?");
  }
}

std::vector<std::pair<FpPoly, int>> FpCtx::factor(const FpPoly& f) const {
  std::vector<std::pair<FpPoly, int>> out;
  if (f.deg() <= 0) return out;
  std::vector<int> mult;
  auto parts = squarefree_split(f, mult);
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<std::pair<FpPoly, int>> bydeg;
    ddf(parts[i], bydeg);
    for (auto& [prod, d] : bydeg) {
      std::vector<FpPoly> irr;
      edf(prod, d, irr);
      for (auto& h : irr) out.emplace_back(h, mult[i]);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// Factorization over Z: Zassenhaus with linear Hensel lifting.

namespace {

struct ModM {
  // polynomial helpers with coefficients reduced into [0, M)
  Int M;
  std::vector<Int> reduce(const ZPoly& f) const {
    std::vector<Int> c;
    c.reserve(f.c.size());
    for (const Int& a : f.c) {
      Int v = a % M;
      if (v < 0) v += M;
      c.push_back(v);
    }
    trim(c);
    return c;
  }
  std::vector<Int> mul(const std::vector<Int>& a,
                       const std::vector<Int>& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (Int& v : r) v %= M;
    trim(r);
    return r;
  }
  std::vector<Int> sub(const std::vector<Int>& a,
                       const std::vector<Int>& b) const {
    std::vector<Int> r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) {
      r[i] -= b[i];
      if (r[i] < 0) r[i] += M;
    }
    trim(r);
    return r;
  }
  std::vector<Int> add(const std::vector<Int>& a,
                       const std::vector<Int>& b) const {
    std::vector<Int> r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) {
      r[i] += b[i];
      if (r[i] >= M) r[i] -= M;
    }
    trim(r);
    return r;
  }
};

ZPoly symmetric_lift(const std::vector<Int>& c, const Int& M) {
  ZPoly r;
  Int half = M / 2;
  for (const Int& a : c) r.c.push_back(a > half ? a - M : a);
  r.normalize();
  return r;
}

// lift target ≡ G*H (mod p) to target ≡ G'*H' (mod p^k), all monic
void hensel_pair(const FpCtx& fp, const ZPoly& target, const Int& pk,
                 const FpPoly& G0, const FpPoly& H0, std::vector<Int>& G,
                 std::vector<Int>& H) {
  const Int& p = fp.p();
  // Bezout u*G0 + v*H0 = 1 mod p
  FpPoly u, v;
  {
    FpPoly a = G0, b = H0;
    FpPoly ua = fp.constant(1), ub;
    FpPoly va, vb = fp.constant(1);
    while (!b.is_zero()) {
      FpPoly q, r;
      fp.divmod(a, b, q, r);
      FpPoly un = fp.sub(ua, fp.mul(q, ub));
      FpPoly vn = fp.sub(va, fp.mul(q, vb));
      a = b;
      b = r;
      ua = ub;
      ub = un;
      va = vb;
      vb = vn;
    }
    // a = gcd = constant (coprime factors)
    if (a.deg() != 0) throw std::runtime_error("hensel_pair: factors not coprime");
    Int ainv = invmod(a.c[0], p);
    for (auto& w : ua.c) w = w * ainv % p;
    for (auto& w : va.c) w = w * ainv % p;
    u = ua;
    v = va;
  }
  G = G0.c;
  H = H0.c;
  Int pj = p;
  while (pj < pk) {
    ModM mm{pj * p};
    auto Gm = G, Hm = H;
    // e = target - G*H mod p^{j+1}, divisible by p^j
    auto prod = mm.mul(Gm, Hm);
    auto tgt = mm.reduce(target);
    auto e = mm.sub(tgt, prod);
    // d = e / p^j over F_p
    FpPoly d;
    d.c.reserve(e.size());
    for (Int& w : e) {
      Int q = w / pj;
      assert(q * pj == w);
      d.c.push_back(q % p);
    }
    trim(d.c);
    // solve a*H + b*G = d (mod p), deg a < deg G
    FpPoly a, b;
    {
      FpPoly q, r;
      fp.divmod(fp.mul(v, d), G0, q, r);
      a = r;
      FpPoly rem = fp.sub(d, fp.mul(a, H0));
      fp.divmod(rem, G0, b, r);
      if (!r.is_zero()) throw std::runtime_error("hensel_pair: lift failed");
    }
    // G += p^j * a, H += p^j * b
    std::vector<Int> ac, bc;
    for (const Int& w : a.c) ac.push_back(w * pj);
    for (const Int& w : b.c) bc.push_back(w * pj);
    G = mm.add(G, ac);
    H = mm.add(H, bc);
    pj *= p;
  }
  // final reduction mod pk (pj may overshoot)
  ModM mm{pk};
  G = mm.reduce(ZPoly(G));
  H = mm.reduce(ZPoly(H));
}

void lift_list(const FpCtx& fp, const ZPoly& target, const Int& pk,
               const std::vector<FpPoly>& factors, size_t lo, size_t hi,
               std::vector<std::vector<Int>>& out) {
  if (hi - lo == 1) {
    ModM mm{pk};
    out[lo] = mm.reduce(target);
    return;
  }
  size_t mid = (lo + hi) / 2;
  FpPoly G0 = fp.constant(1), H0 = fp.constant(1);
  for (size_t i = lo; i < mid; ++i) G0 = fp.mul(G0, factors[i]);
  for (size_t i = mid; i < hi; ++i) H0 = fp.mul(H0, factors[i]);
  std::vector<Int> G, H;
  hensel_pair(fp, target, pk, G0, H0, G, H);
  lift_list(fp, ZPoly(G), pk, factors, lo, mid, out);
  lift_list(fp, ZPoly(H), pk, factors, mid, hi, out);
}

// monic squarefree primitive, deg >= 1
std::vector<ZPoly> factor_monic_sf(const ZPoly& f) {
  if (f.deg() == 1) return {f};
  Int disc = discriminant(f);
  assert(disc != 0);
  // pick the prime giving the fewest modular factors
  std::vector<FpPoly> best;
  Int bestp = 0;
  int tried = 0;
  for (uint32_t p : primes_upto(10000)) {
    if (p == 2) continue;
    if (disc % p == 0) continue;
    FpCtx fp{Int(p)};
    auto fac = fp.factor(fp.reduce(f));
    std::vector<FpPoly> fs;
    for (auto& [g, e] : fac) {
      assert(e == 1);
      fs.push_back(g);
    }
    if (fs.size() == 1) return {f};
    if (best.empty() || fs.size() < best.size()) {
      best = fs;
      bestp = p;
    }
    if (++tried >= 5) break;
  }
  assert(!best.empty());
  FpCtx fp{bestp};
  // Mignotte: factors of f have sup-norm <= 2^deg * ||f||_2
  Int norm2sq = 0;
  for (const Int& a : f.c) norm2sq += a * a;
  Int B = (isqrt(norm2sq) + 1) << f.deg();
  Int pk = bestp;
  while (pk <= 2 * B) pk *= bestp;
  std::vector<std::vector<Int>> lifted(best.size());
  lift_list(fp, f, pk, best, 0, best.size(), lifted);

  std::vector<ZPoly> out;
  std::vector<int> active(best.size());
  for (size_t i = 0; i < best.size(); ++i) active[i] = (int)i;
  ZPoly rem = f;
  ModM mm{pk};
  for (size_t take = 1; active.size() >= 2 * take;) {
    // all index subsets of size `take` from active
    std::vector<size_t> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = i;
    bool found = false;
    for (;;) {
      std::vector<Int> cand = {Int(1) % pk};
      for (size_t i : idx) cand = mm.mul(cand, lifted[active[i]]);
      ZPoly g = symmetric_lift(cand, pk);
      bool divides = false;
      if (!g.is_zero() && g.deg() >= 1) {
        try {
          ZPoly q = divexact(rem, g);
          rem = q;
          divides = true;
        } catch (const std::domain_error&) {
        }
      }
      if (divides) {
        out.push_back(g);
        std::vector<int> na;
        for (size_t i = 0; i < active.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end())
            na.push_back(active[i]);
        active = na;
        found = true;
        break;
      }
      // next combination
      int pos = (int)take - 1;
      while (pos >= 0 && idx[pos] == active.size() - take + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++take;
  }
  if (rem.deg() >= 1) out.push_back(rem);
  return out;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> factor_z(const ZPoly& f0) {
  if (f0.is_zero()) throw std::domain_error("factor_z(0)");
  ZPoly f = f0.primitive();
  std::vector<std::pair<ZPoly, int>> out;
  if (f.deg() == 0) return out;
  // strip x^k
  int k = 0;
  while (f.coeff(0) == 0) {
    f.c.erase(f.c.begin());
    ++k;
  }
  if (k > 0) out.emplace_back(ZPoly{0, 1}, k);
  if (f.deg() >= 1) {
    ZPoly sf = squarefree_part(f);
    // non-monic handling: factor lc^{n-1} f(x/lc), then undo substitution
    std::vector<ZPoly> irr;
    if (sf.is_monic()) {
      irr = factor_monic_sf(sf);
    } else {
      Int lc = sf.lead();
      int n = sf.deg();
      // factor the monic lc^{n-1} f(x/lc) instead, then undo x -> lc x
      ZPoly g;
      g.c.assign(n + 1, Int(0));
      g.c[n] = 1;
      Int pw = 1;
      for (int i = n - 1; i >= 0; --i) {
        g.c[i] = sf.c[i] * pw;
        pw *= lc;
      }
      g.normalize();
      auto gi = factor_monic_sf(g);
      for (ZPoly h : gi) {
        // h(lc * x), primitive part
        Int pw2 = 1;
        for (int i = 0; i <= h.deg(); ++i) {
          h.c[i] *= pw2;
          pw2 *= lc;
        }
        h = h.primitive();
        irr.push_back(h);
      }
    }
    for (ZPoly& g : irr) {
      int e = 0;
      for (;;) {
        try {
          ZPoly q = divexact(f, g);
          f = q;
          ++e;
        } catch (const std::domain_error&) {
          break;
        }
      }
      assert(e >= 1);
      out.emplace_back(g, e);
    }
    assert(f.deg() == 0);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    for (int i = a.first.deg(); i >= 0; --i)
      if (a.first.c[i] != b.first.c[i]) return a.first.c[i] < b.first.c[i];
    return false;
  });
  return out;
}

bool is_irreducible_z(const ZPoly& f) {
  ZPoly g = f.primitive();
  if (g.deg() < 1) return false;
  if (g.deg() == 1) return true;
  if (g.coeff(0) == 0) return false;
  Int disc = discriminant(g);
  if (disc == 0) return false;
  // a single irreducible reduction certifies irreducibility over Q
  int tried = 0;
  for (uint32_t p : primes_upto(10000)) {
    if (p == 2 || disc % p == 0 || g.lead() % p == 0) continue;
    FpCtx fp{Int(p)};
    auto fac = fp.factor(fp.reduce(g));
    if (fac.size() == 1 && fac[0].second == 1) return true;
    if (++tried >= 8) break;
  }
  auto fac = factor_z(g);
  return fac.size() == 1 && fac[0].second == 1;
}

// ---------------------------------------------------------------------------
// u64 distinct-degree kernel for Euler products.

namespace {

constexpr int kMaxDeg = 16;

struct U64Poly {
  std::array<uint64_t, kMaxDeg + 1> c;
  int d;  // degree, -1 for zero
};

void u64_trim(U64Poly& a) {
  while (a.d >= 0 && a.c[a.d] == 0) --a.d;
}

// r = a*b mod f, f monic of degree n, all in Montgomery domain
void u64_mulmod(const U64Poly& a, const U64Poly& b, const U64Poly& f,
                const Mont64& mt, U64Poly& r) {
  uint64_t acc[2 * kMaxDeg + 1] = {0};
  for (int i = 0; i <= a.d; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j <= b.d; ++j)
      acc[i + j] = mt.add(acc[i + j], mt.mul(a.c[i], b.c[j]));
  }
  int dd = a.d + b.d;
  // reduce by monic f
  for (int i = dd; i >= f.d; --i) {
    uint64_t t = acc[i];
    if (t == 0) continue;
    acc[i] = 0;
    for (int j = 0; j < f.d; ++j)
      acc[i - f.d + j] = mt.sub(acc[i - f.d + j], mt.mul(t, f.c[j]));
  }
  r.d = f.d - 1;
  for (int i = 0; i < f.d; ++i) r.c[i] = acc[i];
  u64_trim(r);
}

void u64_divmod(const U64Poly& a, const U64Poly& b, const Mont64& mt,
                uint64_t p, U64Poly& q, U64Poly& r) {
  // b != 0; works in Montgomery domain
  uint64_t binv = mt.pow(b.c[b.d], p - 2);
  r = a;
  q.d = a.d - b.d;
  if (q.d < 0) {
    q.d = -1;
    return;
  }
  for (int i = 0; i <= q.d; ++i) q.c[i] = 0;
  while (r.d >= b.d) {
    int shift = r.d - b.d;
    uint64_t t = mt.mul(r.c[r.d], binv);
    q.c[shift] = t;
    for (int j = 0; j <= b.d; ++j)
      r.c[shift + j] = mt.sub(r.c[shift + j], mt.mul(t, b.c[j]));
    u64_trim(r);
  }
}

void u64_gcd(U64Poly a, U64Poly b, const Mont64& mt, uint64_t p, U64Poly& g) {
  U64Poly q, r;
  while (b.d >= 0) {
    u64_divmod(a, b, mt, p, q, r);
    a = b;
    b = r;
  }
  g = a;
  if (g.d >= 0 && g.c[g.d] != mt.one()) {
    uint64_t linv = mt.pow(g.c[g.d], p - 2);
    for (int i = 0; i <= g.d; ++i) g.c[i] = mt.mul(g.c[i], linv);
  }
}

}  // namespace

void ddf_degrees_u64(const std::vector<uint64_t>& fc, uint64_t p,
                     std::vector<int>& degrees_out) {
  degrees_out.clear();
  Mont64 mt(p);
  U64Poly f;
  f.d = (int)fc.size() - 1;
  assert(f.d >= 1 && f.d <= kMaxDeg);
  for (int i = 0; i <= f.d; ++i) f.c[i] = mt.to(fc[i] % p);
  // make monic
  if (f.c[f.d] != mt.one()) {
    uint64_t linv = mt.pow(f.c[f.d], p - 2);
    for (int i = 0; i <= f.d; ++i) f.c[i] = mt.mul(f.c[i], linv);
  }
  U64Poly h;  // x mod f
  if (f.d == 1) {
    degrees_out.push_back(1);
    return;
  }
  h.d = 1;
  h.c[0] = 0;
  h.c[1] = mt.one();
  U64Poly cur = f;
  int d = 0;
  while (cur.d > 2 * d) {
    ++d;
    // h = h^p mod cur
    U64Poly result;
    result.d = 0;
    result.c[0] = mt.one();
    U64Poly base = h;
    uint64_t e = p;
    while (e) {
      if (e & 1) u64_mulmod(result, base, cur, mt, result);
      e >>= 1;
      if (e) u64_mulmod(base, base, cur, mt, base);
    }
    h = result;
    // g = gcd(h - x, cur)
    U64Poly diff;
    diff.d = std::max(h.d, 1);
    for (int i = 0; i <= diff.d; ++i) diff.c[i] = (i <= h.d) ? h.c[i] : 0;
    diff.c[1] = mt.sub(diff.c[1], mt.one());
    u64_trim(diff);
    U64Poly g;
    if (diff.d < 0) {
      // h == x: everything remaining splits into degree-d factors
      g = cur;
    } else {
      u64_gcd(cur, diff, mt, p, g);
    }
    if (g.d > 0) {
      assert(g.d % d == 0);
      for (int i = 0; i < g.d / d; ++i) degrees_out.push_back(d);
      if (g.d == cur.d) {
        cur.d = 0;
        cur.c[0] = mt.one();
        break;
      }
      U64Poly q, r;
      u64_divmod(cur, g, mt, p, q, r);
      cur = q;
      u64_divmod(h, cur, mt, p, q, r);
      h = r;
    }
  }
  if (cur.d > 0) degrees_out.push_back(cur.d);
}

}  // namespace quatinv
