#include "quatinv/quaternion.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>

#include "quatinv/integers.hpp"
#include "quatinv/matrix.hpp"

namespace quatinv {

namespace {

// x * au^t, integral whenever val_P(x) >= t (au has valuation -1 at P only)
FieldElement shift_down(const NumberField& F, const FieldElement& x,
                        const PrimeIdeal& P, int t) {
  FieldElement r = x;
  for (int i = 0; i < t; i++) r = F.mul(r, P.anti_unif);
  return r;
}

// Clear the denominator by a square so valuations keep their parity
FieldElement clear_den(const NumberField& F, const FieldElement& x) {
  if (x.den == 1) return x;
  FieldElement r = x;
  r.den = 1;
  for (size_t i = 0; i < r.num.size(); i++) r.num[i] *= x.den;
  return r;
}

// Reduce an integral element to valuation 0 or 1 at P, changing it only by
// squares; the result stays integral.
FieldElement norm_parity(const NumberField& F, const FieldElement& x,
                         const PrimeIdeal& P) {
  int v = valuation_elt(F, x, P);
  assert(v >= 0);
  return shift_down(F, x, P, 2 * (v / 2));
}

std::string elt_key(const NumberField& F, const FieldElement& x) {
  std::vector<Int> c;
  bool ok = F.integral_coords(x, c);
  assert(ok);
  (void)ok;
  std::string s;
  for (const Int& v : c) {
    s += v.get_str();
    s += ',';
  }
  return s;
}

// O/P^k as an abelian group: SNF digits packed into a rank word with one
// guard bit per digit, so ranks add with a single add-and-mask.  Also holds
// the square table used by the dyadic isotropy test.
struct ResidueRing {
  const NumberField* F = nullptr;
  Ideal Ik;
  Mat V, Vinv;
  std::vector<Int> D;
  std::vector<int> mbits, off;
  uint32_t valmask = 0;
  int total_bits = 0;
  // distinct squares s = x^2 mod P^k for x over a transversal of
  // O/P^(k-e); flag says whether x was a unit at P
  std::vector<std::pair<FieldElement, bool>> squares;
  // the same squares reduced mod P^(2e+1), keyed canonically; a unit is a
  // local square iff its class mod P^(2e+1) appears here
  Ideal Idef;
  std::map<std::string, FieldElement> sq_def;

  uint32_t rank(const FieldElement& x) const {
    std::vector<Int> c;
    bool ok = F->integral_coords(x, c);
    assert(ok);
    (void)ok;
    std::vector<Int> y = vec_mat(c, V);
    uint32_t r = 0;
    for (size_t j = 0; j < D.size(); j++) {
      if (off[j] < 0) continue;
      unsigned long d = mpz_fdiv_ui(y[j].get_mpz_t(), mbits[j] == 0
                                                          ? 1ul
                                                          : (1ul << mbits[j]));
      r |= (uint32_t)d << off[j];
    }
    return r;
  }
};

struct RingKey {
  const NumberField* F;
  std::string p;
  int idx;
  int k;
  bool operator<(const RingKey& o) const {
    return std::tie(F, p, idx, k) < std::tie(o.F, o.p, o.idx, o.k);
  }
};

int prime_position(const NumberField& F, const PrimeIdeal& P) {
  const auto& v = primes_above(F, P.p);
  for (size_t i = 0; i < v.size(); i++)
    if (ideal_equal(v[i].ideal, P.ideal)) return (int)i;
  throw std::logic_error("prime not found above its own p");
}

// Enumerate a transversal of O/I from the SNF digit box of I's lattice
template <typename CB>
void quotient_transversal(const NumberField& F, const Ideal& I, CB cb) {
  Mat u, v, d;
  snf(I.h, u, v, d);
  int n = F.degree();
  Mat vinv = mat_adjugate(v);
  if (mat_det(v) < 0)
    for (auto& row : vinv)
      for (auto& x : row) x = -x;
  std::vector<Int> dig(n, 0);
  while (true) {
    std::vector<Int> coords = vec_mat(dig, vinv);
    cb(ideal_reduce_elt(I, F.from_integral_coords(coords)));
    int pos = 0;
    while (pos < n) {
      dig[pos] += 1;
      if (dig[pos] < d[pos][pos]) break;
      dig[pos] = 0;
      pos++;
    }
    if (pos >= n) break;
  }
}

const ResidueRing& residue_ring(const NumberField& F, const PrimeIdeal& P,
                                int k) {
  static std::map<RingKey, std::unique_ptr<ResidueRing>> cache;
  RingKey key{&F, P.p.get_str(), prime_position(F, P), k};
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto rr = std::make_unique<ResidueRing>();
  rr->F = &F;
  rr->Ik = ideal_pow(P.ideal, k);
  Mat u, d;
  snf(rr->Ik.h, u, rr->V, d);
  int n = F.degree();
  rr->Vinv = mat_adjugate(rr->V);
  if (mat_det(rr->V) < 0)
    for (auto& row : rr->Vinv)
      for (auto& x : row) x = -x;
  rr->D.resize(n);
  rr->mbits.assign(n, 0);
  rr->off.assign(n, -1);
  int bits = 0;
  for (int j = 0; j < n; j++) {
    rr->D[j] = d[j][j];
    assert(rr->D[j] >= 1);
    if (rr->D[j] == 1) continue;
    assert(mpz_popcount(rr->D[j].get_mpz_t()) == 1);  // p = 2 only
    int m = (int)mpz_sizeinbase(rr->D[j].get_mpz_t(), 2) - 1;
    rr->mbits[j] = m;
    rr->off[j] = bits;
    rr->valmask |= ((1u << m) - 1u) << bits;
    bits += m + 1;  // guard bit on top
  }
  rr->total_bits = bits;
  if (bits > 28) throw std::runtime_error("dyadic residue ring too large");

  // squares mod P^k are determined by x mod P^(k-e)
  int e = P.e;  // ramification of 2 at P
  Ideal Ike = ideal_pow(P.ideal, k - e);
  std::map<std::string, std::pair<FieldElement, bool>> dedup;
  quotient_transversal(F, Ike, [&](const FieldElement& x) {
    bool unit = !ideal_contains_elt(P.ideal, x);
    FieldElement s = ideal_reduce_elt(rr->Ik, F.mul(x, x));
    dedup.emplace(elt_key(F, s), std::make_pair(s, unit));
  });
  for (auto& [ky, sv] : dedup) rr->squares.push_back(sv);

  rr->Idef = ideal_pow(P.ideal, 2 * e + 1);
  for (const auto& [s, unit] : rr->squares) {
    FieldElement t = ideal_reduce_elt(rr->Idef, s);
    rr->sq_def.emplace(elt_key(F, t), t);
  }

  auto& slot = cache[key];
  slot = std::move(rr);
  return *slot;
}

// x congruent to a square mod P^(2e+1); for units at P this is exactly
// being a square in the completion
bool ring_local_square(const ResidueRing& rr, const FieldElement& x,
                       const PrimeIdeal& P) {
  const NumberField& F = *rr.F;
  int v = valuation_elt(F, x, P);
  if (v & 1) return false;
  FieldElement u = shift_down(F, x, P, v);
  return rr.sq_def.count(elt_key(F, ideal_reduce_elt(rr.Idef, u))) > 0;
}

// Distinct packed ranks of c * (each square), split by unit flag of the root
void ranked_products(const ResidueRing& rr, const FieldElement& c,
                     std::vector<uint32_t>& unit_part,
                     std::vector<uint32_t>& deep_part) {
  const NumberField& F = *rr.F;
  for (const auto& [s, uflag] : rr.squares) {
    FieldElement t = ideal_reduce_elt(rr.Ik, F.mul(c, s));
    (uflag ? unit_part : deep_part).push_back(rr.rank(t));
  }
  auto dedup = [](std::vector<uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(unit_part);
  dedup(deep_part);
}

struct Bitset {
  std::vector<uint64_t> w;
  explicit Bitset(size_t nbits) : w((nbits + 63) / 64, 0) {}
  void set(uint32_t i) { w[i >> 6] |= 1ull << (i & 63); }
  bool get(uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
};

// Isotropy of x^2 - a y^2 - b z^2 over O/P^k with a primitive solution;
// a, b integral with valuation 0 or 1 at P.
bool dyadic_isotropic(const NumberField& F, const FieldElement& a,
                      const FieldElement& b, const PrimeIdeal& P, int k) {
  const ResidueRing& rr = residue_ring(F, P, k);
  std::vector<uint32_t> X0, X1, Y0, Y1, Z0, Z1;
  ranked_products(rr, F.one(), X0, X1);
  ranked_products(rr, a, Y0, Y1);
  ranked_products(rr, b, Z0, Z1);

  size_t nb = size_t(1) << rr.total_bits;
  Bitset all(nb), has_unit(nb);
  uint32_t mask = rr.valmask;
  auto sweep = [&](const std::vector<uint32_t>& ys,
                   const std::vector<uint32_t>& zs, bool mark_unit) {
    for (uint32_t y : ys)
      for (uint32_t z : zs) {
        uint32_t r = (y + z) & mask;
        all.set(r);
        if (mark_unit) has_unit.set(r);
      }
  };
  sweep(Y0, Z0, true);
  sweep(Y0, Z1, true);
  sweep(Y1, Z0, true);
  sweep(Y1, Z1, false);

  for (uint32_t x : X0)
    if (all.get(x)) return true;
  for (uint32_t x : X1)
    if (has_unit.get(x)) return true;
  return false;
}

int dyadic_symbol(const NumberField& F, FieldElement a, FieldElement b,
                  const PrimeIdeal& P) {
  a = norm_parity(F, clear_den(F, a), P);
  b = norm_parity(F, clear_den(F, b), P);
  if (valuation_elt(F, a, P) == 1 && valuation_elt(F, b, P) == 1) {
    // (a, b) = (a, -ab), which drops the second valuation to 0
    b = norm_parity(F, F.neg(F.mul(a, b)), P);
  }
  int e = P.e;
  const ResidueRing& rr = residue_ring(F, P, 2 * e + 3);
  // squares split the form immediately
  if (ring_local_square(rr, a, P) || ring_local_square(rr, b, P)) return 1;
  if (ring_local_square(rr, F.neg(F.mul(a, b)), P)) return 1;
  return dyadic_isotropic(F, a, b, P, 2 * e + 3) ? 1 : -1;
}

int tame_symbol(const NumberField& F, const FieldElement& a,
                const FieldElement& b, const PrimeIdeal& P) {
  // clearing denominators by squares keeps the symbol and makes valuations
  // nonnegative with the original parity
  FieldElement ca = clear_den(F, a), cb = clear_den(F, b);
  int va = valuation_elt(F, ca, P), vb = valuation_elt(F, cb, P);
  FieldElement ua = shift_down(F, ca, P, va);
  FieldElement ub = shift_down(F, cb, P, vb);
  int s = 1;
  if ((va & 1) && (vb & 1)) {
    // (-1)^((Np-1)/2)
    Int np;
    mpz_pow_ui(np.get_mpz_t(), P.p.get_mpz_t(), P.f);
    if (mpz_fdiv_ui(np.get_mpz_t(), 4) == 3) s = -s;
  }
  if (vb & 1) s *= residue_legendre(P, ua);
  if (va & 1) s *= residue_legendre(P, ub);
  return s;
}

FieldElement det4(const NumberField& F, std::vector<std::vector<FieldElement>> m) {
  // fraction-free is unnecessary at this size
  FieldElement det = F.one();
  int n = 4, sign = 1;
  for (int col = 0; col < n; col++) {
    int piv = -1;
    for (int r = col; r < n; r++)
      if (!F.is_zero(m[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) return F.zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    det = F.mul(det, m[col][col]);
    FieldElement inv = F.inverse(m[col][col]);
    for (int r = col + 1; r < n; r++) {
      FieldElement f = F.mul(m[r][col], inv);
      for (int c = col; c < n; c++)
        m[r][c] = F.sub(m[r][c], F.mul(f, m[col][c]));
    }
  }
  if (sign < 0) det = F.neg(det);
  return det;
}

}  // namespace

QuatAlgebra make_quat(const NumberField& F, const FieldElement& a,
                      const FieldElement& b) {
  assert(!F.is_zero(a) && !F.is_zero(b));
  return QuatAlgebra{&F, a, b};
}

QuatElement quat_from(const QuatAlgebra& B, const FieldElement& x,
                      const FieldElement& y, const FieldElement& z,
                      const FieldElement& w) {
  (void)B;
  return QuatElement{x, y, z, w};
}

QuatElement quat_add(const QuatAlgebra& B, const QuatElement& p,
                     const QuatElement& q) {
  const NumberField& F = *B.field;
  return {F.add(p.x, q.x), F.add(p.y, q.y), F.add(p.z, q.z), F.add(p.w, q.w)};
}

QuatElement quat_mul(const QuatAlgebra& B, const QuatElement& p,
                     const QuatElement& q) {
  const NumberField& F = *B.field;
  const FieldElement &a = B.a, &b = B.b;
  FieldElement ab = F.mul(a, b);
  QuatElement r;
  r.x = F.add(F.add(F.mul(p.x, q.x), F.mul(a, F.mul(p.y, q.y))),
              F.sub(F.mul(b, F.mul(p.z, q.z)),
                    F.mul(ab, F.mul(p.w, q.w))));
  r.y = F.add(F.add(F.mul(p.x, q.y), F.mul(p.y, q.x)),
              F.mul(b, F.sub(F.mul(p.w, q.z), F.mul(p.z, q.w))));
  r.z = F.add(F.add(F.mul(p.x, q.z), F.mul(p.z, q.x)),
              F.mul(a, F.sub(F.mul(p.y, q.w), F.mul(p.w, q.y))));
  r.w = F.add(F.add(F.mul(p.x, q.w), F.mul(p.w, q.x)),
              F.sub(F.mul(p.y, q.z), F.mul(p.z, q.y)));
  return r;
}

QuatElement quat_conj(const QuatAlgebra& B, const QuatElement& q) {
  const NumberField& F = *B.field;
  return {q.x, F.neg(q.y), F.neg(q.z), F.neg(q.w)};
}

FieldElement quat_trd(const QuatAlgebra& B, const QuatElement& q) {
  return B.field->add(q.x, q.x);
}

FieldElement quat_nrd(const QuatAlgebra& B, const QuatElement& q) {
  const NumberField& F = *B.field;
  FieldElement s = F.sub(F.mul(q.x, q.x), F.mul(B.a, F.mul(q.y, q.y)));
  FieldElement t = F.sub(F.mul(B.b, F.mul(q.z, q.z)),
                         F.mul(F.mul(B.a, B.b), F.mul(q.w, q.w)));
  return F.sub(s, t);
}

int hilbert_symbol(const NumberField& F, const FieldElement& a,
                   const FieldElement& b, const PrimeIdeal& P) {
  assert(!F.is_zero(a) && !F.is_zero(b));
  if (P.p == 2) return dyadic_symbol(F, a, b, P);
  return tame_symbol(F, a, b, P);
}

int hilbert_symbol_real(const NumberField& F, const FieldElement& a,
                        const FieldElement& b, int place) {
  return (F.sign_at(a, place) < 0 && F.sign_at(b, place) < 0) ? -1 : 1;
}

QuatRamification ramification(const QuatAlgebra& B) {
  const NumberField& F = *B.field;
  std::vector<PrimeIdeal> cand;
  auto push = [&](const PrimeIdeal& P) {
    for (const auto& Q : cand)
      if (Q.p == P.p && ideal_equal(Q.ideal, P.ideal)) return;
    cand.push_back(P);
  };
  for (const auto& P : primes_above(F, 2)) push(P);
  auto add_elt = [&](const FieldElement& t) {
    FieldElement tn{t.num, 1};
    for (const auto& [P, e] : factor_ideal(ideal_principal(F, tn))) push(P);
    for (const auto& [p, e] : factor(t.den))
      for (const auto& P : primes_above(F, p)) push(P);
  };
  add_elt(B.a);
  add_elt(B.b);
  std::sort(cand.begin(), cand.end(),
            [&](const PrimeIdeal& x, const PrimeIdeal& y) {
              if (x.p != y.p) return x.p < y.p;
              return prime_position(F, x) < prime_position(F, y);
            });

  QuatRamification ram;
  for (const auto& P : cand)
    if (hilbert_symbol(F, B.a, B.b, P) == -1) ram.finite.push_back(P);
  for (int v = 0; v < F.r_real(); v++)
    if (hilbert_symbol_real(F, B.a, B.b, v) == -1) ram.real_places.push_back(v);
  // Hilbert reciprocity
  assert((ram.finite.size() + ram.real_places.size()) % 2 == 0);
  return ram;
}

Ideal quat_disc(const QuatAlgebra& B) {
  const NumberField& F = *B.field;
  Ideal D = ideal_whole(F);
  for (const auto& P : ramification(B).finite) D = ideal_mul(D, P.ideal);
  return D;
}

bool is_division(const QuatAlgebra& B) {
  QuatRamification ram = ramification(B);
  return !ram.finite.empty() || !ram.real_places.empty();
}

std::optional<int> quadratic_defect(const NumberField& F,
                                    const FieldElement& t,
                                    const PrimeIdeal& P) {
  assert(!F.is_zero(t));
  FieldElement tc = clear_den(F, t);
  int v = valuation_elt(F, tc, P);
  if (v & 1) return v;
  FieldElement u = shift_down(F, tc, P, v);
  if (P.p != 2) {
    if (residue_legendre(P, u) == 1) return std::nullopt;
    return v;
  }
  int e = P.e;
  int cap = 2 * e + 1;
  const ResidueRing& rr = residue_ring(F, P, 2 * e + 3);
  // a unit of level > 2e is a square
  if (ring_local_square(rr, u, P)) return std::nullopt;
  int best = 0;
  for (const auto& [ky, s] : rr.sq_def) {
    FieldElement d = F.sub(u, s);
    int val = F.is_zero(d) ? cap : std::min(valuation_elt(F, d, P), cap);
    if (val > best) best = val;
  }
  assert(best < cap);
  return v + best;
}

SplitType prime_split_type(const NumberField& F, const FieldElement& t,
                           const PrimeIdeal& P) {
  FieldElement tc = clear_den(F, t);
  int v = valuation_elt(F, tc, P);
  if (v & 1) return SplitType::Ramified;
  auto d = quadratic_defect(F, shift_down(F, tc, P, v), P);
  if (!d) return SplitType::Split;
  if (P.p != 2) return SplitType::Inert;
  if (*d == 2 * P.e) return SplitType::Inert;
  return SplitType::Ramified;
}

int rel_disc_exponent(const NumberField& F, const FieldElement& t,
                      const PrimeIdeal& P) {
  FieldElement tc = clear_den(F, t);
  int v = valuation_elt(F, tc, P);
  if (v & 1) return P.p == 2 ? 2 * P.e + 1 : 1;
  auto d = quadratic_defect(F, shift_down(F, tc, P, v), P);
  if (!d) return 0;
  if (P.p != 2) return 0;  // odd unramified nonsquare
  if (*d >= 2 * P.e) return 0;
  return 2 * P.e - *d + 1;
}

Ideal rel_disc(const NumberField& F, const FieldElement& t) {
  FieldElement tc = clear_den(F, t);
  std::vector<PrimeIdeal> cand;
  auto push = [&](const PrimeIdeal& P) {
    for (const auto& Q : cand)
      if (Q.p == P.p && ideal_equal(Q.ideal, P.ideal)) return;
    cand.push_back(P);
  };
  for (const auto& P : primes_above(F, 2)) push(P);
  for (const auto& [P, e] : factor_ideal(ideal_principal(F, tc))) push(P);
  Ideal D = ideal_whole(F);
  for (const auto& P : cand) {
    int e = rel_disc_exponent(F, tc, P);
    if (e > 0) D = ideal_mul(D, ideal_pow(P.ideal, e));
  }
  return D;
}

std::vector<int> complexified_places(const NumberField& F,
                                     const FieldElement& t) {
  std::vector<int> out;
  for (int v = 0; v < F.r_real(); v++)
    if (F.sign_at(t, v) < 0) out.push_back(v);
  return out;
}

Ideal order_reduced_disc(const QuatAlgebra& B,
                         const std::array<QuatElement, 4>& basis) {
  const NumberField& F = *B.field;
  std::vector<std::vector<FieldElement>> g(4,
                                           std::vector<FieldElement>(4));
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++)
      g[i][j] = quat_trd(B, quat_mul(B, basis[i], basis[j]));
  FieldElement det = det4(F, g);
  assert(!F.is_zero(det));
  assert(F.is_integral(det));
  Ideal D = ideal_whole(F);
  for (const auto& [P, e] : factor_ideal(ideal_principal(F, det))) {
    assert(e % 2 == 0);
    D = ideal_mul(D, ideal_pow(P.ideal, e / 2));
  }
  return D;
}

}  // namespace quatinv
