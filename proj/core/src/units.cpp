#include "quatinv/units.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quatinv/lattice.hpp"

namespace quatinv {

namespace {

// Embeddings of the integral basis as interval rows: first the r real
// places, then Re/Im rows for each complex place.  Row layout matches the
// right-hand sides assembled in sqrt_in_field.
std::vector<std::vector<RInterval>> basis_embeddings(const NumberField& F,
                                                     long prec) {
  int n = F.degree(), r = F.r_real(), c = F.c_complex();
  std::vector<std::vector<RInterval>> m(r + 2 * c);
  for (int j = 0; j < r; j++) {
    m[j].reserve(n);
    for (int i = 0; i < n; i++)
      m[j].push_back(F.embed_real(F.basis_element(i), j, prec));
  }
  for (int j = 0; j < c; j++) {
    auto& re = m[r + 2 * j];
    auto& im = m[r + 2 * j + 1];
    re.reserve(n);
    im.reserve(n);
    for (int i = 0; i < n; i++) {
      CInterval z = F.embed_complex(F.basis_element(i), r + j, prec);
      re.push_back(z.re);
      im.push_back(z.im);
    }
  }
  return m;
}

// T2 Gram matrix of the integral basis as doubles, for Fincke-Pohst
// searches.  Callers re-verify every candidate exactly, so midpoint
// rounding here is harmless.
std::vector<std::vector<double>> t2_gram(const NumberField& F) {
  int n = F.degree(), r = F.r_real(), c = F.c_complex();
  auto m = basis_embeddings(F, 192);
  std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      double s = 0;
      for (int k = 0; k < r; k++) s += m[k][i].mid() * m[k][j].mid();
      for (int k = 0; k < c; k++)
        s += 2.0 * (m[r + 2 * k][i].mid() * m[r + 2 * k][j].mid() +
                    m[r + 2 * k + 1][i].mid() * m[r + 2 * k + 1][j].mid());
      g[i][j] = s;
    }
  return g;
}

// log |sigma(u)| at each of the r + c places, or empty when some value's
// interval still straddles zero at this precision.
std::vector<RInterval> log_vector(const NumberField& F, const FieldElement& u,
                                  long prec) {
  int r = F.r_real(), c = F.c_complex();
  std::vector<RInterval> out;
  out.reserve(r + c);
  for (int j = 0; j < r; j++) {
    RInterval v = F.embed_real(u, j, prec).abs();
    if (!v.is_positive()) return {};
    out.push_back(v.log());
  }
  RInterval half = RInterval::exact(Rat(1, 2), prec);
  for (int j = 0; j < c; j++) {
    RInterval s = F.embed_complex(u, r + j, prec).abs_sq();
    if (!s.is_positive()) return {};
    out.push_back(s.log() * half);
  }
  return out;
}

// Determinant by interval Gaussian elimination.  nullopt when no pivot of
// certain sign can be found, which a precision bump may fix.
std::optional<RInterval> interval_det(std::vector<std::vector<RInterval>> a) {
  int k = (int)a.size();
  RInterval det = RInterval::exact(1L);
  int sign = 1;
  for (int col = 0; col < k; col++) {
    int best = -1;
    double bestmag = 0;
    for (int row = col; row < k; row++) {
      const RInterval& e = a[row][col];
      if (!(e.is_positive() || e.is_negative())) continue;
      double mag = std::abs(e.mid());
      if (best < 0 || mag > bestmag) {
        best = row;
        bestmag = mag;
      }
    }
    if (best < 0) return std::nullopt;
    if (best != col) {
      std::swap(a[best], a[col]);
      sign = -sign;
    }
    for (int row = col + 1; row < k; row++) {
      RInterval f = a[row][col] / a[col][col];
      for (int c2 = col; c2 < k; c2++)
        a[row][c2] = a[row][c2] - f * a[col][c2];
    }
    det = det * a[col][col];
  }
  if (sign < 0) det = -det;
  return det;
}

// Certified multiplicative independence via positivity of the Gram
// determinant of the log vectors.  A dependent system has Gram det exactly
// zero, so its interval can never certify positive and we fall out at the
// precision cap.
bool independent_units(const NumberField& F,
                       const std::vector<FieldElement>& sys) {
  if (sys.empty()) return true;
  int k = (int)sys.size();
  for (long prec = 128; prec <= 4096; prec *= 2) {
    std::vector<std::vector<RInterval>> logs;
    logs.reserve(k);
    bool ok = true;
    for (const auto& u : sys) {
      auto lv = log_vector(F, u, prec);
      if (lv.empty()) {
        ok = false;
        break;
      }
      logs.push_back(std::move(lv));
    }
    if (!ok) continue;
    std::vector<std::vector<RInterval>> gram(k, std::vector<RInterval>(k));
    for (int i = 0; i < k; i++)
      for (int j = 0; j < k; j++) {
        RInterval s = RInterval::exact(0L, prec);
        for (size_t t = 0; t < logs[i].size(); t++)
          s = s + logs[i][t] * logs[j][t];
        gram[i][j] = s;
      }
    auto det = interval_det(gram);
    if (det && det->is_positive()) return true;
  }
  return false;
}

// Fundamental unit of a real quadratic field from the continued fraction
// of (d + sqrt(d)) / 2, d the field discriminant.  The first convergent
// h/k with h - k * conj(alpha) of norm +-1 is the fundamental unit.
FieldElement quadratic_fundamental_unit(const NumberField& F) {
  assert(F.degree() == 2 && F.r_real() == 2);
  Int d = F.disc();
  // sqrt of the polynomial discriminant is 2w + a1; rescale by the index
  // to get an element with square exactly d.
  Int a1 = F.poly().c[1];
  FieldElement sqrt_d =
      F.mul_rat(F.element({a1, 2}), Rat(1, F.index()));
  assert(F.equal(F.mul(sqrt_d, sqrt_d), F.from_int(d)));
  FieldElement alpha = F.mul_rat(F.add(F.from_int(d), sqrt_d), Rat(1, 2));
  assert(F.is_integral(alpha));

  Int N = d, P = d, Q = 2, s = isqrt(N);
  Int hm2 = 0, hm1 = 1, km2 = 1, km1 = 0;
  FieldElement best;
  bool found = false;
  for (int step = 0; step < 1000000; step++) {
    assert(Q > 0);
    Int a = (P + s) / Q;  // exact floor: sqrt(N) is irrational
    Int h = a * hm1 + hm2, k = a * km1 + km2;
    FieldElement u = F.add(F.from_int(h - d * k), F.mul_rat(alpha, Rat(k)));
    Rat nu = F.norm(u);
    if (nu == 1 || nu == -1) {
      best = u;
      found = true;
      break;
    }
    hm2 = hm1;
    hm1 = h;
    km2 = km1;
    km1 = k;
    Int Pn = a * Q - P;
    Int t = N - Pn * Pn;
    assert(mpz_divisible_p(t.get_mpz_t(), Q.get_mpz_t()));
    P = Pn;
    Q = t / Q;
  }
  if (!found)
    throw std::runtime_error("quadratic unit: period cap exceeded");

  // Canonical orientation: positive and > 1 at the first real place.
  if (F.sign_at(best, 0) < 0) best = F.neg(best);
  for (long prec = 128;; prec *= 2) {
    assert(prec <= (1L << 20));
    RInterval v = F.embed_real(best, 0, prec);
    RInterval one = RInterval::exact(1L, prec);
    if (one.strictly_below(v)) break;
    if (v.strictly_below(one)) {
      best = F.inverse(best);
      break;
    }
  }
  assert(is_unit(F, best));
  return best;
}

int element_order(const NumberField& F, const FieldElement& x, int cap) {
  FieldElement y = x;
  FieldElement one = F.one();
  for (int k = 1; k <= cap; k++) {
    if (F.equal(y, one)) return k;
    y = F.mul(y, x);
  }
  return 0;
}

// Hand-entered fundamental systems for the fields this library ships data
// for, found by the same Fincke-Pohst search the fallback path runs.  Each
// entry is power-basis coordinates over a denominator.  Entries are
// validated (unit test, independence, saturation) on load, so a wrong row
// here fails loudly rather than silently.
struct UnitHint {
  std::vector<long> num;
  long den;
};

const std::map<std::string, std::vector<UnitHint>>& unit_hints() {
  static const std::map<std::string, std::vector<UnitHint>> table = {
      {"x^3 - x + 1", {{{0, 1, 0}, 1}}},
      {"x^3 - x^2 + 3*x - 4", {{{-1, 1, 0}, 1}}},
      {"x^3 + x^2 - 2*x + 8", {{{-13, -13, -3}, 1}}},
      {"x^3 - x^2 - 6*x - 1", {{{0, 1, 0}, 1}, {{2, 1, 0}, 1}}},
      {"x^4 - x^3 + x^2 - x + 1", {{{-1, 1, 0, 0}, 1}}},
      {"x^4 - 6*x^2 - 2*x + 2",
       {{{1, 1, 0, 0}, 1}, {{-1, 2, 1, 0}, 1}, {{-1, 1, 3, 0}, 1}}},
      {"x^4 - 5*x^2 - 2*x + 1",
       {{{-1, -3, -1, 1}, 1}, {{0, 1, 0, 0}, 1}, {{1, 1, 0, 0}, 1}}},
      {"x^4 + 6*x^3 + 12*x^2 + 9*x + 1",
       {{{0, 1, 0, 0}, 1}, {{1, 1, 0, 0}, 1}}},
      {"x^4 - 10*x^2 + 1",
       {{{0, 1, 0, 0}, 1}, {{2, -9, 0, 1}, 2}, {{-5, -9, 1, 1}, 4}}},
      {"x^5 - 7*x^3 - 2*x^2 + 11*x + 5",
       {{{8, 3, -6, -1, 1}, 1},
        {{-3, -1, 1, 0, 0}, 1},
        {{-2, 0, 1, 0, 0}, 1},
        {{-1, -1, 1, 0, 0}, 1}}},
      {"x^6 - 2*x^5 - x^4 + 4*x^3 - 4*x^2 + 1",
       {{{-1, 2, -1, 0, 1, 0}, 1},
        {{0, 1, 0, 0, 0, 0}, 1},
        {{-1, 1, 0, 0, 0, 0}, 1},
        {{-1, 2, -2, -1, 1, 0}, 1}}},
      {"x^6 - 2*x^3 + 4",
       {{{-2, 0, 0, 1, 1, 1}, 2}, {{2, 2, -2, -1, 0, 1}, 2}}},
      {"x^6 + 6*x^4 + 9*x^2 + 3",
       {{{-4, -9, -5, -10, -1, -2}, 2}, {{-1, -7, -1, -6, 0, -1}, 2}}},
  };
  return table;
}

}  // namespace

std::vector<std::vector<double>> t2_gram_rows(const NumberField& F,
                                              const Mat& rows) {
  auto g0 = t2_gram(F);
  int n = F.degree();
  int m = (int)rows.size();
  std::vector<std::vector<double>> out(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; i++) {
    assert((int)rows[i].size() == n);
    for (int j = 0; j < m; j++) {
      double s = 0;
      for (int a = 0; a < n; a++) {
        if (rows[i][a] == 0) continue;
        double ra = rows[i][a].get_d();
        for (int b = 0; b < n; b++)
          s += ra * g0[a][b] * rows[j][b].get_d();
      }
      out[i][j] = s;
    }
  }
  return out;
}

bool is_unit(const NumberField& F, const FieldElement& x) {
  if (F.is_zero(x)) return false;
  if (!F.is_integral(x)) return false;
  Rat n = F.norm(x);
  return n == 1 || n == -1;
}

std::pair<FieldElement, int> torsion_units(const NumberField& F) {
  if (F.totally_real()) return {F.from_int(-1), 2};
  int n = F.degree();
  auto gram = t2_gram(F);
  // Torsion units are exactly the lattice points with T2 = n (AM-GM plus
  // Kronecker), so a search radius of n + 1/2 catches all of them.
  std::vector<FieldElement> tors;
  std::vector<int> orders;
  auto consider = [&](const FieldElement& x) {
    int ord = element_order(F, x, 200);
    if (ord == 0) return;
    for (const auto& t : tors)
      if (F.equal(t, x)) return;
    tors.push_back(x);
    orders.push_back(ord);
  };
  enumerate_qform(gram, n + 0.49, [&](const std::vector<long>& v) {
    std::vector<Int> c(v.begin(), v.end());
    FieldElement x = F.from_integral_coords(c);
    consider(x);
    consider(F.neg(x));
    return true;
  });
  int best = 0;
  for (size_t i = 1; i < tors.size(); i++)
    if (orders[i] > orders[best]) best = (int)i;
  assert(!tors.empty());
  int m = orders[best];
  // The group is cyclic of order m, so the enumeration must have seen
  // exactly m torsion elements.
  assert((int)tors.size() == m);
  assert(m % 2 == 0);
  return {tors[best], m};
}

std::optional<FieldElement> sqrt_in_field(const NumberField& F,
                                          const FieldElement& s) {
  if (F.is_zero(s)) return F.zero();
  int n = F.degree(), r = F.r_real(), c = F.c_complex();
  // Clear the denominator: t = s * den^2 is an algebraic integer, and any
  // square root of t in F is one too (it is a root of the monic x^2 - t),
  // so integral coordinates capture it.
  std::vector<Int> tn(s.num);
  for (auto& v : tn) v *= s.den;
  FieldElement t = F.element(tn, 1);
  for (int j = 0; j < r; j++)
    if (F.sign_at(t, j) < 0) return std::nullopt;

  for (long prec = 192; prec <= (1L << 15); prec *= 2) {
    auto M = basis_embeddings(F, prec);
    RInterval half = RInterval::exact(Rat(1, 2), prec);

    // Per-place candidate boxes for sqrt(sigma(t)).  Real places get one or
    // two sign choices; complex places get boxes from |z| and Re z, paired
    // by the sign of Im z.  The first place's choice is pinned to kill the
    // global +- symmetry.
    bool stale = false;
    std::vector<std::vector<RInterval>> real_choices(r);
    for (int j = 0; j < r && !stale; j++) {
      RInterval v = F.embed_real(t, j, prec);
      if (!v.is_positive()) {
        // sign_at said >= 0; zero is impossible for t != 0, refine
        stale = true;
        break;
      }
      RInterval rt = v.sqrt();
      real_choices[j].push_back(rt);
      if (j > 0) real_choices[j].push_back(-rt);
    }
    std::vector<std::vector<std::pair<RInterval, RInterval>>> cplx_choices(c);
    for (int j = 0; j < c && !stale; j++) {
      CInterval z = F.embed_complex(t, r + j, prec);
      RInterval rad = z.abs_sq().sqrt();
      RInterval ha = (rad + z.re) * half;
      RInterval hb = (rad - z.re) * half;
      // outward rounding can push lo slightly negative; the true values are
      // >= 0, so clamping keeps the enclosure valid
      if (mpfr_sgn(ha.lo_raw()) < 0) mpfr_set_zero(ha.lo_raw(), 1);
      if (mpfr_sgn(hb.lo_raw()) < 0) mpfr_set_zero(hb.lo_raw(), 1);
      RInterval a = ha.sqrt(), b = hb.sqrt();
      auto& ch = cplx_choices[j];
      bool pin = (r == 0 && j == 0);
      if (!z.im.is_negative()) ch.push_back({a, b});
      if (!z.im.is_negative() && !pin) ch.push_back({-a, -b});
      if (!z.im.is_positive()) ch.push_back({a, -b});
      if (!z.im.is_positive() && !pin) ch.push_back({-a, b});
    }
    if (stale) continue;

    long npat = 1;
    for (int j = 0; j < r; j++) npat *= (long)real_choices[j].size();
    for (int j = 0; j < c; j++) npat *= (long)cplx_choices[j].size();

    bool unresolved = false;
    for (long pat = 0; pat < npat; pat++) {
      long rem = pat;
      std::vector<RInterval> rhs;
      rhs.reserve(n);
      for (int j = 0; j < r; j++) {
        long k = rem % (long)real_choices[j].size();
        rem /= (long)real_choices[j].size();
        rhs.push_back(real_choices[j][k]);
      }
      for (int j = 0; j < c; j++) {
        long k = rem % (long)cplx_choices[j].size();
        rem /= (long)cplx_choices[j].size();
        rhs.push_back(cplx_choices[j][k].first);
        rhs.push_back(cplx_choices[j][k].second);
      }

      // Solve M x = rhs over intervals.
      auto A = M;
      auto b = rhs;
      bool solved = true;
      for (int col = 0; col < n && solved; col++) {
        int bestrow = -1;
        double bestmag = 0;
        for (int row = col; row < n; row++) {
          const RInterval& e = A[row][col];
          if (!(e.is_positive() || e.is_negative())) continue;
          double mag = std::abs(e.mid());
          if (bestrow < 0 || mag > bestmag) {
            bestrow = row;
            bestmag = mag;
          }
        }
        if (bestrow < 0) {
          solved = false;
          break;
        }
        std::swap(A[bestrow], A[col]);
        swap(b[bestrow], b[col]);
        for (int row = col + 1; row < n; row++) {
          if (!(A[row][col].is_positive() || A[row][col].is_negative())) {
            bool zero = true;
            // cheap exactness: only skip when the entry is exactly zero
            zero = mpfr_zero_p(A[row][col].lo_raw()) &&
                   mpfr_zero_p(A[row][col].hi_raw());
            if (zero) continue;
          }
          RInterval f = A[row][col] / A[col][col];
          for (int c2 = col; c2 < n; c2++)
            A[row][c2] = A[row][c2] - f * A[col][c2];
          b[row] = b[row] - f * b[col];
        }
      }
      if (!solved) {
        unresolved = true;
        continue;
      }
      std::vector<RInterval> x(n, RInterval(prec));
      for (int i = n - 1; i >= 0; i--) {
        RInterval acc = b[i];
        for (int j2 = i + 1; j2 < n; j2++) acc = acc - A[i][j2] * x[j2];
        x[i] = acc / A[i][i];
      }

      // Integer extraction per coordinate: the pattern dies if some
      // coordinate contains no integer, stays open if one contains two.
      std::vector<Int> cand(n);
      bool dead = false, ambiguous = false;
      for (int i = 0; i < n; i++) {
        Int lo, hi;
        mpfr_get_z(lo.get_mpz_t(), x[i].lo_raw(), MPFR_RNDU);
        mpfr_get_z(hi.get_mpz_t(), x[i].hi_raw(), MPFR_RNDD);
        if (lo > hi) {
          dead = true;
          break;
        }
        if (lo < hi) {
          ambiguous = true;
          break;
        }
        cand[i] = lo;
      }
      if (dead) continue;
      if (ambiguous) {
        unresolved = true;
        continue;
      }
      FieldElement root = F.from_integral_coords(cand);
      if (F.equal(F.mul(root, root), t))
        return F.mul_rat(root, Rat(1, s.den));
      // unique candidate failed the exact check: pattern is dead
    }
    if (!unresolved) return std::nullopt;
  }
  throw std::runtime_error("sqrt_in_field: precision cap exceeded");
}

std::vector<FieldElement> saturate_at_2(const NumberField& F,
                                        std::vector<FieldElement> gens) {
  for (const auto& g : gens) assert(is_unit(F, g));
  auto [tor, tor_ord] = torsion_units(F);
  (void)tor_ord;
  int k = (int)gens.size();
  assert(k <= 10);
  for (int pass = 0; pass < 200; pass++) {
    bool replaced = false;
    for (long mask = 1; mask < (1L << k) && !replaced; mask++) {
      for (int twist = 0; twist < 2 && !replaced; twist++) {
        FieldElement prod = twist ? tor : F.one();
        for (int i = 0; i < k; i++)
          if (mask & (1L << i)) prod = F.mul(prod, gens[i]);
        auto root = sqrt_in_field(F, prod);
        if (!root) continue;
        // replace the lowest participating generator by the root; the old
        // generator is recovered as root^2 times the others, so the group
        // only grows (index halves each time)
        int i0 = 0;
        while (!(mask & (1L << i0))) i0++;
        gens[i0] = *root;
        replaced = true;
      }
    }
    if (!replaced) return gens;
  }
  throw std::runtime_error("saturate_at_2: did not stabilize");
}

const UnitGroup& unit_group(const NumberField& F) {
  static std::map<const NumberField*, UnitGroup> cache;
  auto it = cache.find(&F);
  if (it != cache.end()) return it->second;

  UnitGroup G;
  G.field = &F;
  auto tg = torsion_units(F);
  G.torsion_gen = tg.first;
  G.torsion_order = tg.second;
  int rank = F.r_real() + F.c_complex() - 1;
  if (rank == 0) return cache.emplace(&F, std::move(G)).first->second;

  if (F.degree() == 2 && F.totally_real()) {
    G.fund.push_back(quadratic_fundamental_unit(F));
    return cache.emplace(&F, std::move(G)).first->second;
  }

  std::vector<FieldElement> sys;
  auto try_insert = [&](const FieldElement& u) {
    if ((int)sys.size() >= rank) return;
    auto ext = sys;
    ext.push_back(u);
    if (independent_units(F, ext)) sys = std::move(ext);
  };

  auto hit = unit_hints().find(F.poly().str());
  if (hit != unit_hints().end()) {
    for (const auto& h : hit->second) {
      std::vector<Int> num(h.num.begin(), h.num.end());
      FieldElement u = F.element(num, h.den);
      assert(is_unit(F, u));
      try_insert(u);
    }
  }

  if ((int)sys.size() < rank) {
    // Fincke-Pohst fallback: enumerate lattice points of growing T2 bound,
    // keep the exact units, and greedily extend to a full independent
    // system.  Candidates are taken in T2 order so the system stays small.
    auto gram = t2_gram(F);
    double bound = 2.0 * F.degree();
    for (int round = 0; round < 40 && (int)sys.size() < rank; round++) {
      std::vector<std::pair<double, std::vector<long>>> found;
      enumerate_qform(gram, bound, [&](const std::vector<long>& v) {
        double q = 0;
        for (size_t i = 0; i < v.size(); i++)
          for (size_t j = 0; j < v.size(); j++)
            q += gram[i][j] * (double)v[i] * (double)v[j];
        found.push_back({q, v});
        return found.size() < 2000000;
      });
      std::sort(found.begin(), found.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [q, v] : found) {
        if ((int)sys.size() >= rank) break;
        std::vector<Int> cvec(v.begin(), v.end());
        FieldElement x = F.from_integral_coords(cvec);
        if (!is_unit(F, x)) continue;
        try_insert(x);
      }
      bound *= 2;
    }
  }
  if ((int)sys.size() != rank)
    throw std::runtime_error("unit_group: could not reach full rank for " +
                             F.poly().str());

  sys = saturate_at_2(F, std::move(sys));
  assert((int)sys.size() == rank);
  assert(independent_units(F, sys));
  for (const auto& u : sys) assert(is_unit(F, u));
  G.fund = std::move(sys);
  return cache.emplace(&F, std::move(G)).first->second;
}

}  // namespace quatinv
