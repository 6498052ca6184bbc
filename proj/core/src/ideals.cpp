#include "quatinv/ideals.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <stdexcept>

#include "quatinv/polyfactor.hpp"

namespace quatinv {

namespace {

Int modp(const Int& a, const Int& p) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::vector<Int> coords_of(const NumberField& F, const FieldElement& x) {
  std::vector<Int> v;
  if (!F.integral_coords(x, v)) throw std::invalid_argument("ideal: element not integral");
  return v;
}

Ideal from_rows(const NumberField& F, Mat rows) {
  Mat h = hnf_rows(std::move(rows));
  if ((int)h.size() != F.degree())
    throw std::invalid_argument("ideal: generators span a rank-deficient lattice");
  return Ideal{&F, std::move(h)};
}

bool mat_less(const Mat& a, const Mat& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); i++)
    for (size_t j = 0; j < a[i].size() && j < b[i].size(); j++) {
      int c = cmp(a[i][j], b[i][j]);
      if (c != 0) return c < 0;
    }
  return false;
}

// Splits pO for p dividing [O : Z[w]], where factoring f mod p says nothing.
// Works inside the finite algebra O/pO: the radical is the kernel of the
// iterated Frobenius, and the etale quotient O/H is split by factoring
// minimal polynomials of its elements.  O/H is a field iff the fixed space
// of x -> x^p on it is one-dimensional.
std::vector<Ideal> split_index_prime(const NumberField& F, const Int& p) {
  const int n = F.degree();
  std::vector<Int> one_coords = coords_of(F, F.one());

  auto mul_vec = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    FieldElement prod = F.mul(F.from_integral_coords(a), F.from_integral_coords(b));
    std::vector<Int> v = coords_of(F, prod);
    for (Int& x : v) x = modp(x, p);
    return v;
  };

  // radical of O/pO: kernel of x -> x^(p^m), p^m >= n
  Int pm = p;
  while (pm < n) pm *= p;
  Mat frob(n);
  for (int i = 0; i < n; i++) {
    std::vector<Int> acc = one_coords, base(n, 0);
    base[i] = 1;
    Int e = pm;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = mul_vec(acc, base);
      e >>= 1;
      if (e > 0) base = mul_vec(base, base);
    }
    frob[i] = acc;
  }
  Mat rad = left_kernel_mod_p(frob, p);
  for (int i = 0; i < n; i++) {
    rad.emplace_back(n, Int(0));
    rad.back()[i] = p;
  }

  std::vector<Mat> queue = {hnf_rows(std::move(rad))};
  std::vector<Ideal> primes;
  std::mt19937_64 rng(0x9d1ea15u ^ mpz_get_ui(p.get_mpz_t()));
  FpCtx fp(p);

  while (!queue.empty()) {
    Mat H = std::move(queue.back());
    queue.pop_back();
    assert((int)H.size() == n);

    std::vector<int> qidx;
    for (int i = 0; i < n; i++) {
      assert(H[i][i] == 1 || H[i][i] == p);
      if (H[i][i] == p) qidx.push_back(i);
    }
    const int d = (int)qidx.size();
    assert(d > 0);

    // elements of A = O/H as coordinates along qidx.  Reduce ascending: row j
    // only touches columns >= j, so earlier coordinates stay put.
    auto rep = [&](std::vector<Int> v) {
      for (int j = 0; j < n; j++) {
        Int q = fdiv(v[j], H[j][j]);
        if (q != 0)
          for (int k = j; k < n; k++) v[k] -= q * H[j][k];
      }
      std::vector<Int> out(d);
      for (int k = 0; k < d; k++) out[k] = v[qidx[k]];
      return out;
    };
    auto lift = [&](const std::vector<Int>& a) {
      std::vector<Int> v(n, 0);
      for (int k = 0; k < d; k++) v[qidx[k]] = a[k];
      return v;
    };
    auto mul_A = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
      return rep(mul_vec(lift(a), lift(b)));
    };
    std::vector<Int> one_A = rep(one_coords);

    // number of field components = dim of the Frobenius fixed space
    Mat fix(d);
    for (int k = 0; k < d; k++) {
      std::vector<Int> acc = one_A, base(d, 0);
      base[k] = 1;
      Int e = p;
      while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mul_A(acc, base);
        e >>= 1;
        if (e > 0) base = mul_A(base, base);
      }
      fix[k] = acc;
      fix[k][k] = modp(fix[k][k] - 1 + p, p);
    }
    if ((int)left_kernel_mod_p(fix, p).size() == 1) {
      primes.push_back(Ideal{&F, std::move(H)});
      continue;
    }

    // split A along the factors of the minimal polynomial of some element
    bool split = false;
    for (int attempt = 0; attempt < 200 && !split; attempt++) {
      std::vector<Int> alpha(d);
      if (attempt < d) {
        alpha[attempt] = 1;
      } else {
        for (int k = 0; k < d; k++)
          alpha[k] = modp(Int(rng()), p);
      }

      Mat pows = {one_A};
      std::vector<Int> cur = one_A;
      FpPoly m;
      for (int k = 1; k <= d; k++) {
        cur = mul_A(cur, alpha);
        pows.push_back(cur);
        Mat kern = left_kernel_mod_p(pows, p);
        if (!kern.empty()) {
          assert(kern.size() == 1 && kern[0][k] != 0);
          Int inv = invmod(kern[0][k], p);
          m.c.resize(k + 1);
          for (int j = 0; j <= k; j++) m.c[j] = modp(kern[0][j] * inv, p);
          break;
        }
      }
      assert(!m.is_zero());
      auto fac = fp.factor(m);
      for (auto& [g, mult] : fac) assert(mult == 1);  // etale algebra
      if (fac.size() < 2) continue;  // alpha does not separate components

      for (auto& [g, mult] : fac) {
        std::vector<Int> z(d, 0);  // g(alpha) by Horner
        for (int j = g.deg(); j >= 0; j--) {
          z = mul_A(z, alpha);
          for (int k = 0; k < d; k++)
            z[k] = modp(z[k] + g.c[j] * one_A[k], p);
        }
        FieldElement ge = F.from_integral_coords(lift(z));
        Mat rows = H;
        for (int i = 0; i < n; i++) {
          std::vector<Int> v = coords_of(F, F.mul(ge, F.basis_element(i)));
          for (Int& x : v) x = modp(x, p);
          rows.push_back(std::move(v));
        }
        queue.push_back(hnf_rows(std::move(rows)));
      }
      split = true;
    }
    assert(split && "no separating element found");
  }
  return primes;
}

using Cache = std::map<std::pair<const NumberField*, Int>, std::vector<PrimeIdeal>>;
Cache& prime_cache() {
  static Cache c;
  return c;
}

}  // namespace

Ideal ideal_whole(const NumberField& F) { return Ideal{&F, mat_identity(F.degree())}; }

Ideal ideal_principal(const NumberField& F, const FieldElement& a) {
  assert(!F.is_zero(a));
  const int n = F.degree();
  Mat rows;
  rows.reserve(n);
  for (int i = 0; i < n; i++) rows.push_back(coords_of(F, F.mul(a, F.basis_element(i))));
  return from_rows(F, std::move(rows));
}

Ideal ideal_from_gens(const NumberField& F, const std::vector<FieldElement>& gens) {
  const int n = F.degree();
  Mat rows;
  rows.reserve(gens.size() * n);
  for (const FieldElement& g : gens) {
    if (F.is_zero(g)) continue;
    for (int i = 0; i < n; i++) rows.push_back(coords_of(F, F.mul(g, F.basis_element(i))));
  }
  return from_rows(F, std::move(rows));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  assert(a.field == b.field);
  return a.h == b.h;
}

Int ideal_norm(const Ideal& a) {
  Int n = 1;
  for (size_t i = 0; i < a.h.size(); i++) n *= a.h[i][i];
  return n;
}

Ideal ideal_mul(const Ideal& a, const Ideal& b) {
  assert(a.field == b.field);
  const NumberField& F = *a.field;
  const int n = F.degree();
  Mat rows;
  rows.reserve(n * n);
  for (int i = 0; i < n; i++) {
    FieldElement ai = F.from_integral_coords(a.h[i]);
    for (int j = 0; j < n; j++)
      rows.push_back(coords_of(F, F.mul(ai, F.from_integral_coords(b.h[j]))));
  }
  return from_rows(F, std::move(rows));
}

Ideal ideal_pow(const Ideal& a, int k) {
  assert(k >= 0);
  Ideal acc = ideal_whole(*a.field), base = a;
  while (k > 0) {
    if (k & 1) acc = ideal_mul(acc, base);
    k >>= 1;
    if (k > 0) base = ideal_mul(base, base);
  }
  return acc;
}

Ideal ideal_add(const Ideal& a, const Ideal& b) {
  assert(a.field == b.field);
  Mat rows = a.h;
  rows.insert(rows.end(), b.h.begin(), b.h.end());
  return from_rows(*a.field, std::move(rows));
}

bool ideal_contains_elt(const Ideal& a, const FieldElement& x) {
  std::vector<Int> v;
  if (!a.field->integral_coords(x, v)) return false;
  return hnf_contains(a.h, v);
}

bool ideal_divides(const Ideal& a, const Ideal& b) {
  assert(a.field == b.field);
  for (const auto& row : b.h)
    if (!hnf_contains(a.h, row)) return false;
  return true;
}

const std::vector<PrimeIdeal>& primes_above(const NumberField& F, const Int& p) {
  auto key = std::make_pair(&F, p);
  auto it = prime_cache().find(key);
  if (it != prime_cache().end()) return it->second;
  assert(is_prime(p));

  const int n = F.degree();
  std::vector<PrimeIdeal> out;

  if (F.index() % p != 0) {
    // Dedekind: factor f mod p, P_i = (p, g_i(w)), e_i = multiplicity
    FpCtx fp(p);
    auto fac = fp.factor(fp.reduce(F.poly()));
    for (auto& [g, mult] : fac) {
      // g(w), reducing mod f when g lifts the whole of f (inert case)
      ZPoly gz = fp.lift(g), q, r;
      pseudo_divmod(gz, F.poly(), q, r);
      std::vector<Int> num(n, 0);
      for (int i = 0; i <= r.deg(); i++) num[i] = r.c[i];
      PrimeIdeal P;
      P.p = p;
      P.e = mult;
      P.f = g.deg();
      P.second_gen = F.element(num, 1);
      if (F.is_zero(P.second_gen)) P.second_gen = F.from_int(p);
      P.ideal = ideal_from_gens(F, {F.from_int(p), P.second_gen});
      Int nrm = ideal_norm(P.ideal), expect = 1;
      for (int i = 0; i < P.f; i++) expect *= p;
      assert(nrm == expect);
      out.push_back(std::move(P));
    }
  } else {
    std::vector<Ideal> lattices = split_index_prime(F, p);
    Ideal pO = ideal_principal(F, F.from_int(p));
    std::mt19937_64 rng(0x5ec0
                        ^ (mpz_get_ui(p.get_mpz_t()) * 0x9e3779b97f4a7c15ULL));
    for (Ideal& L : lattices) {
      PrimeIdeal P;
      P.p = p;
      P.f = 0;
      for (int i = 0; i < n; i++)
        if (L.h[i][i] == p) P.f++;
      P.ideal = std::move(L);
      P.e = 0;
      Ideal J = P.ideal;
      while (ideal_divides(J, pO)) {
        P.e++;
        J = ideal_mul(J, P.ideal);
      }
      assert(P.e >= 1);
      // random element of P with (p, beta) = P
      bool found = false;
      for (int attempt = 0; attempt < 500 && !found; attempt++) {
        std::vector<Int> v(n, 0);
        for (int i = 0; i < n; i++) {
          Int c = modp(Int(rng()), p);
          for (int k = 0; k < n; k++) v[k] += c * P.ideal.h[i][k];
        }
        FieldElement beta = F.from_integral_coords(v);
        if (F.is_zero(beta)) continue;
        Ideal test = ideal_from_gens(F, {F.from_int(p), beta});
        if (ideal_equal(test, P.ideal)) {
          P.second_gen = beta;
          found = true;
        }
      }
      assert(found && "no two-element representation found");
      out.push_back(std::move(P));
    }
  }

  std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.f != b.f) return a.f < b.f;
    return mat_less(a.ideal.h, b.ideal.h);
  });
  int efsum = 0;
  for (const auto& P : out) efsum += P.e * P.f;
  assert(efsum == n);

  // anti-uniformizers: c/p with c in p P^(-1), exact valuation e-1 at P
  std::mt19937_64 rng2(0xa171 ^ (mpz_get_ui(p.get_mpz_t()) * 0x2545f4914f6cdd1dULL));
  for (size_t i = 0; i < out.size(); i++) {
    Ideal J = ideal_whole(F);
    for (size_t j = 0; j < out.size(); j++)
      J = ideal_mul(J, ideal_pow(out[j].ideal, j == i ? out[j].e - 1 : out[j].e));
    Ideal Pe = ideal_pow(out[i].ideal, out[i].e);
    bool found = false;
    for (int attempt = 0; attempt < 500 && !found; attempt++) {
      std::vector<Int> v(n, 0);
      for (int k = 0; k < n; k++) {
        Int c = Int(rng2() % 7) - 3;
        for (int l = 0; l < n; l++) v[l] += c * J.h[k][l];
      }
      FieldElement c = F.from_integral_coords(v);
      if (F.is_zero(c) || ideal_contains_elt(Pe, c)) continue;
      out[i].anti_unif = F.mul_rat(c, Rat(1, p));
      found = true;
    }
    assert(found && "no anti-uniformizer found");
  }

  return prime_cache().emplace(std::move(key), std::move(out)).first->second;
}

int valuation(const Ideal& I, const PrimeIdeal& P) {
  assert(I.field == P.ideal.field);
  int v = 0;
  Ideal J = P.ideal;
  while (ideal_divides(J, I)) {
    v++;
    J = ideal_mul(J, P.ideal);
  }
  return v;
}

int valuation_elt(const NumberField& F, const FieldElement& x, const PrimeIdeal& P) {
  assert(!F.is_zero(x));
  FieldElement y = F.element(x.num, 1);
  int v = 0;
  Ideal J = P.ideal;
  while (ideal_contains_elt(J, y)) {
    v++;
    J = ideal_mul(J, P.ideal);
  }
  Int den = x.den;
  while (den % P.p == 0) {
    den /= P.p;
    v -= P.e;
  }
  return v;
}

std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const Ideal& I) {
  const NumberField& F = *I.field;
  std::vector<std::pair<PrimeIdeal, int>> out;
  Int norm = ideal_norm(I), check = 1;
  for (auto& [p, e] : factor(norm)) {
    for (const PrimeIdeal& P : primes_above(F, p)) {
      int v = valuation(I, P);
      if (v > 0) {
        out.emplace_back(P, v);
        for (int i = 0; i < v * P.f; i++) check *= p;
      }
    }
  }
  assert(check == norm);
  return out;
}

std::vector<Int> ideal_reduce(const Ideal& I, std::vector<Int> coords) {
  const int n = I.field->degree();
  assert((int)coords.size() == n);
  // ascending: row j only touches columns >= j, so the canonical range
  // [0, h[j][j]) reached at step j survives the later steps
  for (int j = 0; j < n; j++) {
    Int q = fdiv(coords[j], I.h[j][j]);
    if (q != 0)
      for (int k = j; k < n; k++) coords[k] -= q * I.h[j][k];
  }
  return coords;
}

FieldElement ideal_reduce_elt(const Ideal& I, const FieldElement& x) {
  return I.field->from_integral_coords(ideal_reduce(I, coords_of(*I.field, x)));
}

int residue_legendre(const PrimeIdeal& P, const FieldElement& x) {
  const NumberField& F = *P.ideal.field;
  assert(P.p != 2);
  assert(F.is_integral(x));
  assert(!ideal_contains_elt(P.ideal, x));

  auto mulP = [&](const FieldElement& a, const FieldElement& b) {
    return ideal_reduce_elt(P.ideal, F.mul(a, b));
  };
  Int q = 1;
  for (int i = 0; i < P.f; i++) q *= P.p;
  Int e = (q - 1) / 2;
  FieldElement acc = ideal_reduce_elt(P.ideal, F.one());
  FieldElement base = ideal_reduce_elt(P.ideal, x);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mulP(acc, base);
    e >>= 1;
    if (e > 0) base = mulP(base, base);
  }
  FieldElement one_r = ideal_reduce_elt(P.ideal, F.one());
  FieldElement neg_r = ideal_reduce_elt(P.ideal, F.from_int(-1));
  if (F.equal(acc, one_r)) return 1;
  assert(F.equal(acc, neg_r));
  return -1;
}

}  // namespace quatinv
