#include "quatinv/classgroup.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "quatinv/lattice.hpp"
#include "quatinv/units.hpp"

namespace quatinv {

namespace {

// T2 ceiling for a generator after reduction into the fundamental domain
// of the unit-log action: each log coordinate sits within half the sum of
// the unit log magnitudes of the balanced point.  Inflated; the cost of a
// generous bound is enumeration time, not correctness.
double unit_domain_bound(const NumberField& F, const Int& N) {
  const UnitGroup& U = unit_group(F);
  int r = F.r_real(), c = F.c_complex();
  int m = r + c;
  std::vector<double> h(m, 0.0);
  for (const auto& u : U.fund) {
    for (int j = 0; j < r; j++)
      h[j] += 0.5 * std::abs(std::log(std::abs(F.embed_real(u, j, 192).mid())));
    for (int j = 0; j < c; j++) {
      CInterval z = F.embed_complex(u, r + j, 192);
      double a2 = z.abs_sq().mid();
      h[r + j] += 0.25 * std::abs(std::log(a2));
    }
  }
  double t = std::log(N.get_d()) / F.degree();
  double b = 0;
  for (int j = 0; j < r; j++) b += std::exp(2 * (t + h[j]));
  for (int j = 0; j < c; j++) b += 2 * std::exp(2 * (t + h[r + j]));
  return b * 1.1 + 1.0;
}

FieldElement element_from_row_combo(const NumberField& F, const Mat& rows,
                                    const std::vector<long>& cvec) {
  int n = F.degree();
  std::vector<Int> coords(n, 0);
  for (size_t k = 0; k < cvec.size(); k++) {
    if (cvec[k] == 0) continue;
    for (int j = 0; j < n; j++) coords[j] += Int(cvec[k]) * rows[k][j];
  }
  return F.from_integral_coords(coords);
}

int base_index(const std::vector<PrimeIdeal>& base, const PrimeIdeal& P) {
  for (size_t i = 0; i < base.size(); i++)
    if (base[i].p == P.p && base[i].e == P.e && base[i].f == P.f &&
        ideal_equal(base[i].ideal, P.ideal))
      return (int)i;
  return -1;
}

// Shift v by relation-lattice vectors into the box below the HNF pivots,
// which in particular makes every entry nonnegative.
std::vector<Int> reduce_to_box(const Mat& hnf, std::vector<Int> v) {
  size_t n = v.size();
  assert(hnf.size() == n);
  for (size_t j = 0; j < n; j++) {
    const Int& piv = hnf[j][j];
    assert(piv > 0);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v[j].get_mpz_t(), piv.get_mpz_t());
    if (q != 0)
      for (size_t t = j; t < n; t++) v[t] -= q * hnf[j][t];
  }
  return v;
}

}  // namespace

PrincipalCheck is_principal(const NumberField& F, const Ideal& I) {
  Int N = ideal_norm(I);
  if (N == 1) return {true, F.one()};
  double bound = unit_domain_bound(F, N);
  auto gram = t2_gram_rows(F, I.h);
  PrincipalCheck out;
  enumerate_qform(gram, bound, [&](const std::vector<long>& c) {
    FieldElement x = element_from_row_combo(F, I.h, c);
    Rat nr = F.norm(x);
    assert(nr.get_den() == 1);
    Int nz = nr.get_num();
    if (nz < 0) nz = -nz;
    if (nz == N) {
      out.principal = true;
      out.gen = x;
      return false;
    }
    return true;
  });
  return out;
}

const ClassGroupData& class_group(const NumberField& F) {
  static std::map<const NumberField*, ClassGroupData> cache;
  auto it = cache.find(&F);
  if (it != cache.end()) return it->second;

  ClassGroupData cg;
  cg.field = &F;
  int n = F.degree(), c = F.c_complex();
  double fact = 1;
  for (int i = 2; i <= n; i++) fact *= i;
  double md = std::sqrt(std::abs(F.disc().get_d())) *
              std::pow(4.0 / 3.14159265358979323846, c) * fact /
              std::pow((double)n, n);
  cg.bound = Int((long)std::floor(md + 1e-6));

  for (uint32_t p : primes_upto(cg.bound.get_ui() < 2 ? 2 : (uint32_t)cg.bound.get_ui())) {
    if (Int(p) > cg.bound) break;
    for (const auto& P : primes_above(F, Int(p))) {
      Int np = ideal_norm(P.ideal);
      if (np <= cg.bound) cg.base.push_back(P);
    }
  }
  int k = (int)cg.base.size();

  if (k == 0) {
    cg.cl = abelian_from_relations(0, {});
    cache.emplace(&F, std::move(cg));
    return cache.at(&F);
  }

  // Relation harvest: factor small elements over the base, growing the
  // search radius until the presented group is finite, then certify every
  // residual class by an exact principality decision.
  std::set<std::vector<Int>> seen;
  Mat rows;
  std::vector<FieldElement> gens;
  Mat id_rows;
  for (int i = 0; i < n; i++) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    id_rows.push_back(e);
  }
  auto gram0 = t2_gram_rows(F, id_rows);

  auto harvest = [&](double bound) {
    enumerate_qform(gram0, bound, [&](const std::vector<long>& cv) {
      FieldElement x = element_from_row_combo(F, id_rows, cv);
      Rat nr = F.norm(x);
      Int nz = nr.get_num();
      if (nz < 0) nz = -nz;
      if (nz == 0) return true;
      if (nz == 1) return true;  // unit, empty relation
      bool smooth = true;
      for (const auto& [p, e] : factor(nz))
        if (p > cg.bound) {
          smooth = false;
          break;
        }
      if (!smooth) return true;
      std::vector<Int> row(k, 0);
      bool base_smooth = true;
      for (const auto& [P, e] : factor_ideal(ideal_principal(F, x))) {
        int idx = base_index(cg.base, P);
        if (idx < 0) {
          base_smooth = false;
          break;
        }
        row[idx] = e;
      }
      if (!base_smooth) return true;
      if (seen.insert(row).second) {
        rows.push_back(row);
        gens.push_back(x);
      }
      return true;
    });
  };

  double bound = 2.0 * n + 4.0;
  bool have_group = false;
  AbelianGroup G;
  for (int round = 0; round < 30 && !have_group; round++) {
    harvest(bound);
    bound *= 2;
    try {
      G = abelian_from_relations(k, rows);
      have_group = true;
    } catch (const std::invalid_argument&) {
    }
  }
  if (!have_group)
    throw std::runtime_error("class_group: relation search stalled for " +
                             F.poly().str());

  // Certification loop.  Any class that is secretly principal yields a new
  // relation and strictly shrinks the group, so this terminates.
  for (bool dirty = true; dirty;) {
    dirty = false;
    assert(G.order() <= 10000);
    std::vector<Int> counter(G.cyc.size(), 0);
    Mat rel_hnf = hnf_rows(rows);
    assert((int)rel_hnf.size() == k);
    while (true) {
      // advance mixed-radix counter; all-zero tuple is the identity
      size_t pos = 0;
      while (pos < counter.size()) {
        counter[pos] += 1;
        if (counter[pos] < G.cyc[pos]) break;
        counter[pos] = 0;
        pos++;
      }
      if (pos >= counter.size()) break;
      std::vector<Int> v(k, 0);
      for (size_t i = 0; i < counter.size(); i++)
        for (int j = 0; j < k; j++)
          v[j] += counter[i] * G.from_cyc[G.cyc_cols[i]][j];
      v = reduce_to_box(rel_hnf, v);
      Ideal I = ideal_whole(F);
      for (int j = 0; j < k; j++)
        if (v[j] > 0)
          I = ideal_mul(I, ideal_pow(cg.base[j].ideal, v[j].get_ui()));
      auto chk = is_principal(F, I);
      if (chk.principal) {
        if (seen.insert(v).second) {
          rows.push_back(v);
          gens.push_back(chk.gen);
        }
        G = abelian_from_relations(k, rows);
        dirty = true;
        break;
      }
    }
  }

  cg.cl = G;
  cg.rel_hnf = hnf_rows(rows);
  for (size_t i = 0; i < rows.size(); i++) cg.rels.push_back({rows[i], gens[i]});
  cache.emplace(&F, std::move(cg));
  return cache.at(&F);
}

SmoothDecomp smooth_decomp(const ClassGroupData& cg, const Ideal& I) {
  const NumberField& F = *cg.field;
  int k = (int)cg.base.size();
  Int NI = ideal_norm(I);

  // already smooth?
  {
    bool ok = true;
    std::vector<Int> v(k, 0);
    if (NI == 1) return {F.one(), v};
    for (const auto& [P, e] : factor_ideal(I)) {
      int idx = base_index(cg.base, P);
      if (idx < 0) {
        ok = false;
        break;
      }
      v[idx] = e;
    }
    if (ok) return {F.one(), v};
  }

  auto gram = t2_gram_rows(F, I.h);
  double bound = 1.3 * F.degree() * std::pow(NI.get_d(), 2.0 / F.degree()) + 2;
  for (int round = 0; round < 24; round++) {
    SmoothDecomp out;
    bool found = false;
    enumerate_qform(gram, bound, [&](const std::vector<long>& cv) {
      FieldElement x = element_from_row_combo(F, I.h, cv);
      Rat nr = F.norm(x);
      Int nz = nr.get_num();
      if (nz < 0) nz = -nz;
      if (nz == 0) return true;
      Int M = nz / NI;
      for (const auto& [p, e] : factor(M))
        if (p > cg.bound) return true;
      // cofactor (x) I^{-1} factors over small primes; check it lands in
      // the base and collect exponents
      std::vector<Int> v(k, 0);
      for (const auto& [P, e] : factor_ideal(ideal_principal(F, x))) {
        int ej = e - valuation(I, P);
        assert(ej >= 0);
        if (ej == 0) continue;
        int idx = base_index(cg.base, P);
        if (idx < 0) return true;
        v[idx] = -ej;
      }
      out.gen = x;
      out.v = v;
      found = true;
      return false;
    });
    if (found) return out;
    bound *= 2;
  }
  throw std::runtime_error("smooth_decomp: no smooth reduction found");
}

std::vector<Int> class_dlog(const ClassGroupData& cg, const Ideal& I) {
  auto d = smooth_decomp(cg, I);
  return ab_dlog(cg.cl, d.v);
}

RayClassGroup ray_class_group(const ClassGroupData& cg,
                              const std::vector<int>& T) {
  const NumberField& F = *cg.field;
  int k = (int)cg.base.size();
  int s = (int)T.size();
  for (int j : T) assert(j >= 0 && j < F.r_real());

  auto sign_bits = [&](const FieldElement& x) {
    std::vector<Int> bits(s, 0);
    for (int j = 0; j < s; j++)
      if (F.sign_at(x, T[j]) < 0) bits[j] = 1;
    return bits;
  };

  Mat rows;
  for (const auto& [v, g] : cg.rels) {
    std::vector<Int> row = v;
    auto bits = sign_bits(g);
    row.insert(row.end(), bits.begin(), bits.end());
    rows.push_back(row);
  }
  for (int j = 0; j < s; j++) {
    std::vector<Int> row(k + s, 0);
    row[k + j] = 2;
    rows.push_back(row);
  }
  const UnitGroup& U = unit_group(F);
  std::vector<FieldElement> units = U.fund;
  units.push_back(U.torsion_gen);
  for (const auto& u : units) {
    std::vector<Int> row(k, 0);
    auto bits = sign_bits(u);
    row.insert(row.end(), bits.begin(), bits.end());
    rows.push_back(row);
  }

  RayClassGroup rg;
  rg.cg = &cg;
  rg.places = T;
  rg.group = abelian_from_relations(k + s, rows);
  return rg;
}

RayClassGroup narrow_class_group(const ClassGroupData& cg) {
  std::vector<int> T(cg.field->r_real());
  for (size_t j = 0; j < T.size(); j++) T[j] = (int)j;
  return ray_class_group(cg, T);
}

std::vector<Int> ray_dlog(const RayClassGroup& rg, const Ideal& I) {
  const ClassGroupData& cg = *rg.cg;
  const NumberField& F = *cg.field;
  auto d = smooth_decomp(cg, I);
  std::vector<Int> coords = d.v;
  for (int j : rg.places)
    coords.push_back(F.sign_at(d.gen, j) < 0 ? 1 : 0);
  return ab_dlog(rg.group, coords);
}

std::optional<FieldElement> principal_gen_positive_at(
    const ClassGroupData& cg, const Ideal& I, const std::vector<int>& T) {
  const NumberField& F = *cg.field;
  auto chk = is_principal(F, I);
  if (!chk.principal) return std::nullopt;
  int s = (int)T.size();
  if (s == 0) return chk.gen;

  const UnitGroup& U = unit_group(F);
  std::vector<FieldElement> units = U.fund;
  units.push_back(U.torsion_gen);
  int m = (int)units.size();

  // solve sum eps_u * sgn(u) = sgn(gen) over F2
  std::vector<std::vector<int>> A(s, std::vector<int>(m + 1, 0));
  for (int i = 0; i < s; i++) {
    for (int j = 0; j < m; j++)
      A[i][j] = F.sign_at(units[j], T[i]) < 0 ? 1 : 0;
    A[i][m] = F.sign_at(chk.gen, T[i]) < 0 ? 1 : 0;
  }
  std::vector<int> pivot_col(s, -1);
  int rank = 0;
  for (int col = 0; col < m && rank < s; col++) {
    int sel = -1;
    for (int row = rank; row < s; row++)
      if (A[row][col]) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[sel], A[rank]);
    for (int row = 0; row < s; row++)
      if (row != rank && A[row][col])
        for (int t = col; t <= m; t++) A[row][t] ^= A[rank][t];
    pivot_col[rank] = col;
    rank++;
  }
  for (int row = rank; row < s; row++)
    if (A[row][m]) return std::nullopt;  // inconsistent: class not ray-trivial

  FieldElement g = chk.gen;
  for (int row = 0; row < rank; row++)
    if (A[row][m]) g = F.mul(g, units[pivot_col[row]]);
  for (int j : T) assert(F.sign_at(g, j) > 0);
  return g;
}

}  // namespace quatinv
