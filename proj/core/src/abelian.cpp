#include "quatinv/abelian.hpp"

#include <cassert>
#include <stdexcept>

namespace quatinv {

namespace {

Int modp(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Int AbelianGroup::order() const {
  Int o = 1;
  for (const auto& d : cyc) o *= d;
  return o;
}

int AbelianGroup::rank2() const {
  int r = 0;
  for (const auto& d : cyc)
    if (d % 2 == 0) r++;
  return r;
}

AbelianGroup abelian_from_relations(int ngens, const Mat& rels) {
  assert(ngens >= 0);
  if (ngens == 0) return {};
  Mat a = rels;
  if (a.empty()) a.push_back(std::vector<Int>(ngens, 0));
  for (const auto& row : a) assert((int)row.size() == ngens);
  Mat u, v, d;
  snf(a, u, v, d);
  AbelianGroup g;
  g.ngens = ngens;
  g.to_cyc = v;
  Int det = mat_det(v);
  assert(det == 1 || det == -1);
  g.from_cyc = mat_adjugate(v);
  if (det == -1)
    for (auto& row : g.from_cyc)
      for (auto& x : row) x = -x;
  for (int j = 0; j < ngens; j++) {
    Int dj = ((int)d.size() > j && (int)d[j].size() > j) ? d[j][j] : Int(0);
    if (dj == 0)
      throw std::invalid_argument("abelian_from_relations: group is infinite");
    if (dj > 1) {
      g.cyc.push_back(dj);
      g.cyc_cols.push_back(j);
    }
  }
  return g;
}

std::vector<Int> ab_dlog(const AbelianGroup& g, const std::vector<Int>& v) {
  assert((int)v.size() == g.ngens);
  if (g.ngens == 0) return {};
  std::vector<Int> y = vec_mat(v, g.to_cyc);
  std::vector<Int> out(g.cyc.size());
  for (size_t i = 0; i < g.cyc.size(); i++)
    out[i] = modp(y[g.cyc_cols[i]], g.cyc[i]);
  return out;
}

bool ab_is_identity(const AbelianGroup& g, const std::vector<Int>& v) {
  for (const auto& x : ab_dlog(g, v))
    if (x != 0) return false;
  return true;
}

Int ab_element_order(const AbelianGroup& g, const std::vector<Int>& v) {
  std::vector<Int> y = ab_dlog(g, v);
  Int ord = 1;
  for (size_t i = 0; i < g.cyc.size(); i++) {
    Int gcd_, per;
    mpz_gcd(gcd_.get_mpz_t(), y[i].get_mpz_t(), g.cyc[i].get_mpz_t());
    per = g.cyc[i] / gcd_;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), per.get_mpz_t());
  }
  return ord;
}

std::vector<std::vector<Int>> ab_two_torsion_basis(const AbelianGroup& g) {
  std::vector<std::vector<Int>> out;
  for (size_t i = 0; i < g.cyc.size(); i++) {
    if (g.cyc[i] % 2 != 0) continue;
    Int half = g.cyc[i] / 2;
    std::vector<Int> x(g.ngens, 0);
    for (int j = 0; j < g.ngens; j++)
      x[j] = half * g.from_cyc[g.cyc_cols[i]][j];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::vector<Int>> ab_two_torsion_elements(const AbelianGroup& g) {
  auto basis = ab_two_torsion_basis(g);
  int k = (int)basis.size();
  assert(k <= 20);
  std::vector<std::vector<Int>> out;
  for (long mask = 0; mask < (1L << k); mask++) {
    std::vector<Int> x(g.ngens, 0);
    for (int i = 0; i < k; i++)
      if (mask & (1L << i))
        for (int j = 0; j < g.ngens; j++) x[j] += basis[i][j];
    out.push_back(std::move(x));
  }
  return out;
}

AbelianGroup ab_quotient(const AbelianGroup& g,
                         const std::vector<std::vector<Int>>& elts) {
  // relation lattice of g in generator coordinates: d_j times row j of the
  // inverse basis change
  Mat rels;
  for (int j = 0; j < g.ngens; j++) {
    Int dj = 1;
    for (size_t i = 0; i < g.cyc.size(); i++)
      if (g.cyc_cols[i] == j) dj = g.cyc[i];
    std::vector<Int> row(g.ngens);
    for (int t = 0; t < g.ngens; t++) row[t] = dj * g.from_cyc[j][t];
    rels.push_back(std::move(row));
  }
  for (const auto& e : elts) {
    assert((int)e.size() == g.ngens);
    rels.push_back(e);
  }
  return abelian_from_relations(g.ngens, rels);
}

bool ab_in_subgroup(const AbelianGroup& g,
                    const std::vector<std::vector<Int>>& elts,
                    const std::vector<Int>& v) {
  return ab_is_identity(ab_quotient(g, elts), v);
}

}  // namespace quatinv
