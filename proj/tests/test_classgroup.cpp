#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quatinv/classgroup.hpp"
#include "quatinv/units.hpp"

using namespace quatinv;

namespace {

const NumberField& field(std::initializer_list<long> co) {
  return NumberField::make(ZPoly(co));
}

// F2 rank of the sign image of the unit group at all real places
int unit_sign_rank(const NumberField& F) {
  const UnitGroup& U = unit_group(F);
  std::vector<FieldElement> units = U.fund;
  units.push_back(U.torsion_gen);
  int r = F.r_real();
  std::vector<std::vector<int>> rows;
  for (const auto& u : units) {
    std::vector<int> row(r);
    auto sg = F.real_signs(u);
    for (int j = 0; j < r; j++) row[j] = sg[j] < 0 ? 1 : 0;
    rows.push_back(row);
  }
  int rank = 0;
  for (int col = 0; col < r; col++) {
    int sel = -1;
    for (size_t i = rank; i < rows.size(); i++)
      if (rows[i][col]) {
        sel = (int)i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[sel], rows[rank]);
    for (size_t i = 0; i < rows.size(); i++)
      if ((int)i != rank && rows[i][col])
        for (int j = 0; j < r; j++) rows[i][j] ^= rows[rank][j];
    rank++;
  }
  return rank;
}

}  // namespace

TEST_CASE("factor bases stop at the Minkowski bound") {
  const auto& cg34 = class_group(field({-34, 0, 1}));
  // bound 5.83: one ramified prime above 2, split pairs above 3 and 5
  CHECK(cg34.bound == 5);
  CHECK(cg34.base.size() == 5);

  const auto& cg331 = class_group(field({-4, 3, -1, 1}));
  // bound 5.15: norms 2 and 4 above 2, one norm 3 above 3
  CHECK(cg331.bound == 5);
  CHECK(cg331.base.size() == 3);

  const auto& cgim3 = class_group(field({3, 0, 1}));
  CHECK(cgim3.base.empty());
  CHECK(cgim3.cl.order() == 1);
}

TEST_CASE("class numbers of the working fields") {
  struct Case {
    std::vector<long> f;
    long h;
  };
  std::vector<Case> cases = {
      {{-34, 0, 1}, 2},          {{-51, 0, 1}, 2},
      {{3, 0, 1}, 1},            {{1, -1, 0, 1}, 1},
      {{-4, 3, -1, 1}, 2},       {{8, -2, 1, 1}, 1},
      {{-1, -6, -1, 1}, 1},      {{2, -2, -6, 0, 1}, 1},
      {{1, -2, -5, 0, 1}, 1},    {{1, 0, -10, 0, 1}, 1},
      {{5, 11, -2, -7, 0, 1}, 1},
      {{1, 0, -4, 4, -1, -2, 1}, 1},
  };
  for (const auto& c : cases) {
    const NumberField& F = NumberField::make(ZPoly(std::vector<Int>(
        c.f.begin(), c.f.end())));
    CAPTURE(F.poly().str());
    CHECK(class_group(F).cl.order() == c.h);
  }
}

TEST_CASE("principality decisions carry certificates") {
  const NumberField& F = field({-34, 0, 1});
  // norm-2 prime is generated by 6 + sqrt(34)
  Ideal p2 = ideal_principal(F, F.element({6, 1}));
  CHECK(ideal_norm(p2) == 2);
  auto chk = is_principal(F, p2);
  REQUIRE(chk.principal);
  Rat n = F.norm(chk.gen);
  CHECK((n == 2 || n == -2));

  // a norm-3 prime is not principal: x^2 - 34 y^2 = +-3 fails mod 17
  const auto& cg = class_group(F);
  const PrimeIdeal* p3 = nullptr;
  for (const auto& P : cg.base)
    if (P.p == 3) {
      p3 = &P;
      break;
    }
  REQUIRE(p3 != nullptr);
  CHECK_FALSE(is_principal(F, p3->ideal).principal);
  // its class generates the order-2 group
  auto d = class_dlog(cg, p3->ideal);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == 1);
  // and its square is principal
  CHECK(is_principal(F, ideal_pow(p3->ideal, 2)).principal);
}

TEST_CASE("class logarithms are homomorphic") {
  const NumberField& F = field({-4, 3, -1, 1});
  const auto& cg = class_group(F);
  REQUIRE(cg.cl.order() == 2);
  // the two primes above 2 are in the same nontrivial class, since their
  // product (2) is principal
  Ideal q2 = cg.base[0].ideal, q4 = cg.base[1].ideal;
  CHECK(ideal_norm(q2) == 2);
  CHECK(ideal_norm(q4) == 4);
  auto d2 = class_dlog(cg, q2), d4 = class_dlog(cg, q4);
  CHECK(d2 == d4);
  CHECK(d2[0] == 1);
  CHECK(class_dlog(cg, ideal_mul(q2, q4))[0] == 0);

  // an out-of-base prime: norm 13 above 13
  Ideal q13 = ideal_principal(F, F.element({1, 0, 1}));
  CHECK(ideal_norm(q13) == 13);
  CHECK(class_dlog(cg, q13)[0] == 0);  // visibly principal
}

TEST_CASE("smooth reduction reassembles the ideal") {
  const NumberField& F = field({-4, 3, -1, 1});
  const auto& cg = class_group(F);
  // norm-9 prime, outside the base
  Ideal I = ideal_from_gens(F, {F.from_int(3), F.element({2, 1, 1})});
  CHECK(ideal_norm(I) == 9);
  auto d = smooth_decomp(cg, I);
  // check I * prod(p^-v) == (gen) as ideals
  Ideal lhs = I, rhs = ideal_principal(F, d.gen);
  for (size_t i = 0; i < cg.base.size(); i++) {
    Int e = d.v[i];
    if (e > 0)
      rhs = ideal_mul(rhs, ideal_pow(cg.base[i].ideal, e.get_ui()));
    else if (e < 0)
      lhs = ideal_mul(lhs, ideal_pow(cg.base[i].ideal, Int(-e).get_ui()));
  }
  CHECK(ideal_equal(lhs, rhs));
}

TEST_CASE("narrow class groups of the working fields") {
  // (field, |Cl|, |Cl+|)
  struct Case {
    std::vector<long> f;
    long h, hplus;
  };
  std::vector<Case> cases = {
      {{-34, 0, 1}, 2, 4},       {{-51, 0, 1}, 2, 4},
      {{-4, 3, -1, 1}, 2, 2},    {{-1, -6, -1, 1}, 1, 2},
      {{2, -2, -6, 0, 1}, 1, 2}, {{1, -2, -5, 0, 1}, 1, 2},
      {{5, 11, -2, -7, 0, 1}, 1, 2},
      {{1, 0, -4, 4, -1, -2, 1}, 1, 2},
  };
  for (const auto& c : cases) {
    const NumberField& F = NumberField::make(ZPoly(std::vector<Int>(
        c.f.begin(), c.f.end())));
    CAPTURE(F.poly().str());
    const auto& cg = class_group(F);
    auto nw = narrow_class_group(cg);
    CHECK(cg.cl.order() == c.h);
    CHECK(nw.group.order() == c.hplus);
    // independent consistency: |Cl+| = |Cl| 2^r / |sign image of units|
    Int expect = cg.cl.order() << F.r_real();
    expect >>= unit_sign_rank(F);
    CHECK(nw.group.order() == expect);
  }
  // narrow group of the totally real quadratic is cyclic of order 4
  auto nw34 = narrow_class_group(class_group(field({-34, 0, 1})));
  REQUIRE(nw34.group.cyc.size() == 1);
  CHECK(nw34.group.cyc[0] == 4);
}

TEST_CASE("narrow classes separate ideals that plain classes cannot") {
  // disc 21200 quartic: trivial class group, narrow group of order 2
  const NumberField& F = field({2, -2, -6, 0, 1});
  const auto& cg = class_group(F);
  auto nw = narrow_class_group(cg);
  REQUIRE(nw.group.order() == 2);

  // (w - 1), norm 5: the nontrivial narrow class
  Ideal b = ideal_principal(F, F.element({-1, 1, 0, 0}));
  CHECK(ideal_norm(b) == 5);
  auto db = ray_dlog(nw, b);
  REQUIRE(db.size() == 1);
  CHECK(db[0] == 1);
  std::vector<int> all_places = {0, 1, 2, 3};
  CHECK_FALSE(principal_gen_positive_at(cg, b, all_places).has_value());

  // (w), norm 2: narrowly principal, with a totally positive generator
  Ideal dd = ideal_principal(F, F.gen());
  CHECK(ideal_norm(dd) == 2);
  CHECK(ray_dlog(nw, dd)[0] == 0);
  auto g = principal_gen_positive_at(cg, dd, all_places);
  REQUIRE(g.has_value());
  CHECK(F.totally_positive(*g));
  CHECK(ideal_equal(ideal_principal(F, *g), dd));

  // contrast: in the quartic of discriminant 5744 the norm-13 prime picks up
  // the sign pattern of the unit t^3 - t^2 - 3t - 1, so it is narrowly
  // principal even though its obvious generator is not totally positive
  const NumberField& K = field({1, -2, -5, 0, 1});
  const auto& cgK = class_group(K);
  auto nwK = narrow_class_group(cgK);
  REQUIRE(nwK.group.order() == 2);
  FieldElement b13gen = K.element({0, -4, -1, 1});
  CHECK_FALSE(K.totally_positive(b13gen));
  Ideal b13 = ideal_principal(K, b13gen);
  CHECK(ideal_norm(b13) == 13);
  CHECK(ray_dlog(nwK, b13)[0] == 0);
  auto g13 = principal_gen_positive_at(cgK, b13, all_places);
  REQUIRE(g13.has_value());
  CHECK(K.totally_positive(*g13));
  CHECK(ideal_equal(ideal_principal(K, *g13), b13));

  // quintic: nontrivial narrow class of the norm-2 prime (w^2 - 3)
  const NumberField& Q = field({5, 11, -2, -7, 0, 1});
  const auto& cgQ = class_group(Q);
  auto nwQ = narrow_class_group(cgQ);
  Ideal bQ = ideal_principal(Q, Q.element({-3, 0, 1, 0, 0}));
  CHECK(ideal_norm(bQ) == 2);
  CHECK(ray_dlog(nwQ, bQ)[0] == 1);

  // sextic: the designated prime of norm 12281
  const NumberField& S = field({1, 0, -4, 4, -1, -2, 1});
  const auto& cgS = class_group(S);
  auto nwS = narrow_class_group(cgS);
  Ideal bS = ideal_principal(S, S.element({1, 11, -8, 5, 6, -4}));
  CHECK(ideal_norm(bS) == 12281);
  CHECK(ray_dlog(nwS, bS)[0] == 1);
}

TEST_CASE("a nearby class in the narrow group of the second quadratic") {
  // disc 204: [(w - 7)] and [(w)] agree narrowly
  const NumberField& F = field({-51, 0, 1});
  const auto& cg = class_group(F);
  auto nw = narrow_class_group(cg);
  REQUIRE(nw.group.order() == 4);
  Ideal a = ideal_principal(F, F.element({-7, 1}));
  Ideal b = ideal_principal(F, F.gen());
  CHECK(ideal_norm(a) == 2);
  CHECK(ideal_norm(b) == 51);
  CHECK(ray_dlog(nw, a) == ray_dlog(nw, b));
}

TEST_CASE("ray groups with partial sign conditions") {
  // totally real cubic of discriminant 761: unit signs reach only a rank-2
  // subspace, so the full narrow group doubles the class group, while the
  // ray group at the single split place is trivial
  const NumberField& F = field({-1, -6, -1, 1});
  const auto& cg = class_group(F);
  CHECK(cg.cl.order() == 1);
  CHECK(narrow_class_group(cg).group.order() == 2);
  // w is positive exactly at the third ascending real place
  auto sg = F.real_signs(F.gen());
  REQUIRE(sg.size() == 3);
  CHECK(sg[0] < 0);
  CHECK(sg[1] < 0);
  CHECK(sg[2] > 0);
  auto ray2 = ray_class_group(cg, {2});
  CHECK(ray2.group.order() == 1);
  // empty sign set reproduces the class group
  auto ray0 = ray_class_group(cg, {});
  CHECK(ray0.group.order() == cg.cl.order());
}
