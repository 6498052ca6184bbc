#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "quatinv/ideals.hpp"

using namespace quatinv;

namespace {

// Decomposition shapes computed with an independent implementation and
// frozen.  Each entry is the sorted list of (e, f) above p.
struct DecompRow {
  ZPoly f;
  long p;
  std::vector<std::pair<int, int>> efs;
};

const std::vector<DecompRow> kDecomp = {
    {{-34, 0, 1}, 2, {{2, 1}}},
    {{-34, 0, 1}, 3, {{1, 1}, {1, 1}}},
    {{-34, 0, 1}, 5, {{1, 1}, {1, 1}}},
    {{-34, 0, 1}, 7, {{1, 2}}},
    {{-34, 0, 1}, 17, {{2, 1}}},
    {{-51, 0, 1}, 2, {{2, 1}}},
    {{-51, 0, 1}, 3, {{2, 1}}},
    {{-51, 0, 1}, 5, {{1, 1}, {1, 1}}},
    {{-51, 0, 1}, 17, {{2, 1}}},
    {{1, -1, 0, 1}, 2, {{1, 3}}},
    {{1, -1, 0, 1}, 3, {{1, 3}}},
    {{1, -1, 0, 1}, 5, {{1, 1}, {1, 2}}},
    {{1, -1, 0, 1}, 23, {{1, 1}, {2, 1}}},
    {{8, -2, 1, 1}, 2, {{1, 1}, {1, 1}, {1, 1}}},
    {{8, -2, 1, 1}, 3, {{1, 3}}},
    {{8, -2, 1, 1}, 5, {{1, 1}, {1, 2}}},
    {{8, -2, 1, 1}, 503, {{1, 1}, {2, 1}}},
    {{-1, -6, -1, 1}, 2, {{1, 3}}},
    {{-1, -6, -1, 1}, 3, {{1, 1}, {1, 2}}},
    {{-1, -6, -1, 1}, 761, {{1, 1}, {2, 1}}},
    {{-4, 3, -1, 1}, 2, {{1, 1}, {1, 2}}},
    {{-4, 3, -1, 1}, 3, {{1, 1}, {1, 2}}},
    {{-4, 3, -1, 1}, 13, {{1, 1}, {1, 2}}},
    {{-4, 3, -1, 1}, 331, {{1, 1}, {2, 1}}},
    {{2, -2, -6, 0, 1}, 2, {{4, 1}}},
    {{2, -2, -6, 0, 1}, 5, {{1, 1}, {3, 1}}},
    {{2, -2, -6, 0, 1}, 53, {{1, 1}, {1, 1}, {2, 1}}},
    {{1, -2, -5, 0, 1}, 2, {{2, 2}}},
    {{1, -2, -5, 0, 1}, 13, {{1, 1}, {1, 1}, {1, 2}}},
    {{1, -2, -5, 0, 1}, 359, {{1, 2}, {2, 1}}},
    {{1, 9, 12, 6, 1}, 2, {{1, 4}}},
    {{1, 9, 12, 6, 1}, 5, {{2, 2}}},
    {{1, 9, 12, 6, 1}, 11, {{1, 2}, {2, 1}}},
    {{5, 11, -2, -7, 0, 1}, 2, {{1, 1}, {1, 4}}},
    {{5, 11, -2, -7, 0, 1}, 3, {{1, 5}}},
    {{5, 11, -2, -7, 0, 1}, 5, {{1, 1}, {1, 1}, {1, 3}}},
    {{5, 11, -2, -7, 0, 1}, 149, {{1, 1}, {1, 2}, {2, 1}}},
    {{5, 11, -2, -7, 0, 1}, 1481, {{1, 1}, {1, 2}, {2, 1}}},
    {{1, 0, -4, 4, -1, -2, 1}, 2, {{2, 3}}},
    {{1, 0, -4, 4, -1, -2, 1}, 3, {{1, 2}, {1, 4}}},
    {{1, 0, -4, 4, -1, -2, 1}, 15227, {{1, 4}, {2, 1}}},
    // index divisible by 2 in the last three fields, so p = 2 (and 3 for the
    // second) goes through the kernel-splitting path
    {{1, 0, -10, 0, 1}, 2, {{4, 1}}},
    {{1, 0, -10, 0, 1}, 3, {{2, 2}}},
    {{1, 0, -10, 0, 1}, 5, {{1, 2}, {1, 2}}},
    {{1, 0, -10, 0, 1}, 7, {{1, 2}, {1, 2}}},
    {{4, 0, 0, -2, 0, 0, 1}, 2, {{3, 2}}},
    {{4, 0, 0, -2, 0, 0, 1}, 3, {{6, 1}}},
    {{4, 0, 0, -2, 0, 0, 1}, 5, {{1, 6}}},
};

FieldElement rand_int_elt(const NumberField& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Int> num(F.degree());
  for (auto& v : num) v = d(rng);
  return F.element(std::move(num), 1);
}

}  // namespace

TEST_CASE("prime decomposition shapes") {
  for (const auto& row : kDecomp) {
    CAPTURE(row.f.str());
    CAPTURE(row.p);
    const NumberField& F = NumberField::make(row.f);
    const auto& primes = primes_above(F, Int(row.p));
    std::vector<std::pair<int, int>> efs;
    for (const auto& P : primes) efs.emplace_back(P.e, P.f);
    std::sort(efs.begin(), efs.end());
    CHECK(efs == row.efs);

    Ideal pO = ideal_principal(F, F.from_int(row.p));
    Ideal prod = ideal_whole(F);
    for (const auto& P : primes) {
      // norm and ideal data are consistent
      Int expect = 1;
      for (int i = 0; i < P.f; i++) expect *= row.p;
      CHECK(ideal_norm(P.ideal) == expect);
      CHECK(valuation(pO, P) == P.e);
      CHECK(valuation_elt(F, P.second_gen, P) >= 1);
      CHECK(ideal_equal(ideal_from_gens(F, {F.from_int(row.p), P.second_gen}),
                        P.ideal));
      CHECK(valuation_elt(F, P.anti_unif, P) == -1);
      for (const auto& Q : primes)
        if (&Q != &P) CHECK(valuation_elt(F, P.anti_unif, Q) >= 0);
      prod = ideal_mul(prod, ideal_pow(P.ideal, P.e));
    }
    // product of P^e over all primes above p recovers pO
    CHECK(ideal_equal(prod, pO));
  }
}

TEST_CASE("ideal algebra in a quadratic field") {
  const NumberField& F = NumberField::make(ZPoly{-34, 0, 1});
  FieldElement w = F.gen();

  CHECK(ideal_norm(ideal_whole(F)) == 1);
  CHECK(ideal_norm(ideal_principal(F, w)) == 34);
  CHECK(ideal_norm(ideal_principal(F, F.add(w, F.from_int(6)))) == 2);

  // (w)^2 = (34)
  Ideal w2 = ideal_mul(ideal_principal(F, w), ideal_principal(F, w));
  CHECK(ideal_equal(w2, ideal_principal(F, F.from_int(34))));

  // gcd of (6) and (10) is (2)
  Ideal g = ideal_add(ideal_principal(F, F.from_int(6)),
                      ideal_principal(F, F.from_int(10)));
  CHECK(ideal_equal(g, ideal_principal(F, F.from_int(2))));

  CHECK(ideal_equal(ideal_pow(ideal_principal(F, w), 0), ideal_whole(F)));

  const auto& p2 = primes_above(F, Int(2));
  REQUIRE(p2.size() == 1);
  CHECK(ideal_divides(p2[0].ideal, ideal_principal(F, F.from_int(2))));
  CHECK(!ideal_divides(p2[0].ideal, ideal_whole(F)));
  CHECK(ideal_contains_elt(p2[0].ideal, p2[0].second_gen));
  CHECK(!ideal_contains_elt(p2[0].ideal, F.one()));

  // v((w+6)) = 1 at the ramified prime above 2: w^2 - 36 = -2
  Ideal b = ideal_principal(F, F.add(w, F.from_int(6)));
  CHECK(valuation(b, p2[0]) == 1);

  // w/2 has valuation 1 - 2 = -1 at the ramified prime above 2
  CHECK(valuation_elt(F, F.element({0, 1}, 2), p2[0]) == -1);
}

TEST_CASE("principal ideal norms match element norms") {
  std::mt19937_64 rng(77);
  for (const ZPoly& f : {ZPoly{-34, 0, 1}, ZPoly{1, -1, 0, 1},
                         ZPoly{2, -2, -6, 0, 1}, ZPoly{1, 0, -10, 0, 1},
                         ZPoly{5, 11, -2, -7, 0, 1}}) {
    const NumberField& F = NumberField::make(f);
    for (int t = 0; t < 10; t++) {
      FieldElement a = rand_int_elt(F, rng);
      if (F.is_zero(a)) continue;
      Rat na = F.norm(a);
      REQUIRE(na.get_den() == 1);
      Int abs = na.get_num();
      if (abs < 0) abs = -abs;
      CHECK(ideal_norm(ideal_principal(F, a)) == abs);

      FieldElement b = rand_int_elt(F, rng);
      if (F.is_zero(b)) continue;
      // multiplicativity of the ideal norm
      Ideal ab = ideal_mul(ideal_principal(F, a), ideal_principal(F, b));
      CHECK(ideal_norm(ab) ==
            ideal_norm(ideal_principal(F, a)) * ideal_norm(ideal_principal(F, b)));
      CHECK(ideal_equal(ab, ideal_principal(F, F.mul(a, b))));
    }
  }
}

TEST_CASE("named prime ideals in the fixture fields") {
  // quartic field of discriminant 21200: (w-1) has norm 5
  {
    const NumberField& F = NumberField::make(ZPoly{2, -2, -6, 0, 1});
    Ideal b = ideal_principal(F, F.sub(F.gen(), F.one()));
    CHECK(ideal_norm(b) == 5);
    auto fac = factor_ideal(b);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first.p == 5);
    CHECK(fac[0].first.f == 1);
    CHECK(fac[0].second == 1);
  }
  // quartic field of discriminant 5744: (t^3 - t^2 - 4t) has norm 13
  {
    const NumberField& F = NumberField::make(ZPoly{1, -2, -5, 0, 1});
    FieldElement b = F.parse("w^3-w^2-4*w");
    CHECK(ideal_norm(ideal_principal(F, b)) == 13);
    auto fac = factor_ideal(ideal_principal(F, b));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first.f == 1);
    CHECK(fac[0].second == 1);
  }
  // cubic field of discriminant -331
  {
    const NumberField& F = NumberField::make(ZPoly{-4, 3, -1, 1});
    FieldElement w = F.gen();
    // (2, w) is the degree-one prime above 2
    Ideal p2 = ideal_from_gens(F, {F.from_int(2), w});
    CHECK(ideal_norm(p2) == 2);
    const auto& above2 = primes_above(F, Int(2));
    CHECK(ideal_equal(p2, above2[0].ideal));
    // w - 1 is a unit
    CHECK(ideal_equal(ideal_principal(F, F.sub(w, F.one())), ideal_whole(F)));
    // (w^2 + 1) is the degree-one prime above 13
    Ideal q = ideal_principal(F, F.parse("w^2+1"));
    CHECK(ideal_norm(q) == 13);
    auto fac = factor_ideal(q);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first.f == 1);
    // (w + 1) is the square of the degree-one prime above 3
    Ideal r = ideal_principal(F, F.add(w, F.one()));
    CHECK(ideal_norm(r) == 9);
    auto fac3 = factor_ideal(r);
    REQUIRE(fac3.size() == 1);
    CHECK(fac3[0].first.p == 3);
    CHECK(fac3[0].first.f == 1);
    CHECK(fac3[0].second == 2);
  }
  // quintic field: (w^2 - 3) is the degree-one prime above 2
  {
    const NumberField& F = NumberField::make(ZPoly{5, 11, -2, -7, 0, 1});
    Ideal b = ideal_principal(F, F.parse("w^2-3"));
    CHECK(ideal_norm(b) == 2);
    auto fac = factor_ideal(b);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first.f == 1);
    CHECK(fac[0].second == 1);
  }
  // sextic field: the ideal of norm 12281 from the class group story
  {
    const NumberField& F = NumberField::make(ZPoly{1, 0, -4, 4, -1, -2, 1});
    Ideal b = ideal_principal(F, F.parse("-4*w^5+6*w^4+5*w^3-8*w^2+11*w+1"));
    CHECK(ideal_norm(b) == 12281);
    auto fac = factor_ideal(b);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first.f == 1);
    CHECK(fac[0].second == 1);
  }
  // Dedekind's field: 2 splits completely even though no cubic can split
  // into three distinct linear factors mod 2
  {
    const NumberField& F = NumberField::make(ZPoly{8, -2, 1, 1});
    const auto& above2 = primes_above(F, Int(2));
    REQUIRE(above2.size() == 3);
    std::set<Mat> lattices;
    for (const auto& P : above2) lattices.insert(P.ideal.h);
    CHECK(lattices.size() == 3);
    Ideal prod = ideal_mul(ideal_mul(above2[0].ideal, above2[1].ideal),
                           above2[2].ideal);
    CHECK(ideal_equal(prod, ideal_principal(F, F.from_int(2))));
  }
}

TEST_CASE("factorization roundtrip on random elements") {
  std::mt19937_64 rng(401);
  for (const ZPoly& f :
       {ZPoly{-34, 0, 1}, ZPoly{-4, 3, -1, 1}, ZPoly{2, -2, -6, 0, 1},
        ZPoly{1, 0, -4, 4, -1, -2, 1}}) {
    const NumberField& F = NumberField::make(f);
    for (int t = 0; t < 6; t++) {
      FieldElement a = rand_int_elt(F, rng);
      if (F.is_zero(a)) continue;
      Ideal I = ideal_principal(F, a);
      auto fac = factor_ideal(I);
      Ideal prod = ideal_whole(F);
      for (const auto& [P, v] : fac) {
        CHECK(valuation_elt(F, a, P) == v);
        prod = ideal_mul(prod, ideal_pow(P.ideal, v));
      }
      CHECK(ideal_equal(prod, I));
    }
  }
}

TEST_CASE("residue reduction is a transversal") {
  const NumberField& F = NumberField::make(ZPoly{-34, 0, 1});
  const auto& p7 = primes_above(F, Int(7));
  REQUIRE(p7.size() == 1);
  const Ideal& P = p7[0].ideal;

  std::set<std::vector<Int>> reps;
  for (int a = 0; a < 7; a++)
    for (int b = 0; b < 7; b++)
      reps.insert(ideal_reduce(P, {Int(a), Int(b)}));
  CHECK(reps.size() == 49);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; t++) {
    FieldElement x = rand_int_elt(F, rng);
    FieldElement r = ideal_reduce_elt(P, x);
    // idempotent, and x - r lands in the ideal
    CHECK(F.equal(ideal_reduce_elt(P, r), r));
    CHECK(ideal_contains_elt(P, F.sub(x, r)));
  }
}

TEST_CASE("quadratic residue character") {
  // inert prime, residue field F_49
  {
    const NumberField& F = NumberField::make(ZPoly{-34, 0, 1});
    const PrimeIdeal& P = primes_above(F, Int(7))[0];
    REQUIRE(P.f == 2);
    int squares = 0;
    std::vector<FieldElement> units;
    for (int a = 0; a < 7; a++)
      for (int b = 0; b < 7; b++) {
        if (a == 0 && b == 0) continue;
        FieldElement x = F.element({Int(a), Int(b)}, 1);
        if (ideal_contains_elt(P.ideal, x)) continue;
        units.push_back(x);
        if (residue_legendre(P, x) == 1) squares++;
      }
    CHECK(units.size() == 48);
    CHECK(squares == 24);
    // multiplicative on a sample of pairs
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; t++) {
      const auto& x = units[rng() % units.size()];
      const auto& y = units[rng() % units.size()];
      CHECK(residue_legendre(P, F.mul(x, y)) ==
            residue_legendre(P, x) * residue_legendre(P, y));
    }
  }
  // degree-one primes see the rational Legendre symbol
  {
    const NumberField& F = NumberField::make(ZPoly{2, -2, -6, 0, 1});
    for (const auto& P : primes_above(F, Int(53))) {
      if (P.f != 1) continue;
      for (long a : {2L, 3L, 5L, 6L, 7L, 10L, 52L})
        CHECK(residue_legendre(P, F.from_int(a)) == kronecker(Int(a), Int(53)));
    }
  }
  // squares evaluate to +1 everywhere
  {
    const NumberField& F = NumberField::make(ZPoly{5, 11, -2, -7, 0, 1});
    const PrimeIdeal& P = primes_above(F, Int(3))[0];
    REQUIRE(P.f == 5);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 8; t++) {
      FieldElement x = rand_int_elt(F, rng);
      if (F.is_zero(x) || ideal_contains_elt(P.ideal, x)) continue;
      CHECK(residue_legendre(P, F.mul(x, x)) == 1);
    }
  }
}
