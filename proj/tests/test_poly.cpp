#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quatinv/polyfactor.hpp"

using namespace quatinv;

TEST_CASE("discriminants of known polynomials") {
  CHECK(discriminant(ZPoly{-34, 0, 1}) == 136);
  CHECK(discriminant(ZPoly{1, 1, 1}) == -3);
  CHECK(discriminant(ZPoly{-1, -1, 0, 1}) == -23);
  CHECK(discriminant(ZPoly{-1, 1, 0, 1}) == -31);
  // ax^2+bx+c has discriminant b^2-4ac
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    long a = (long)(rng() % 19) - 9, b = (long)(rng() % 19) - 9,
         c = (long)(rng() % 19) - 9;
    if (a == 0) continue;
    CHECK(discriminant(ZPoly{c, b, a}) == Int(b) * b - 4 * Int(a) * c);
  }
  // x^3+px+q has discriminant -4p^3-27q^2
  for (int i = 0; i < 50; ++i) {
    long p = (long)(rng() % 15) - 7, q = (long)(rng() % 15) - 7;
    CHECK(discriminant(ZPoly{q, p, 0, 1}) == -4 * Int(p) * p * p - 27 * Int(q) * q);
  }
}

TEST_CASE("resultant basics") {
  CHECK(resultant(ZPoly{-2, 0, 1}, ZPoly{-3, 0, 1}) == 1);
  ZPoly f{-2, 0, 1};
  // res(f, g) = lc(f)^deg g * prod g(roots of f), here g(sqrt2)*g(-sqrt2)
  ZPoly g{1, 1, 1};  // g = x^2+x+1; g(r)g(-r) = (r^2+1)^2 - r^2 = 9 - 2 = 7
  CHECK(resultant(f, g) == 7);
  // multiplicativity on random inputs
  std::mt19937 rng(11);
  auto rnd = [&](int d) {
    ZPoly p;
    for (int i = 0; i <= d; ++i) p.c.push_back((long)(rng() % 11) - 5);
    p.normalize();
    return p;
  };
  int done = 0;
  while (done < 25) {
    ZPoly a = rnd(3), b = rnd(2), c = rnd(2);
    if (a.deg() < 1 || b.deg() < 1 || c.deg() < 1) continue;
    CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    Int lhs = resultant(a, b);
    Int rhs = resultant(b, a);
    int mn = a.deg() * b.deg();
    CHECK(lhs == (mn % 2 == 0 ? rhs : -rhs));
    ++done;
  }
}

TEST_CASE("pseudo division identity") {
  std::mt19937 rng(3);
  auto rnd = [&](int d) {
    ZPoly p;
    for (int i = 0; i <= d; ++i) p.c.push_back((long)(rng() % 21) - 10);
    p.normalize();
    return p;
  };
  int done = 0;
  while (done < 40) {
    ZPoly a = rnd(6), b = rnd(3);
    if (b.deg() < 1 || a.deg() < b.deg()) continue;
    ZPoly q, r;
    pseudo_divmod(a, b, q, r);
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), b.lead().get_mpz_t(),
               a.deg() - b.deg() + 1);
    CHECK(a.scaled(scale) == q * b + r);
    CHECK(r.deg() < b.deg());
    ++done;
  }
}

TEST_CASE("gcd and squarefree part") {
  ZPoly a = ZPoly{-1, 0, 1} * ZPoly{2, 0, 1};
  ZPoly b = ZPoly{-1, 0, 1} * ZPoly{5, 0, 0, 1};
  CHECK(gcd_primitive(a, b) == ZPoly{-1, 0, 1});
  ZPoly f = ZPoly{-1, 0, 1} * ZPoly{-1, 0, 1} * ZPoly{3, 1};
  ZPoly sf = squarefree_part(f);
  CHECK(sf.deg() == 3);
  CHECK(divexact(sf.scaled(sf.lead()), ZPoly{-1, 0, 1}).deg() == 1);
}

TEST_CASE("real root counting and isolation") {
  CHECK(num_real_roots(ZPoly{-2, 0, 1}) == 2);
  CHECK(num_real_roots(ZPoly{1, 0, 1}) == 0);
  CHECK(num_real_roots(ZPoly{0, -1, 0, 1}) == 3);
  // distinct roots of a non-squarefree input
  ZPoly f = ZPoly{-1, 0, 1} * ZPoly{-1, 0, 1} * ZPoly{-3, 1};
  CHECK(num_real_roots(f) == 3);
  // all five roots of a totally real quintic
  CHECK(num_real_roots(ZPoly{5, 11, -2, -7, 0, 1}) == 5);

  auto iso = isolate_real_roots(ZPoly{-2, 0, 1});
  REQUIRE(iso.size() == 2);
  CHECK(iso[0].first < iso[0].second);
  CHECK(iso[0].second <= iso[1].first);
  Rat lo = iso[1].first, hi = iso[1].second;
  refine_root(ZPoly{-2, 0, 1}, lo, hi, Rat(1, Int("1000000000000000000000000000000")));
  CHECK(lo * lo < 2);
  CHECK(hi * hi > 2);
  CHECK(hi - lo <= Rat(1, Int("1000000000000000000000000000000")));

  // rational roots must still come back with strict sign changes
  auto iso2 = isolate_real_roots(ZPoly{0, -4, 0, 1});  // roots -2, 0, 2
  REQUIRE(iso2.size() == 3);
  for (auto& [a, b] : iso2) {
    ZPoly g{0, -4, 0, 1};
    CHECK(sgn(g.eval(a)) * sgn(g.eval(b)) < 0);
  }
}

TEST_CASE("double precision roots are plausible") {
  auto z = roots_double(ZPoly{-1, 0, 0, 0, 1});
  REQUIRE(z.size() == 4);
  int re1 = 0, im1 = 0;
  for (auto& r : z) {
    if (std::abs(r.real()) > 0.5) ++re1;
    if (std::abs(r.imag()) > 0.5) ++im1;
    CHECK(std::abs(std::abs(r) - 1.0) < 1e-9);
  }
  CHECK(re1 == 2);
  CHECK(im1 == 2);
}

TEST_CASE("factorization mod p") {
  FpCtx f2{Int(2)};
  auto fac = f2.factor(f2.reduce(ZPoly{1, 0, 0, 0, 1}));
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].second == 4);
  CHECK(f2.lift(fac[0].first) == ZPoly{1, 1});

  FpCtx f17{Int(17)};
  auto fac17 = f17.factor(f17.reduce(ZPoly{1, 0, 0, 0, 1}));
  CHECK(fac17.size() == 4);
  for (auto& [g, e] : fac17) {
    CHECK(g.deg() == 1);
    CHECK(e == 1);
  }

  FpCtx f3{Int(3)};
  auto fac3 = f3.factor(f3.reduce(ZPoly{1, 0, 1}));
  REQUIRE(fac3.size() == 1);
  CHECK(fac3[0].first.deg() == 2);

  FpCtx f5{Int(5)};
  auto fac5 = f5.factor(f5.reduce(ZPoly{0, -1, 0, 0, 0, 1}));
  CHECK(fac5.size() == 5);

  // recombine check on random polynomials: product of factors == input
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    long ps[] = {2, 3, 5, 13, 101};
    Int p = ps[trial % 5];
    FpCtx fp{p};
    ZPoly f;
    int d = 2 + (int)(rng() % 6);
    for (int i = 0; i < d; ++i) f.c.push_back((long)(rng() % 50));
    f.c.push_back(1);
    f.normalize();
    FpPoly fm = fp.reduce(f);
    if (fm.deg() < 1) continue;
    auto fc = fp.factor(fm);
    FpPoly prod = fp.constant(1);
    for (auto& [g, e] : fc)
      for (int i = 0; i < e; ++i) prod = fp.mul(prod, g);
    CHECK(prod == fp.monic(fm));
  }
}

TEST_CASE("factorization over Z") {
  auto f1 = factor_z(ZPoly{-2, 0, 1} * ZPoly{1, 0, 1});
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].first == ZPoly{-2, 0, 1});
  CHECK(f1[1].first == ZPoly{1, 0, 1});

  auto f2 = factor_z(ZPoly{1, 1} * ZPoly{1, 1} * ZPoly{-2, 1});
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].first == ZPoly{-2, 1});
  CHECK(f2[0].second == 1);
  CHECK(f2[1].first == ZPoly{1, 1});
  CHECK(f2[1].second == 2);

  // x^4+4 = (x^2-2x+2)(x^2+2x+2)
  auto f3 = factor_z(ZPoly{4, 0, 0, 0, 1});
  REQUIRE(f3.size() == 2);
  CHECK(f3[0].first * f3[1].first == ZPoly{4, 0, 0, 0, 1});

  // x^4+1 is irreducible over Z yet reducible mod every prime
  CHECK(is_irreducible_z(ZPoly{1, 0, 0, 0, 1}));
  CHECK(!is_irreducible_z(ZPoly{-1, 0, 0, 0, 1}));
  CHECK(is_irreducible_z(ZPoly{-34, 0, 1}));
  CHECK(is_irreducible_z(ZPoly{5, 11, -2, -7, 0, 1}));

  // non-monic
  auto f4 = factor_z(ZPoly{1, 3, 2});
  REQUIRE(f4.size() == 2);
  CHECK(f4[0].first * f4[1].first == ZPoly{1, 3, 2});

  // content and powers of x
  auto f5 = factor_z(ZPoly{0, 0, -6, 0, 6});
  bool sawx = false;
  ZPoly prod{1};
  for (auto& [g, e] : f5)
    for (int i = 0; i < e; ++i) prod = prod * g;
  for (auto& [g, e] : f5)
    if (g == ZPoly{0, 1}) {
      sawx = true;
      CHECK(e == 2);
    }
  CHECK(sawx);
  CHECK(prod == ZPoly{0, 0, -1, 0, 1});
}

TEST_CASE("u64 distinct degree factorization agrees with the generic path") {
  std::mt19937_64 rng(99);
  uint64_t primes[] = {3, 5, 17, 101, 65537, 1000003, 2147483647ull};
  int done = 0;
  while (done < 200) {
    uint64_t p = primes[rng() % 7];
    int d = 2 + (int)(rng() % 7);
    ZPoly f;
    for (int i = 0; i < d; ++i) f.c.push_back((long)(rng() % (2 * p > 1000 ? 1000 : 2 * p)));
    f.c.push_back(1);
    f.normalize();
    if (p == 2) continue;
    Int disc = discriminant(f);
    if (disc % Int((unsigned long)p) == 0) continue;  // kernel expects squarefree
    std::vector<uint64_t> fc;
    for (auto& c : f.c) {
      Int v = c % Int((unsigned long)p);
      if (v < 0) v += Int((unsigned long)p);
      fc.push_back(v.get_ui());
    }
    std::vector<int> degs;
    ddf_degrees_u64(fc, p, degs);
    FpCtx fp{Int((unsigned long)p)};
    auto fac = fp.factor(fp.reduce(f));
    std::vector<int> expect;
    for (auto& [g, e] : fac) {
      CHECK(e == 1);
      expect.push_back(g.deg());
    }
    std::sort(degs.begin(), degs.end());
    std::sort(expect.begin(), expect.end());
    CHECK(degs == expect);
    ++done;
  }
}

TEST_CASE("montgomery arithmetic matches mpz") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    uint64_t p = (rng() % ((1ull << 62) - 1)) | 1;
    if (p < 3) p = 3;
    Mont64 mt(p);
    uint64_t a = rng() % p, b = rng() % p, e = rng() % 1000;
    CHECK(mt.from(mt.mul(mt.to(a), mt.to(b))) == mulmod_u64(a, b, p));
    CHECK(mt.from(mt.pow(mt.to(a), e)) == powmod_u64(a, e, p));
    CHECK(mt.from(mt.one()) == 1 % p);
  }
}

TEST_CASE("interval arithmetic encloses") {
  RInterval pi = RInterval::pi(128);
  CHECK(std::abs(pi.mid() - 3.14159265358979) < 1e-12);
  CHECK(pi.width() < 1e-30);
  RInterval two = RInterval::exact(2L);
  RInterval s = two.sqrt();
  CHECK(std::abs(s.mid() - 1.4142135623730951) < 1e-12);
  RInterval prod = s * s;
  CHECK(prod.contains(Rat(2)));
  CHECK(prod.width() < 1e-30);
  RInterval q = RInterval::exact(Rat(1, 3));
  CHECK((q + q + q).contains(Rat(1)));
  CHECK((-q).is_negative());
  CHECK(q.is_positive());
  RInterval e1 = RInterval::exact(1L).exp();
  CHECK(std::abs(e1.mid() - 2.718281828459045) < 1e-12);
  CHECK(e1.log().contains(Rat(1)));
  // x^2-34: evaluate on an interval around sqrt(34)
  ZPoly f{-34, 0, 1};
  RInterval root = RInterval::of(5.8309518948, 5.8309518949);
  CHECK(f.eval(root).contains(Rat(0)));
}
