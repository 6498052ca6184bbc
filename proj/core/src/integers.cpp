#include "quatinv/integers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace quatinv {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Int invmod(const Int& a, const Int& m) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw std::domain_error("invmod: not invertible");
  return r;
}

int kronecker(const Int& a, const Int& b) {
  return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

const std::vector<uint32_t>& primes_upto(uint32_t limit) {
  static std::vector<uint32_t> primes;
  static uint32_t sieved = 0;
  if (limit > sieved) {
    uint32_t hi = std::max(limit, sieved < (1u << 20) ? (1u << 20) : sieved * 2);
    std::vector<bool> comp(hi + 1, false);
    primes.clear();
    for (uint32_t p = 2; p <= hi; ++p) {
      if (comp[p]) continue;
      primes.push_back(p);
      for (uint64_t q = (uint64_t)p * p; q <= hi; q += p) comp[q] = true;
    }
    sieved = hi;
  }
  return primes;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

Mont64::Mont64(uint64_t mod) : n(mod) {
  // Newton iteration for n^{-1} mod 2^64; n must be odd
  uint64_t inv = n;
  for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
  ninv = inv;
  __uint128_t r = ((__uint128_t)1 << 64) % n;
  r2 = (uint64_t)((__uint128_t)r * r % n);
}

uint64_t Mont64::mul(uint64_t a, uint64_t b) const {
  __uint128_t t = (__uint128_t)a * b;
  uint64_t m = (uint64_t)t * (0 - ninv);
  __uint128_t u = t + (__uint128_t)m * n;
  uint64_t res = (uint64_t)(u >> 64);
  return res >= n ? res - n : res;
}

uint64_t Mont64::to(uint64_t x) const { return mul(x % n, r2); }

uint64_t Mont64::from(uint64_t x) const { return mul(x, 1); }

uint64_t Mont64::one() const { return to(1); }

uint64_t Mont64::pow(uint64_t a, uint64_t e) const {
  uint64_t r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

namespace {

uint64_t brent_rho_u64(uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t power = 1, lam = 1;
    auto f = [&](uint64_t v) {
      return (mulmod_u64(v, v, n) + c) % n;
    };
    while (d == 1) {
      if (power == lam) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      y = f(y);
      ++lam;
      uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d = std::__gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

Int brent_rho_mpz(const Int& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xfeedbeefUL);
  for (;;) {
    Int c = rng.get_z_range(n - 1) + 1;
    Int x = rng.get_z_range(n), y = x, d = 1;
    int power = 1, lam = 0;
    while (d == 1) {
      if (lam == power) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      y = (y * y + c) % n;
      ++lam;
      Int diff = abs(x - y);
      if (diff == 0) break;
      d = gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  Int d;
  if (n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 62) {
    d = Int(brent_rho_u64(n.get_ui()));
  } else {
    d = brent_rho_mpz(n);
  }
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factor(const Int& n) {
  Int m = abs(n);
  if (m == 0) throw std::domain_error("factor(0)");
  std::map<Int, int> acc;
  for (uint32_t p : primes_upto(100000)) {
    if (m == 1) break;
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      acc[Int(p)] = e;
    }
    if ((Int)((Int)p * p) > m) break;
  }
  if (m > 1) {
    if (is_prime(m))
      acc[m]++;
    else
      factor_rec(m, acc);
  }
  std::vector<std::pair<Int, int>> out(acc.begin(), acc.end());
  return out;
}

}  // namespace quatinv
