#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace quatinv {

using Int = mpz_class;
using Rat = mpq_class;

bool is_prime(const Int& n);

// Full factorization of |n|, n != 0.  Trial division, then Brent rho on the
// cofactor.  Returns (p, e) pairs sorted by p.
std::vector<std::pair<Int, int>> factor(const Int& n);

Int powmod(const Int& base, const Int& exp, const Int& mod);

// Inverse of a mod m, m > 0.  Throws if gcd(a, m) != 1.
Int invmod(const Int& a, const Int& m);

// Kronecker symbol (a|b).
int kronecker(const Int& a, const Int& b);

Int isqrt(const Int& n);
bool is_square(const Int& n, Int* root = nullptr);

// Ascending primes <= limit.  The sieve is cached and only grows.
const std::vector<uint32_t>& primes_upto(uint32_t limit);

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);

// Montgomery arithmetic mod an odd modulus < 2^63.  Used on hot per-prime
// paths where mpz overhead dominates.
struct Mont64 {
  uint64_t n = 0, ninv = 0, r2 = 0;
  Mont64() = default;
  explicit Mont64(uint64_t mod);
  uint64_t to(uint64_t x) const;
  uint64_t from(uint64_t x) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= n ? s - n : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + n - b; }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t one() const;
};

}  // namespace quatinv
