#pragma once

#include <cstdint>
#include <vector>

#include "quatinv/poly.hpp"

namespace quatinv {

// Monic polynomial arithmetic over F_p, p an arbitrary prime (mpz).  Only
// small degrees pass through here, so everything is naive and exact.
struct FpPoly {
  std::vector<Int> c;  // coefficients in [0, p), no trailing zeros
  int deg() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  bool operator==(const FpPoly& o) const { return c == o.c; }
  bool operator<(const FpPoly& o) const;
};

class FpCtx {
 public:
  explicit FpCtx(Int p) : p_(std::move(p)) {}
  const Int& p() const { return p_; }

  FpPoly reduce(const ZPoly& f) const;
  ZPoly lift(const FpPoly& f) const;  // representatives in [0, p)

  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) const;
  // a = q*b + r, b monic after scaling (any nonzero b)
  void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) const;
  FpPoly monic(const FpPoly& a) const;
  FpPoly gcd(const FpPoly& a, const FpPoly& b) const;
  FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m) const;
  FpPoly derivative(const FpPoly& a) const;
  FpPoly xpoly() const;  // the polynomial x
  FpPoly constant(const Int& v) const;

  // full factorization into monic irreducibles with multiplicity
  std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f) const;

 private:
  Int p_;
  std::vector<FpPoly> squarefree_split(const FpPoly& f,
                                       std::vector<int>& mult) const;
  void ddf(const FpPoly& f, std::vector<std::pair<FpPoly, int>>& out) const;
  void edf(const FpPoly& f, int d, std::vector<FpPoly>& out) const;
};

// Factor a primitive polynomial over Z into irreducibles with multiplicity.
// Zassenhaus: factor mod a good prime, Hensel lift, recombine.
std::vector<std::pair<ZPoly, int>> factor_z(const ZPoly& f);

bool is_irreducible_z(const ZPoly& f);

// Multiset of irreducible-factor degrees of f mod p, for f squarefree mod p
// and p odd.  Distinct-degree steps only, in Montgomery arithmetic; this is
// the per-prime kernel of the Euler products.
void ddf_degrees_u64(const std::vector<uint64_t>& f, uint64_t p,
                     std::vector<int>& degrees_out);

}  // namespace quatinv
