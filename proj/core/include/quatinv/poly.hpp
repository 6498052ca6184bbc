#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "quatinv/integers.hpp"
#include "quatinv/interval.hpp"

namespace quatinv {

// Dense integer polynomial, c[i] is the x^i coefficient.  Invariant: no
// trailing zero coefficients, so deg() == c.size() - 1 and the zero
// polynomial has empty c.
struct ZPoly {
  std::vector<Int> c;

  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
  ZPoly(std::initializer_list<long> coeffs);

  void normalize();
  int deg() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  const Int& lead() const { return c.back(); }
  Int coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : Int(0); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  Int content() const;      // gcd of coefficients, sign of lead
  ZPoly primitive() const;  // *this / content, zero stays zero
  ZPoly derivative() const;
  ZPoly scaled(const Int& k) const;
  ZPoly shifted(int k) const;  // *this * x^k

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  RInterval eval(const RInterval& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  bool operator==(const ZPoly& o) const { return c == o.c; }
  std::string str(const std::string& var = "x") const;
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a);
ZPoly operator*(const ZPoly& a, const ZPoly& b);

// lead(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b
void pseudo_divmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r);
// exact division, throws if b does not divide a over Z
ZPoly divexact(const ZPoly& a, const ZPoly& b);

Int resultant(const ZPoly& a, const ZPoly& b);
Int discriminant(const ZPoly& f);
ZPoly gcd_primitive(const ZPoly& a, const ZPoly& b);
ZPoly squarefree_part(const ZPoly& f);

// Number of distinct real roots.
int num_real_roots(const ZPoly& f);
// Cauchy bound: every complex root has |z| < returned value.
Rat root_bound(const ZPoly& f);

// Disjoint intervals (lo, hi), ascending, each containing exactly one real
// root of f, with sign(f(lo)) * sign(f(hi)) < 0.  f need not be squarefree.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const ZPoly& f);
// Shrink an isolating interval by bisection until hi - lo <= width.
void refine_root(const ZPoly& f, Rat& lo, Rat& hi, const Rat& width);

// All complex roots by Aberth iteration, unordered, double precision.  Seeds
// for certified refinement elsewhere; never trust these alone.
std::vector<std::complex<double>> roots_double(const ZPoly& f);

// m-th cyclotomic polynomial, m >= 1, by iterated exact division of x^m - 1.
ZPoly cyclotomic_poly(int m);

// Minimal polynomial of 2*cos(pi/q) over Q, q >= 1: the degree phi(2q)/2
// trace polynomial of the 2q-th cyclotomic polynomial.
ZPoly cos_minpoly(int q);

}  // namespace quatinv
