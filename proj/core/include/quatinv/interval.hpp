#pragma once

#include <mpfr.h>

#include <string>

#include "quatinv/integers.hpp"

namespace quatinv {

// Closed real interval [lo, hi] with outward-rounded mpfr endpoints.  All
// arithmetic keeps the true result enclosed, so a width check at the end of a
// computation is a proof of accuracy.
class RInterval {
 public:
  explicit RInterval(mpfr_prec_t prec = 128);
  RInterval(const RInterval& o);
  RInterval(RInterval&& o) noexcept;
  RInterval& operator=(RInterval o);
  ~RInterval();

  static RInterval exact(const Int& v, mpfr_prec_t prec = 128);
  static RInterval exact(const Rat& v, mpfr_prec_t prec = 128);
  static RInterval exact(long v, mpfr_prec_t prec = 128);
  static RInterval of(double lo, double hi, mpfr_prec_t prec = 128);
  static RInterval span(const Rat& lo, const Rat& hi, mpfr_prec_t prec = 128);
  static RInterval pi(mpfr_prec_t prec = 128);

  mpfr_prec_t prec() const { return prec_; }
  double lo() const;  // rounded down
  double hi() const;  // rounded up
  double mid() const;
  double width() const;
  bool contains(const Rat& v) const;
  bool contains(double v) const;
  bool is_positive() const;
  bool is_negative() const;
  // width <= 2^e, decided in mpfr so it stays meaningful past double range
  bool width_below_2exp(long e) const;
  // true if every point of *this is < every point of o
  bool strictly_below(const RInterval& o) const;

  RInterval operator+(const RInterval& o) const;
  RInterval operator-(const RInterval& o) const;
  RInterval operator*(const RInterval& o) const;
  RInterval operator/(const RInterval& o) const;  // o must exclude 0
  RInterval operator-() const;
  RInterval sqrt() const;  // lo >= 0 required
  RInterval sq() const;    // tight square, nonnegative even across 0
  RInterval pow_ui(unsigned long e) const;
  RInterval exp() const;
  RInterval log() const;  // lo > 0 required
  RInterval abs() const;
  RInterval inverse() const;

  std::string str(int digits = 20) const;

  // raw endpoint access for the few call sites that talk to mpfr directly
  const mpfr_t& lo_raw() const { return lo_; }
  const mpfr_t& hi_raw() const { return hi_; }
  mpfr_t& lo_raw() { return lo_; }
  mpfr_t& hi_raw() { return hi_; }

 private:
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
  friend void swap(RInterval& a, RInterval& b) noexcept;
};

void swap(RInterval& a, RInterval& b) noexcept;

// Rectangular complex interval.
struct CInterval {
  RInterval re, im;
  CInterval() = default;
  CInterval(RInterval r, RInterval i) : re(std::move(r)), im(std::move(i)) {}
  CInterval operator+(const CInterval& o) const { return {re + o.re, im + o.im}; }
  CInterval operator-(const CInterval& o) const { return {re - o.re, im - o.im}; }
  CInterval operator*(const CInterval& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CInterval operator/(const CInterval& o) const {
    RInterval s = o.abs_sq();  // must exclude 0
    return {(re * o.re + im * o.im) / s, (im * o.re - re * o.im) / s};
  }
  RInterval abs_sq() const { return re.sq() + im.sq(); }
  bool contains_zero() const {
    return !(re.is_positive() || re.is_negative()) &&
           !(im.is_positive() || im.is_negative());
  }
};

}  // namespace quatinv
