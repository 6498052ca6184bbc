#include "quatinv/interval.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace quatinv {

RInterval::RInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RInterval::RInterval(const RInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RInterval::RInterval(RInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RInterval& RInterval::operator=(RInterval o) {
  swap(*this, o);
  return *this;
}

RInterval::~RInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void swap(RInterval& a, RInterval& b) noexcept {
  mpfr_swap(a.lo_, b.lo_);
  mpfr_swap(a.hi_, b.hi_);
  std::swap(a.prec_, b.prec_);
}

RInterval RInterval::exact(const Int& v, mpfr_prec_t prec) {
  RInterval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

RInterval RInterval::exact(const Rat& v, mpfr_prec_t prec) {
  RInterval r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

RInterval RInterval::exact(long v, mpfr_prec_t prec) {
  RInterval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

RInterval RInterval::of(double lo, double hi, mpfr_prec_t prec) {
  RInterval r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

RInterval RInterval::span(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
  RInterval r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

RInterval RInterval::pi(mpfr_prec_t prec) {
  RInterval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

double RInterval::lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RInterval::hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double RInterval::mid() const { return (lo() + hi()) / 2; }

double RInterval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool RInterval::contains(const Rat& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool RInterval::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool RInterval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool RInterval::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool RInterval::width_below_2exp(long e) const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  bool ok = mpfr_cmp_ui_2exp(w, 1, e) <= 0;
  mpfr_clear(w);
  return ok;
}

bool RInterval::strictly_below(const RInterval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

RInterval RInterval::operator+(const RInterval& o) const {
  RInterval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

RInterval RInterval::operator-(const RInterval& o) const {
  RInterval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

RInterval RInterval::operator-() const {
  RInterval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

RInterval RInterval::operator*(const RInterval& o) const {
  RInterval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lo: min over corner products rounded down
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // hi: max over corner products rounded up
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RInterval RInterval::inverse() const {
  if (mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0)
    throw std::domain_error("RInterval::inverse through zero");
  RInterval r(prec_);
  mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
  return r;
}

RInterval RInterval::operator/(const RInterval& o) const {
  return *this * o.inverse();
}

RInterval RInterval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("RInterval::sqrt of negative");
  RInterval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RInterval RInterval::sq() const {
  RInterval r(prec_);
  if (mpfr_sgn(lo_) >= 0) {
    mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
  } else if (mpfr_sgn(hi_) <= 0) {
    mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
    mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_sqr(t, lo_, MPFR_RNDU);
    mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
  }
  return r;
}

RInterval RInterval::pow_ui(unsigned long e) const {
  RInterval r = RInterval::exact(1L, prec_);
  RInterval base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

RInterval RInterval::exp() const {
  RInterval r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RInterval RInterval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("RInterval::log needs lo > 0");
  RInterval r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RInterval RInterval::abs() const {
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  RInterval r(prec_);
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  mpfr_t a;
  mpfr_init2(a, prec_);
  mpfr_set(a, hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, a, MPFR_RNDU);
  mpfr_clear(a);
  return r;
}

std::string RInterval::str(int digits) const {
  char* s1 = nullptr;
  char* s2 = nullptr;
  mpfr_asprintf(&s1, "%.*Rg", digits, lo_);
  mpfr_asprintf(&s2, "%.*Rg", digits, hi_);
  std::string out = std::string("[") + s1 + ", " + s2 + "]";
  mpfr_free_str(s1);
  mpfr_free_str(s2);
  return out;
}

}  // namespace quatinv
