#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatinv/interval.hpp"
#include "quatinv/matrix.hpp"
#include "quatinv/poly.hpp"

namespace quatinv {

// Element of Q(w), stored as integer coefficients of a polynomial in w of
// degree < n over a common positive denominator in lowest terms.  The
// coefficient vector always has length n for the owning field.
struct FieldElement {
  std::vector<Int> num;
  Int den = 1;
};

// Number field Q[x]/(f) for monic irreducible f over Z.  Construction
// computes the maximal order (round 2), the field discriminant, and
// isolating intervals for all real and complex embeddings.  Embedding data
// is refined lazily and cached, so methods taking precision are non-const
// on the cache but logically const; the cache is mutable.
class NumberField {
 public:
  explicit NumberField(const ZPoly& f);

  // Shared per-polynomial instances; ideal/group code relies on pointer
  // identity of fields obtained here.
  static const NumberField& make(const ZPoly& f);

  int degree() const { return n_; }
  int r_real() const { return r_; }
  int c_complex() const { return c_; }
  bool totally_real() const { return c_ == 0; }
  const ZPoly& poly() const { return f_; }
  const Int& disc() const { return disc_; }
  const Int& poly_disc() const { return poly_disc_; }
  const Int& index() const { return index_; }  // [O_F : Z[w]]

  // Integral basis: row i over basis_den() gives power-basis coordinates of
  // the i-th basis element.  The matrix is square, nonsingular, in row HNF.
  const Mat& basis() const { return basis_; }
  const Int& basis_den() const { return basis_den_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;
  FieldElement from_int(const Int& v) const;
  FieldElement from_rat(const Rat& v) const;
  FieldElement element(std::vector<Int> num, Int den = 1) const;
  FieldElement basis_element(int i) const;

  bool is_zero(const FieldElement& a) const;
  bool is_rational(const FieldElement& a) const;
  bool equal(const FieldElement& a, const FieldElement& b) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul_rat(const FieldElement& a, const Rat& k) const;
  FieldElement inverse(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, const Int& e) const;

  Rat norm(const FieldElement& a) const;
  Rat trace(const FieldElement& a) const;
  // Monic characteristic polynomial of multiplication by a, length n+1.
  std::vector<Rat> charpoly(const FieldElement& a) const;
  // Primitive integer polynomial with root a (minimal over Q up to scaling).
  ZPoly minpoly(const FieldElement& a) const;

  bool is_integral(const FieldElement& a) const;
  // Coordinates wrt the integral basis; returns false if a is not integral.
  bool integral_coords(const FieldElement& a, std::vector<Int>& out) const;
  FieldElement from_integral_coords(const std::vector<Int>& v) const;

  // Real places are indexed 0..r-1 in ascending order of the image of w;
  // complex places r..r+c-1 are the upper-half-plane representatives sorted
  // by real part (ties by imaginary part).
  RInterval embed_real(const FieldElement& a, int place, long prec) const;
  CInterval embed_complex(const FieldElement& a, int place, long prec) const;
  int sign_at(const FieldElement& a, int place) const;  // exact, a != 0
  std::vector<int> real_signs(const FieldElement& a) const;
  bool totally_positive(const FieldElement& a) const;
  RInterval t2_norm(const FieldElement& a, long prec) const;

  std::string str(const FieldElement& a, const std::string& var = "w") const;
  // Parses sums of terms like "w^2", "-3*w", "5/2", "(w^3-1)/2".
  FieldElement parse(const std::string& s) const;

 private:
  void canonicalize(FieldElement& a) const;
  FieldElement mul_raw(const std::vector<Int>& a, const std::vector<Int>& b,
                       const Int& da, const Int& db) const;
  void compute_maximal_order();
  void refine_real(int j, long bits) const;
  void ensure_complex(long prec) const;

  ZPoly f_;
  int n_ = 0, r_ = 0, c_ = 0;
  Int poly_disc_, disc_, index_;
  Mat basis_;  // row HNF, so integral_coords is back substitution
  Int basis_den_ = 1;
  std::vector<Int> power_sums_;  // sums of k-th powers of the roots, k < n

  struct RealRoot {
    Rat lo, hi;   // f has a strict sign change; neither endpoint is a root
    int sign_lo;  // sign of f at lo
    long bits;    // approximate -log2 of width
  };
  mutable std::vector<RealRoot> real_roots_;
  struct ComplexRoot {
    RInterval re, im;  // certified box, im strictly positive
  };
  mutable std::vector<ComplexRoot> complex_roots_;
  mutable long complex_prec_ = 0;
};

// A root of the monic integer polynomial g lying in F, or nullopt if there is
// none.  Candidate coordinates come from matching embeddings of the integral
// basis against numeric roots of g; every candidate is verified by exact
// evaluation in F, so a returned element really is a root.
std::optional<FieldElement> integral_root_in_field(const NumberField& F,
                                                   const ZPoly& g);

}  // namespace quatinv
