#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quatinv/ideals.hpp"
#include "quatinv/numberfield.hpp"

namespace quatinv {

// B = (a, b | F): i^2 = a, j^2 = b, ji = -ij.  a, b nonzero.
struct QuatAlgebra {
  const NumberField* field = nullptr;
  FieldElement a, b;
};

QuatAlgebra make_quat(const NumberField& F, const FieldElement& a,
                      const FieldElement& b);

// x + y i + z j + w ij with coefficients in F
struct QuatElement {
  FieldElement x, y, z, w;
};

QuatElement quat_from(const QuatAlgebra& B, const FieldElement& x,
                      const FieldElement& y, const FieldElement& z,
                      const FieldElement& w);
QuatElement quat_add(const QuatAlgebra& B, const QuatElement& p,
                     const QuatElement& q);
QuatElement quat_mul(const QuatAlgebra& B, const QuatElement& p,
                     const QuatElement& q);
QuatElement quat_conj(const QuatAlgebra& B, const QuatElement& q);
FieldElement quat_trd(const QuatAlgebra& B, const QuatElement& q);
FieldElement quat_nrd(const QuatAlgebra& B, const QuatElement& q);

// Hilbert symbol (a, b)_P in {+1, -1}.  Odd P uses the tame formula; primes
// above 2 test isotropy of <1, -a, -b> over O/P^(2e+3), which is exact at
// that precision.
int hilbert_symbol(const NumberField& F, const FieldElement& a,
                   const FieldElement& b, const PrimeIdeal& P);
// -1 exactly when a and b are both negative at the real place
int hilbert_symbol_real(const NumberField& F, const FieldElement& a,
                        const FieldElement& b, int place);

struct QuatRamification {
  std::vector<PrimeIdeal> finite;  // ordered by (p, position in primes_above)
  std::vector<int> real_places;    // ascending
};

// All ramified places of B.  Aborts if the total count comes out odd, which
// would mean a Hilbert symbol was computed wrongly.
QuatRamification ramification(const QuatAlgebra& B);

// Product of the finite ramified primes
Ideal quat_disc(const QuatAlgebra& B);
bool is_division(const QuatAlgebra& B);

// Valuation of the quadratic defect of t at P: the largest v(t - s^2) over
// integral s, for t of even valuation after removing square factors.  Odd
// valuation returns that valuation.  nullopt means t is a square in the
// completion.
std::optional<int> quadratic_defect(const NumberField& F,
                                    const FieldElement& t,
                                    const PrimeIdeal& P);

enum class SplitType { Split, Inert, Ramified };

// Behaviour of P in F(sqrt(t)) for t not a square locally at P
SplitType prime_split_type(const NumberField& F, const FieldElement& t,
                           const PrimeIdeal& P);

// Exponent of P in the relative discriminant of F(sqrt(t))/F
int rel_disc_exponent(const NumberField& F, const FieldElement& t,
                      const PrimeIdeal& P);
// Finite part of that relative discriminant; t must not be a rational square
// times a square in F
Ideal rel_disc(const NumberField& F, const FieldElement& t);
// Real places where t is negative, so F(sqrt(t)) becomes complex
std::vector<int> complexified_places(const NumberField& F,
                                     const FieldElement& t);

// Reduced discriminant of the free module spanned by the four elements over
// the maximal order: the square root of the ideal generated by
// det(trd(e_i e_j)).  The elements must span B over F and the determinant
// must be integral with all exponents even (true for any order).
Ideal order_reduced_disc(const QuatAlgebra& B,
                         const std::array<QuatElement, 4>& basis);

}  // namespace quatinv
