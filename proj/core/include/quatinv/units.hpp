#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quatinv/numberfield.hpp"

namespace quatinv {

// Generators of the unit group.  fund has full rank r + c - 1 and, together
// with the torsion, generates a subgroup of odd index saturated at 2, so
// every question living in U/U^2 (signs, square classes, Selmer data) has
// the same answer as for the full group.  For real quadratic fields fund
// holds the fundamental unit itself.
struct UnitGroup {
  const NumberField* field = nullptr;
  FieldElement torsion_gen;
  int torsion_order = 2;
  std::vector<FieldElement> fund;
};

const UnitGroup& unit_group(const NumberField& F);

// integral with norm +-1
bool is_unit(const NumberField& F, const FieldElement& x);

// Exact square root of s in F, or a certified "no such element".
std::optional<FieldElement> sqrt_in_field(const NumberField& F,
                                          const FieldElement& s);

// Repeatedly replaces a generator by the square root of a subset product
// (torsion twists included) until no such root exists in F.  The result
// spans the input together with every unit whose square it contains.
std::vector<FieldElement> saturate_at_2(const NumberField& F,
                                        std::vector<FieldElement> gens);

// (generator, order) of the roots of unity
std::pair<FieldElement, int> torsion_units(const NumberField& F);

// T2 Gram matrix, as doubles, of the lattice spanned by the given rows of
// integral-basis coordinates.  Identity rows give the maximal order itself.
// Meant for Fincke-Pohst searches whose hits are re-verified exactly.
std::vector<std::vector<double>> t2_gram_rows(const NumberField& F,
                                              const Mat& rows);

}  // namespace quatinv
