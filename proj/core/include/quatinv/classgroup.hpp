#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quatinv/abelian.hpp"
#include "quatinv/ideals.hpp"
#include "quatinv/numberfield.hpp"

namespace quatinv {

struct PrincipalCheck {
  bool principal = false;
  FieldElement gen;  // valid only when principal
};

// Decides principality of an integral ideal with a certificate in both
// directions: a found generator, or exhaustion of the unit-action
// fundamental domain at the target norm.
PrincipalCheck is_principal(const NumberField& F, const Ideal& I);

// The class group on a factor base of primes up to the Minkowski bound.
// Relations are exact principal factorizations; the presentation is
// certified by principality tests on every residual class, so cl is the
// class group itself, not an approximation from sampling.
struct ClassGroupData {
  const NumberField* field = nullptr;
  Int bound;                       // norm bound actually used for the base
  std::vector<PrimeIdeal> base;
  std::vector<std::pair<std::vector<Int>, FieldElement>> rels;  // row, generator
  AbelianGroup cl;
  Mat rel_hnf;                     // HNF of the relation lattice
};

const ClassGroupData& class_group(const NumberField& F);

// I = (gen) * prod base[i]^{v[i]} exactly; throws only if the reduction
// machinery cannot smooth the ideal, which the growing search prevents.
struct SmoothDecomp {
  FieldElement gen;
  std::vector<Int> v;
};
SmoothDecomp smooth_decomp(const ClassGroupData& cg, const Ideal& I);

// Class of I in cg.cl, as cyclic coordinates.
std::vector<Int> class_dlog(const ClassGroupData& cg, const Ideal& I);

// Class group with positivity conditions at the real places listed in T
// (indices into the ascending real embeddings).  Generators are the factor
// base followed by |T| sign generators; exactness rides on the certified
// class relations and on the unit generators spanning the full sign image.
struct RayClassGroup {
  const ClassGroupData* cg = nullptr;
  std::vector<int> places;
  AbelianGroup group;  // on base.size() + places.size() generators
};
RayClassGroup ray_class_group(const ClassGroupData& cg,
                              const std::vector<int>& T);

// Coordinates of an integral ideal's class in a ray class group.
std::vector<Int> ray_dlog(const RayClassGroup& rg, const Ideal& I);

// Narrow class group: positivity at every real place.
RayClassGroup narrow_class_group(const ClassGroupData& cg);

// A generator of I that is positive at every real place in T, if the class
// of I in the corresponding ray group is trivial; nullopt otherwise.
std::optional<FieldElement> principal_gen_positive_at(
    const ClassGroupData& cg, const Ideal& I, const std::vector<int>& T);

}  // namespace quatinv
