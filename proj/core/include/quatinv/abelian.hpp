#pragma once

#include <vector>

#include "quatinv/matrix.hpp"

namespace quatinv {

// Finite abelian group presented as Z^k modulo the row space of a relation
// matrix.  Construction runs Smith normal form once; after that, elements
// are coordinate vectors in Z^k and all questions reduce to arithmetic in
// the cyclic decomposition.
struct AbelianGroup {
  int ngens = 0;
  std::vector<Int> cyc;  // invariant factors > 1, each dividing the next
  Mat to_cyc;            // ngens x ngens change of basis (column j feeds cyc j)
  Mat from_cyc;          // inverse of to_cyc
  std::vector<int> cyc_cols;  // which transformed coordinates carry cyc

  Int order() const;
  int rank2() const;  // number of even invariant factors
};

// The relation rows must span a finite-index sublattice of Z^k; throws
// otherwise.  Rows may be redundant or missing (zero rows are fine).
AbelianGroup abelian_from_relations(int ngens, const Mat& rels);

// Coordinates of v in the cyclic decomposition, reduced mod cyc.
std::vector<Int> ab_dlog(const AbelianGroup& g, const std::vector<Int>& v);

bool ab_is_identity(const AbelianGroup& g, const std::vector<Int>& v);

Int ab_element_order(const AbelianGroup& g, const std::vector<Int>& v);

// Generator-coordinate representatives of a basis of the 2-torsion
// subgroup, one per even invariant factor.
std::vector<std::vector<Int>> ab_two_torsion_basis(const AbelianGroup& g);

// All 2^rank2 elements of the 2-torsion subgroup, identity first.
std::vector<std::vector<Int>> ab_two_torsion_elements(const AbelianGroup& g);

// Presentation of g modulo the subgroup generated by the given elements
// (each a generator-coordinate vector).
AbelianGroup ab_quotient(const AbelianGroup& g,
                         const std::vector<std::vector<Int>>& elts);

// Whether v lies in the subgroup generated by the given elements.
bool ab_in_subgroup(const AbelianGroup& g,
                    const std::vector<std::vector<Int>>& elts,
                    const std::vector<Int>& v);

}  // namespace quatinv
