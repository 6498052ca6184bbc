#pragma once

#include <utility>
#include <vector>

#include "quatinv/numberfield.hpp"

namespace quatinv {

// Nonzero integral ideal of the maximal order, stored as the row HNF of its
// full-rank sublattice in integral-basis coordinates.
struct Ideal {
  const NumberField* field = nullptr;
  Mat h;
};

struct PrimeIdeal {
  Int p;          // rational prime below
  int e = 1;      // ramification index
  int f = 1;      // residue degree
  Ideal ideal;    // = p O + second_gen O
  FieldElement second_gen;
  FieldElement anti_unif;  // valuation -1 here, >= 0 at every other prime
};

Ideal ideal_whole(const NumberField& F);
Ideal ideal_principal(const NumberField& F, const FieldElement& a);
Ideal ideal_from_gens(const NumberField& F, const std::vector<FieldElement>& gens);

bool ideal_equal(const Ideal& a, const Ideal& b);
Int ideal_norm(const Ideal& a);
Ideal ideal_mul(const Ideal& a, const Ideal& b);
Ideal ideal_pow(const Ideal& a, int k);  // k >= 0
Ideal ideal_add(const Ideal& a, const Ideal& b);
bool ideal_contains_elt(const Ideal& a, const FieldElement& x);
// a | b, equivalently b is contained in a
bool ideal_divides(const Ideal& a, const Ideal& b);

// Decomposition of p in the maximal order, cached per field.  Primes are
// deterministically ordered.
const std::vector<PrimeIdeal>& primes_above(const NumberField& F, const Int& p);

int valuation(const Ideal& I, const PrimeIdeal& P);
// x nonzero, possibly non-integral
int valuation_elt(const NumberField& F, const FieldElement& x, const PrimeIdeal& P);

// Prime factorization with exponents, primes ordered by (p, position in
// primes_above).
std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const Ideal& I);

// Canonical representative of x modulo the ideal lattice, as integral
// coordinates in [0, h[i][i]) at each pivot.
std::vector<Int> ideal_reduce(const Ideal& I, std::vector<Int> coords);
FieldElement ideal_reduce_elt(const Ideal& I, const FieldElement& x);

// x^((Np-1)/2) in the residue field of an odd prime; x must be a unit at P
int residue_legendre(const PrimeIdeal& P, const FieldElement& x);

}  // namespace quatinv
