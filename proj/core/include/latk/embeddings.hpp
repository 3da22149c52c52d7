// Sub-root-system embeddings between ADE lattices, complete up to the Weyl
// group of the target, and the negative definite partner lattice that seeds
// frame enumeration.
#pragma once

#include "latk/autgroup.hpp"
#include "latk/lattice.hpp"

#include <utility>
#include <vector>

namespace latk {

// Embedding classes of the orthogonal sum of the given ADE factors into the
// single component (letter, n), as row matrices in the component's
// simple-root coordinates: one row per simple root of each factor, factors
// appearing in the given order. Every Weyl-group class of sub-root-systems
// of the requested type is represented; targets of type A and D get exactly
// one representative per class, type E targets may repeat a class.
std::vector<ZMat> component_embeddings(char letter, int n,
                                       const std::vector<std::pair<char, int>>& factors,
                                       const SearchBudget& budget = {});

// Primitive embedding classes of the irreducible ADE lattice S into the
// irreducible ADE lattice R up to the Weyl group of R. Rows of each result
// are the images of the simple roots of S in the coordinates of R.
std::vector<ZMat> ade_embeddings(const Lattice& S, const Lattice& R);

// The negative definite even lattice of rank rank(T)+4 whose discriminant
// form matches that of T, realized as the orthogonal complement of a
// primitive vector of norm -t inside E8 when T has Gram U + [t]. The genus
// determined by these invariants pins the result up to isometry.
Lattice nishiyama_partner(const Lattice& T);

}  // namespace latk
