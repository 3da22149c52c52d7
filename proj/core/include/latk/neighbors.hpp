// Kneser p-neighbors of definite even lattices and genus enumeration
// certified by the exact mass: the neighbor graph is explored until the
// class masses sum to the genus mass, so completeness is a theorem, not a
// heuristic. Incomplete runs (budget or disconnection) are flagged.
#pragma once

#include "latk/autgroup.hpp"
#include "latk/lattice.hpp"

#include <functional>
#include <vector>

namespace latk {

// All p-neighbors of an even definite lattice, one per isotropic line of
// the reduction mod p. Requires p odd and coprime to det; neighbors share
// the genus of the input and are returned in a deterministic order.
std::vector<ZMat> kneser_neighbors(const ZMat& gram, const Int& p);

// streaming form: stops early when the visitor returns false
void for_each_neighbor(const ZMat& gram, const Int& p,
                       const std::function<bool(const ZMat&)>& visit);

// smallest odd prime not dividing det
Int neighbor_prime(const ZMat& gram);

struct GenusEnumeration {
    std::vector<Lattice> classes;  // discovery order, seed first
    std::vector<Int> aut_orders;   // |O(L)| per class
    Rat mass;                      // exact mass of the genus
    Rat found_mass;                // sum of 1/|O(L_i)| over emitted classes
    bool complete = false;         // found_mass == mass
};

// Enumerate the genus of a definite even Gram matrix by repeated
// p-neighbor steps (p defaults to neighbor_prime). New classes are
// recognized by cheap invariants (root data) before exact isometry tests.
GenusEnumeration enumerate_genus(const ZMat& gram, const Int& p = 0,
                                 const SearchBudget& budget = {});

}  // namespace latk
