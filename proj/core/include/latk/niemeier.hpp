// The 23 negative definite even unimodular lattices of rank 24 with nonempty
// root systems, each built as an overlattice of its ADE root sublattice glued
// by the standard code in the discriminant group.
#pragma once

#include "latk/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace latk {

struct Niemeier {
    std::string name;                              // canonical root type, e.g. "A17E7"
    std::vector<std::pair<char, int>> components;  // ADE factors, construction order
    long coxeter = 0;                              // common Coxeter number h; 24h roots
    Lattice lat;                                   // rank 24, even, det 1
    ZMat roots_in;      // rows: the 24 simple roots of the ADE sublattice, lat coords
    std::vector<std::vector<Rat>> glue_gens;  // glue code generators, root-basis coords
};

// all 23, in order of decreasing Coxeter number; built once, then cached
const std::vector<Niemeier>& niemeier_lattices();

const Niemeier& niemeier_by_name(const std::string& name);

// subgroup of (Q/Z)^n generated by the rows, as vectors reduced into [0,1)
std::vector<std::vector<Rat>> span_mod_one(const std::vector<std::vector<Rat>>& gens);

}  // namespace latk
