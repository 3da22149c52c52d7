// Root sublattice analysis for negative definite even lattices: fundamental
// systems of (-2)-vectors, ADE component classification, and the shape of the
// quotient by the root span.
#pragma once

#include "latk/mat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace latk {

struct RootSystem {
    std::vector<std::vector<Int>> simple_roots;   // fundamental system, ambient coords
    std::vector<std::pair<char, int>> components; // ('A'|'D'|'E', n), sorted
    Int root_count = 0;                           // all roots, both signs

    ZMat root_basis() const;         // simple roots as matrix rows
    std::string type_string() const; // "E8^2", "A1^2A2^2A11", "1" when empty
};

// classify the (-2)-vector system of a negative definite even Gram matrix
RootSystem root_type(const ZMat& gram);

struct QuotientShape {
    int free_rank = 0;
    std::vector<Int> torsion; // elementary divisors > 1, ascending

    std::string str() const; // "0", "Z", "Z^2", "Z + Z/2", "Z/3", ...
};

// shape of Z^n / rowspan(sub) for a full set of sublattice generators
QuotientShape quotient_shape(int ambient_rank, const ZMat& sub);

// expected root count of one ADE component, both signs
Int ade_root_count(char letter, int n);

}  // namespace latk
