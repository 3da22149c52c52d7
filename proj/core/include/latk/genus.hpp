// Genus symbols of definite even lattices: p-adic Jordan constituents,
// Conway-Sloane style symbol strings, exact Minkowski-Siegel mass, and
// genus equality tests. All values are exact; the mass is assembled from
// Bernoulli numbers and local densities with every transcendental factor
// cancelling identically.
#pragma once

#include "latk/lattice.hpp"

#include <string>
#include <vector>

namespace latk {

// One Jordan constituent of L tensor Z_p: p^scale times a unimodular form.
struct JordanBlock {
    int scale = 0;
    int rank = 0;
    int eps = 1;      // p odd: chi_p(det unit); p = 2: +1 iff unit = +-1 mod 8
    bool odd = false; // p = 2 only: type I (odd diagonal entry present)
    int unit = 1;     // p = 2: det unit mod 8
    int oddity = 0;   // p = 2, type I: sum of diagonal units mod 8

    bool operator==(const JordanBlock& o) const = default;
};

struct LocalSymbol {
    Int p;
    std::vector<JordanBlock> blocks; // ascending scale, empty entries omitted

    bool operator==(const LocalSymbol& o) const = default;
};

struct GenusSymbol {
    int rank = 0;
    Inertia sig;
    Int det;                        // signed determinant of the Gram matrix
    std::vector<LocalSymbol> local; // p = 2 first, then ascending odd p | det

    std::string str() const;
    bool operator==(const GenusSymbol& o) const = default;
};

// Jordan constituents of the completion at p, ascending scale.
std::vector<JordanBlock> jordan_decomposition(const ZMat& gram, const Int& p);

// the full symbol: signature plus local data at 2 and every odd p | det
GenusSymbol genus_symbol(const ZMat& gram);

// local symbol equality at every prime, signatures included; cross-checked
// against discriminant form isomorphism for even lattices
bool same_genus(const ZMat& g1, const ZMat& g2);

// Local representation density alpha_p of the completion, from its Jordan
// constituents. Normalized so that the mass of the genus of a positive
// definite G of rank n >= 2 equals
//   2 pi^{-n(n+1)/4} prod_{j<=n} Gamma(j/2) |det|^{(n+1)/2} prod_p 2/alpha_p.
Rat local_density(const std::vector<JordanBlock>& blocks, const Int& p);

// Exact mass of the genus of a definite Gram matrix (rank 1: 1/2). Negative
// definite input is negated; the sum of 1/|O(L_i)| over the classes L_i of
// the genus equals this value.
Rat genus_mass(const ZMat& gram);

// fundamental discriminant attached to a nonzero integer
Int fundamental_discriminant(const Int& D);

}  // namespace latk
