// Isometry groups of definite lattices by backtracking over short-vector
// images, with candidate filtering on pairing fingerprints. Group orders are
// exact arbitrary-precision integers obtained from a stabilizer-chain orbit
// computation; resource limits raise BudgetExceeded rather than ever
// returning a wrong answer.
#pragma once

#include "latk/mat.hpp"

#include <stdexcept>
#include <vector>

namespace latk {

struct SearchBudget {
    double seconds = 0;       // wall clock limit, 0 = unlimited
    long long max_nodes = 0;  // search tree node limit, 0 = unlimited
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AutGroup {
    std::vector<ZMat> generators;  // each A satisfies A * G * A^T = G
    Int order = 1;
};

// full isometry group of a negative definite Gram matrix
AutGroup automorphism_group(const ZMat& gram, const SearchBudget& budget = {});

// decides existence of an isometry (L1, g1) -> (L2, g2); on success the
// witness A satisfies A * g2 * A^T = g1 with A unimodular. A negative answer
// certifies an exhausted search.
bool is_isometric(const ZMat& g1, const ZMat& g2, ZMat* witness = nullptr,
                  const SearchBudget& budget = {});

}  // namespace latk
