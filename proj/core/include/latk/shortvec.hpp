// Exact short-vector enumeration for negative definite Gram matrices via
// rational Cholesky decomposition; no floating point anywhere. Vectors are
// reported up to sign with the lexicographically positive representative
// (first nonzero coordinate positive), sorted, so output is reproducible.
#pragma once

#include "latk/mat.hpp"

#include <map>
#include <vector>

namespace latk {

// all x != 0 (up to sign) with bound <= x G x^T <= -2, keyed by norm
std::map<Int, std::vector<std::vector<Int>>> short_vectors_by_norm(const ZMat& gram,
                                                                   const Int& bound);

// vectors of one exact norm, up to sign
std::vector<std::vector<Int>> vectors_of_norm(const ZMat& gram, const Int& norm);

// number of vectors of the exact norm, counting both signs
Int count_vectors_of_norm(const ZMat& gram, const Int& norm);

}  // namespace latk
