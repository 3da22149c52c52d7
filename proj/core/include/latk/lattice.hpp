// Integral lattices given by Gram matrices, and exact sublattice calculus.
//
// A lattice is Z^n with the symmetric bilinear form x * G * y^T. Sublattices
// are row matrices of basis vectors in the coordinates of the ambient
// lattice. ADE names denote the negative definite root lattices, U the even
// unimodular hyperbolic plane, [k] the rank-one lattice with gram (k), and
// L(s) the same module with the form scaled by s.
#pragma once

#include "latk/mat.hpp"

#include <optional>
#include <string>
#include <utility>

namespace latk {

struct Lattice {
    std::string label;
    ZMat gram;

    Lattice() = default;
    Lattice(std::string lab, ZMat g) : label(std::move(lab)), gram(std::move(g)) {}

    int rank() const { return gram.n; }
    Int det() const { return latk::det(gram); }
    bool is_even() const;
    bool is_degenerate() const { return det() == 0; }
    Inertia signature() const { return inertia(QMat(gram)); }
    bool is_negative_definite() const;

    Lattice rescaled(const Int& s) const;
    Lattice negated() const { return rescaled(-1); }
    Lattice direct_sum(const Lattice& other) const;
};

// DSL: sums of U, A<n>, D<n>, E6/E7/E8, [k]; optional (s) rescale and ^r
// repetition per summand, e.g. "U(2) + E8(2)", "D5 + A2", "[-12]", "E8^3".
Lattice from_dsl(const std::string& text);
Lattice named(const std::string& name);  // single summand, no '+'

// gram of the sublattice spanned by rows S: S * G * S^T
ZMat gram_of_rows(const ZMat& G, const ZMat& S);

// saturation of the row span of S inside Z^n (independent of any form)
ZMat saturate_rows(const ZMat& S);

// true if row span of S is a primitive (saturated) sublattice
bool is_primitive_rows(const ZMat& S);

// {x in Z^n : x G s^T = 0 for all rows s of S}; saturated. G nondegenerate.
ZMat orth_complement_rows(const ZMat& G, const ZMat& S);

// invariant sublattice of the isometry f (rows), saturated
ZMat invariant_rows(const ZMat& f);

// coinvariant = orthogonal complement of the invariant sublattice
ZMat coinvariant_rows(const ZMat& G, const ZMat& f);

// index of rowspace(sub) in rowspace(sup); both must span the same Q-space
Int index_in(const ZMat& sup, const ZMat& sub);

// checks A * G * A^T = G
bool is_isometry_matrix(const ZMat& G, const ZMat& A);

// order of A as a matrix (throws if it exceeds the bound)
int matrix_order(const ZMat& A, int bound = 1000);

}  // namespace latk
