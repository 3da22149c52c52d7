// Finite quadratic forms on finite abelian groups, with exact values:
// q takes values in Q/2Z (stored reduced into [0,2)) and the associated
// bilinear form b in Q/Z (stored in [0,1)). Elements are integer coefficient
// vectors over a fixed generator list. The discriminant group of an even
// nondegenerate lattice carries such a form; elementary blocks u_k, v_k,
// w^eps_{p,k} and their canonical symbols provide normal forms.
#pragma once

#include "latk/lattice.hpp"

#include <string>
#include <vector>

namespace latk {

struct Fqf {
    std::vector<Int> orders;  // order > 1 of each generator; group = direct sum
    // vals(i,i) = q(g_i) in [0,2); vals(i,j) = b(g_i,g_j) in [0,1) for i != j
    QMat vals;

    Fqf() = default;
    Fqf(std::vector<Int> ords, QMat v);

    int ngens() const { return static_cast<int>(orders.size()); }
    bool trivial() const { return orders.empty(); }
    Int order() const;

    std::vector<Int> reduce(std::vector<Int> x) const;
    Rat q(const std::vector<Int>& x) const;
    Rat b(const std::vector<Int>& x, const std::vector<Int>& y) const;
    Int elem_order(const std::vector<Int>& x) const;

    Fqf direct_sum(const Fqf& other) const;
    Fqf negated() const;
    Fqf prime_part(const Int& p) const;
    std::vector<Int> primes() const;  // ascending

    // checks symmetry, value ranges, and well-definedness w.r.t. orders
    void check() const;
};

// Discriminant group L^sharp = L^dual / L of an even nondegenerate lattice,
// with rational lifts of the generators into L tensor Q.
struct DiscGroup {
    Lattice lat;
    std::vector<Int> orders;  // invariant factors > 1, ascending divisibility
    QMat gens;                // rows: lifts of the generators
    Fqf form;
    ZMat coord_map;           // integer matrix with coords(x) = x * coord_map

    // coefficient vector (reduced mod orders) of an element of L^sharp
    std::vector<Int> coords(const std::vector<Rat>& x) const;
    std::vector<Rat> lift(const std::vector<Int>& c) const;
};

DiscGroup disc_group(const Lattice& L);

// image of an isometry f of L in O(L^sharp): row i = coords of g_i * f
ZMat disc_action(const DiscGroup& D, const ZMat& f);

// true if the matrix rows define an automorphism of the group preserving q
bool is_form_automorphism(const Fqf& q, const ZMat& A);
// composition and identity for generator-image matrices over q
ZMat form_compose(const Fqf& q, const ZMat& A, const ZMat& B);  // x -> (xA)B
bool form_equal(const Fqf& q, const ZMat& A, const ZMat& B);

// Elementary finite quadratic forms.
Fqf fqf_u(int k);                                // on (Z/2^k)^2, q = 0 on gens
Fqf fqf_v(int k);                                // q(gens) = 2/2^k
Fqf fqf_w(const Int& p, int k, const Int& eps);  // cyclic p^k

struct FqfBlock {
    char kind;  // 'u', 'v', 'w'
    Int p;      // 2 for u/v
    int k;      // scale exponent, order p^k
    Int eps;    // for w: unit class; odd p in {1,-1}, p = 2 in {1,3,5,7}

    Fqf form() const;
    bool operator==(const FqfBlock& o) const = default;
};

// orthogonal splitting into elementary blocks (decomposition order arbitrary)
std::vector<FqfBlock> elementary_decomposition(const Fqf& q);

// canonical symbol: decomposition normalized by the same-scale relations
// (2u = 2v; same-scale pair trades preserving the product and sum of the
// units mod 8; the scale-one triple trades), then sorted deterministically
std::vector<FqfBlock> normal_form_blocks(const Fqf& q);
std::string render_blocks(const std::vector<FqfBlock>& blocks);
std::string normal_form_string(const Fqf& q);

Fqf fqf_from_blocks(const std::vector<FqfBlock>& blocks);

}  // namespace latk
