// Group-level machinery on finite quadratic forms: element enumeration,
// subgroups and subquotients, isomorphism and anti-isometry witnesses,
// orthogonal groups, and the overlattice gluing calculus.
#pragma once

#include "latk/discform.hpp"

#include <optional>

namespace latk {

// all group elements as reduced coefficient vectors, lexicographic order;
// throws if the group order exceeds the bound
std::vector<std::vector<Int>> fqf_elements(const Fqf& q, const Int& bound = Int(1) << 20);

// A subgroup is canonically the integer row lattice L with D Z^k <= L <= Z^k,
// D = diag(orders); stored as its k x k HNF basis.
ZMat subgroup_lattice(const Fqf& q, const ZMat& gens);
ZMat full_lattice(const Fqf& q);   // Z^k (identity basis)
ZMat zero_lattice(const Fqf& q);   // D itself
Int subgroup_order(const Fqf& q, const ZMat& sub);
bool subgroup_contains(const ZMat& big, const ZMat& small);

// independent generators (rows, reduced) and their orders for big/small
struct SubquotientBasis {
    std::vector<Int> orders;  // ascending divisibility, all > 1
    ZMat gens;                // rows in ambient coefficients
};
SubquotientBasis quotient_structure(const Fqf& q, const ZMat& big, const ZMat& small);

// orthogonal complement {y : b(y, h) = 0 for all h in sub} as a subgroup
ZMat orth_subgroup(const Fqf& q, const ZMat& sub);
bool is_isotropic_subgroup(const Fqf& q, const ZMat& sub);

// induced form on big/small; requires small isotropic and big <= small^perp
Fqf subquotient_form(const Fqf& q, const ZMat& big, const ZMat& small,
                     SubquotientBasis* basis_out = nullptr);

// isomorphism witness A (rows = images of q1 generators in q2 coefficients)
// with q2(x A) = q1(x); complete decision for group order <= 2^13
bool fqf_is_isomorphic(const Fqf& q1, const Fqf& q2, ZMat* witness = nullptr);
// anti-isometry: q2(x A) = -q1(x)
bool fqf_anti_isometric(const Fqf& q1, const Fqf& q2, ZMat* witness = nullptr);
// all anti-isometries (bounded enumeration; pipeline groups are tiny)
std::vector<ZMat> fqf_all_anti_isometries(const Fqf& q1, const Fqf& q2,
                                          const Int& bound = Int(1) << 22);

// full orthogonal group as generator-image matrices; throws past the bound
std::vector<ZMat> fqf_orthogonal_group(const Fqf& q, const Int& bound = Int(1) << 22);

// Even overlattice glued from M + N along the isotropic graph whose rows are
// rational vectors in (M + N) tensor Q (each row in M^sharp x N^sharp).
// Returns L with basis expressed in the ambient coordinates internally;
// emb_m/emb_n receive the rows of M resp. N inside the returned basis.
Lattice glue_overlattice(const Lattice& M, const Lattice& N, const QMat& graph,
                         ZMat* emb_m = nullptr, ZMat* emb_n = nullptr);

}  // namespace latk
