#include "latk/formgroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latk {

std::vector<std::vector<Int>> fqf_elements(const Fqf& q, const Int& bound) {
    if (q.order() > bound) throw std::invalid_argument("fqf_elements: group exceeds bound");
    int k = q.ngens();
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(k, Int(0));
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0) {
            cur[i] += 1;
            if (cur[i] < q.orders[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

ZMat subgroup_lattice(const Fqf& q, const ZMat& gens) {
    int k = q.ngens();
    if (gens.m > 0 && gens.n != k) throw std::invalid_argument("subgroup_lattice: shape");
    ZMat D(k, k);
    for (int i = 0; i < k; ++i) D(i, i) = q.orders[i];
    ZMat stacked = gens.m > 0 ? gens.vstack(D) : D;
    return hnf(stacked);
}

ZMat full_lattice(const Fqf& q) { return ZMat::identity(q.ngens()); }

ZMat zero_lattice(const Fqf& q) {
    int k = q.ngens();
    ZMat D(k, k);
    for (int i = 0; i < k; ++i) D(i, i) = q.orders[i];
    return D;
}

Int subgroup_order(const Fqf& q, const ZMat& sub) {
    int k = q.ngens();
    if (sub.m != k || sub.n != k) throw std::invalid_argument("subgroup_order: not a subgroup basis");
    Int covol = 1;
    for (int i = 0; i < k; ++i) covol *= sub(i, i);
    return q.order() / covol;
}

bool subgroup_contains(const ZMat& big, const ZMat& small) {
    return hnf(big.vstack(small)) == hnf(big);
}

SubquotientBasis quotient_structure(const Fqf& q, const ZMat& big, const ZMat& small) {
    int k = q.ngens();
    SubquotientBasis out;
    out.gens = ZMat(0, k);
    if (k == 0) return out;
    QMat Cq = QMat(small) * inverse(QMat(big));
    ZMat C;
    if (!Cq.to_integral(C)) throw std::invalid_argument("quotient_structure: small not inside big");
    ZMat U, V;
    ZMat E = snf(C, U, V);
    ZMat Vi;
    if (!inverse(V).to_integral(Vi)) throw std::logic_error("quotient_structure: V not unimodular");
    ZMat G = Vi * big;
    std::vector<int> kept;
    for (int i = 0; i < k; ++i)
        if (E(i, i) > 1) kept.push_back(i);
    out.gens = ZMat(static_cast<int>(kept.size()), k);
    for (int r = 0; r < out.gens.m; ++r) {
        out.orders.push_back(E(kept[r], kept[r]));
        out.gens.set_row(r, q.reduce(G.row_vec(kept[r])));
    }
    return out;
}

ZMat orth_subgroup(const Fqf& q, const ZMat& sub) {
    int k = q.ngens();
    if (k == 0) return ZMat(0, 0);
    // pairing matrix of generators, diagonal reduced into Q/Z
    QMat Bm(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) Bm(i, j) = (i == j) ? mod_rat(q.vals(i, i), 1) : q.vals(i, j);
    QMat P = Bm * QMat(sub).transpose();
    std::vector<Int> dens(k, Int(1));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) dens[j] = lcm(dens[j], P(i, j).get_den());
    ZMat A(2 * k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rat scaled = P(i, j) * Rat(dens[j]);
            A(i, j) = scaled.get_num();
            A(k + i, j) = (i == j) ? dens[j] : Int(0);
        }
    ZMat K = kernel_z(A);
    ZMat Y(K.m, k);
    for (int r = 0; r < K.m; ++r)
        for (int j = 0; j < k; ++j) Y(r, j) = K(r, j);
    return subgroup_lattice(q, Y);
}

bool is_isotropic_subgroup(const Fqf& q, const ZMat& sub) {
    SubquotientBasis gs = quotient_structure(q, sub, zero_lattice(q));
    for (int i = 0; i < gs.gens.m; ++i) {
        if (q.q(gs.gens.row_vec(i)) != 0) return false;
        for (int j = i + 1; j < gs.gens.m; ++j)
            if (q.b(gs.gens.row_vec(i), gs.gens.row_vec(j)) != 0) return false;
    }
    return true;
}

Fqf subquotient_form(const Fqf& q, const ZMat& big, const ZMat& small,
                     SubquotientBasis* basis_out) {
    if (!is_isotropic_subgroup(q, small))
        throw std::invalid_argument("subquotient_form: small not isotropic");
    if (!subgroup_contains(big, small))
        throw std::invalid_argument("subquotient_form: small not inside big");
    if (!subgroup_contains(orth_subgroup(q, small), big))
        throw std::invalid_argument("subquotient_form: big not orthogonal to small");
    SubquotientBasis bs = quotient_structure(q, big, small);
    int k = bs.gens.m;
    QMat v(k, k);
    for (int i = 0; i < k; ++i) {
        v(i, i) = q.q(bs.gens.row_vec(i));
        for (int j = i + 1; j < k; ++j) v(i, j) = v(j, i) = q.b(bs.gens.row_vec(i), bs.gens.row_vec(j));
    }
    if (basis_out) *basis_out = bs;
    return Fqf(bs.orders, std::move(v));
}

namespace {

std::vector<Int> invariant_factors(std::vector<Int> orders) {
    int k = static_cast<int>(orders.size());
    if (k == 0) return {};
    ZMat D(k, k);
    for (int i = 0; i < k; ++i) D(i, i) = orders[i];
    ZMat U, V;
    ZMat E = snf(D, U, V);
    std::vector<Int> out;
    for (int i = 0; i < k; ++i)
        if (E(i, i) > 1) out.push_back(E(i, i));
    return out;
}

std::vector<Rat> q_multiset(const Fqf& q, const Int& bound, int sign) {
    std::vector<Rat> vals;
    for (const auto& x : fqf_elements(q, bound)) {
        Rat v = q.q(x);
        vals.push_back(sign > 0 ? v : mod_rat(-v, 2));
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

// backtracking search for generator-image matrices A with
// q2(x A) = sign * q1(x); collects one witness or all of them
struct IsoSearch {
    const Fqf& q1;
    const Fqf& q2;
    int sign;
    bool all;
    Int bound;

    std::vector<std::vector<Int>> elems;  // elements of q2
    std::vector<int> perm;                // placement order of q1 generators
    std::vector<std::vector<int>> cands;  // candidate element indexes per slot
    std::vector<std::vector<Int>> placed; // images in placement order
    std::vector<ZMat> found;

    bool run() {
        int k1 = q1.ngens();
        if (invariant_factors(q1.orders) != invariant_factors(q2.orders)) return false;
        if (q_multiset(q1, bound, sign) != q_multiset(q2, bound, 1)) return false;
        elems = fqf_elements(q2, bound);

        std::vector<Int> eord(elems.size());
        std::vector<Rat> eq(elems.size());
        for (size_t e = 0; e < elems.size(); ++e) {
            eord[e] = q2.elem_order(elems[e]);
            eq[e] = q2.q(elems[e]);
        }
        cands.assign(k1, {});
        for (int i = 0; i < k1; ++i) {
            Rat target = sign > 0 ? q1.vals(i, i) : mod_rat(-q1.vals(i, i), 2);
            for (size_t e = 0; e < elems.size(); ++e)
                if (eord[e] == q1.orders[i] && eq[e] == target)
                    cands[i].push_back(static_cast<int>(e));
        }
        perm.resize(k1);
        for (int i = 0; i < k1; ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(),
                  [&](int a, int b) { return cands[a].size() < cands[b].size(); });
        dfs(0);
        return !found.empty();
    }

    void dfs(int depth) {
        int k1 = q1.ngens();
        if (!all && !found.empty()) return;
        if (depth == k1) {
            ZMat A(k1, q2.ngens());
            for (int d = 0; d < k1; ++d) A.set_row(perm[d], placed[d]);
            if (subgroup_order(q2, subgroup_lattice(q2, A)) == q2.order()) found.push_back(A);
            return;
        }
        int gi = perm[depth];
        for (int e : cands[gi]) {
            const std::vector<Int>& y = elems[e];
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                Rat target = q1.vals(gi, perm[d]);
                if (sign < 0) target = mod_rat(-target, 1);
                if (q2.b(y, placed[d]) != target) ok = false;
            }
            if (!ok) continue;
            placed.push_back(y);
            // partial injectivity: placed images must span the right order
            Int expect = 1;
            for (int d = 0; d <= depth; ++d) expect *= q1.orders[perm[d]];
            ZMat X(depth + 1, q2.ngens());
            for (int d = 0; d <= depth; ++d) X.set_row(d, placed[d]);
            if (subgroup_order(q2, subgroup_lattice(q2, X)) == expect) dfs(depth + 1);
            placed.pop_back();
            if (!all && !found.empty()) return;
        }
    }
};

std::vector<ZMat> find_isos(const Fqf& q1, const Fqf& q2, int sign, bool all, const Int& bound) {
    IsoSearch s{q1, q2, sign, all, bound, {}, {}, {}, {}, {}};
    s.run();
    return std::move(s.found);
}

}  // namespace

bool fqf_is_isomorphic(const Fqf& q1, const Fqf& q2, ZMat* witness) {
    auto w = find_isos(q1, q2, 1, false, Int(1) << 20);
    if (w.empty()) return false;
    if (witness) *witness = w.front();
    return true;
}

bool fqf_anti_isometric(const Fqf& q1, const Fqf& q2, ZMat* witness) {
    auto w = find_isos(q1, q2, -1, false, Int(1) << 20);
    if (w.empty()) return false;
    if (witness) *witness = w.front();
    return true;
}

std::vector<ZMat> fqf_all_anti_isometries(const Fqf& q1, const Fqf& q2, const Int& bound) {
    return find_isos(q1, q2, -1, true, bound);
}

std::vector<ZMat> fqf_orthogonal_group(const Fqf& q, const Int& bound) {
    return find_isos(q, q, 1, true, bound);
}

Lattice glue_overlattice(const Lattice& M, const Lattice& N, const QMat& graph,
                         ZMat* emb_m, ZMat* emb_n) {
    int m = M.rank(), n = N.rank(), d = m + n;
    if (graph.m > 0 && graph.n != d) throw std::invalid_argument("glue_overlattice: graph shape");
    ZMat Gamb(d, d);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) Gamb(i, j) = M.gram(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Gamb(m + i, m + j) = N.gram(i, j);

    Int s = 1;
    for (int i = 0; i < graph.m; ++i)
        for (int j = 0; j < d; ++j) s = lcm(s, graph(i, j).get_den());
    ZMat B0(d + graph.m, d);
    for (int i = 0; i < d; ++i) B0(i, i) = s;
    for (int i = 0; i < graph.m; ++i)
        for (int j = 0; j < d; ++j)
            B0(d + i, j) = graph(i, j).get_num() * (s / graph(i, j).get_den());
    ZMat H = hnf(B0);
    if (H.m != d) throw std::logic_error("glue_overlattice: basis rank");
    QMat B(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            B(i, j) = Rat(H(i, j), s);
            B(i, j).canonicalize();
        }

    QMat Gq = B * QMat(Gamb) * B.transpose();
    ZMat G;
    if (!Gq.to_integral(G))
        throw std::invalid_argument("glue_overlattice: glue vectors not integral for the form");
    for (int i = 0; i < d; ++i)
        if (G(i, i) % 2 != 0) throw std::invalid_argument("glue_overlattice: overlattice not even");

    if (emb_m || emb_n) {
        ZMat Bi;
        if (!inverse(B).to_integral(Bi)) throw std::logic_error("glue_overlattice: sum not inside");
        if (emb_m) {
            *emb_m = ZMat(m, d);
            for (int i = 0; i < m; ++i) emb_m->set_row(i, Bi.row_vec(i));
        }
        if (emb_n) {
            *emb_n = ZMat(n, d);
            for (int i = 0; i < n; ++i) emb_n->set_row(i, Bi.row_vec(m + i));
        }
    }
    return Lattice("glue(" + M.label + ", " + N.label + ")", G);
}

}  // namespace latk
