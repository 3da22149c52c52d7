#include "latk/embeddings.hpp"

#include "latk/discform.hpp"
#include "latk/formgroup.hpp"
#include "latk/roots.hpp"
#include "latk/shortvec.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace latk {

namespace {

std::string mat_key(const ZMat& a) {
    std::string s;
    for (int i = 0; i < a.m; ++i)
        for (int j = 0; j < a.n; ++j) {
            s += a(i, j).get_str();
            s += ',';
        }
    return s;
}

// hermite form of the row span (no zero rows)
ZMat row_canon(const ZMat& a) { return hnf(a); }

int factor_rank(const std::pair<char, int>& f) { return f.second; }

// ---------------------------------------------------------------- A targets

// every sub-root-system of A_n is a disjoint union of chains on the n+1
// permutation points, unique up to the symmetric group; consecutive blocks
// of simple roots separated by one skipped node realize it
std::vector<ZMat> embed_in_A(int n, const std::vector<std::pair<char, int>>& factors) {
    int need = 0;
    for (const auto& f : factors) {
        if (f.first != 'A') return {};
        need += f.second + 1;
    }
    if (need - 1 > n) return {};
    int total = 0;
    for (const auto& f : factors) total += f.second;
    ZMat rows(total, n);
    int r = 0, s = 0;
    for (const auto& f : factors) {
        for (int j = 0; j < f.second; ++j) rows(r++, s + j) = 1;
        s += f.second + 1;
    }
    return {rows};
}

// ---------------------------------------------------------------- D targets

// model of D_n: axes 0..n-1, pairing(u, v) = -<u, v>; simple root i < n-1 is
// e_i - e_{i+1}, simple root n-1 is e_{n-2} + e_{n-1}
ZMat model_D(int n) {
    ZMat m(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        m(i, i) = 1;
        m(i, i + 1) = -1;
    }
    m(n - 1, n - 2) = 1;
    m(n - 1, n - 1) = 1;
    return m;
}

// A_k and D_k blocks on disjoint axis intervals classify the sub-root-systems
// of D_n up to the Weyl group, except that when the A blocks use every axis
// the sign of one chain end distinguishes a second class.
std::vector<ZMat> embed_in_D(int n, const std::vector<std::pair<char, int>>& factors) {
    int axes = 0, a_axes = 0, total = 0;
    for (const auto& f : factors) {
        if (f.first == 'A') {
            axes += f.second + 1;
            a_axes += f.second + 1;
        } else if (f.first == 'D') {
            if (f.second < 3) throw std::invalid_argument("embed_in_D: factor D_k needs k >= 3");
            axes += f.second;
        } else {
            return {};
        }
        total += f.second;
    }
    if (axes > n) return {};

    // model rows for the canonical layout; remember the last A chain's end
    ZMat rows(total, n);
    int r = 0, s = 0, last_a_row = -1, last_a_axis = -1;
    for (const auto& f : factors) {
        if (f.first == 'A') {
            for (int j = 0; j < f.second; ++j) {
                rows(r, s + j) = 1;
                rows(r, s + j + 1) = -1;
                ++r;
            }
            last_a_row = r - 1;
            last_a_axis = s + f.second;
            s += f.second + 1;
        } else {
            for (int j = 0; j + 1 < f.second; ++j) {
                rows(r, s + j) = 1;
                rows(r, s + j + 1) = -1;
                ++r;
            }
            rows(r, s + f.second - 2) = 1;
            rows(r, s + f.second - 1) = 1;
            ++r;
            s += f.second;
        }
    }

    std::vector<ZMat> model_reps = {rows};
    if (a_axes == n && last_a_row >= 0) {
        // no axis avoids the A chains: flipping the final chain end is not a
        // Weyl move, giving the second class
        ZMat alt = rows;
        alt(last_a_row, last_a_axis) = 1;
        model_reps.push_back(alt);
    }

    QMat minv = inverse(model_D(n));
    std::vector<ZMat> out;
    for (const ZMat& rep : model_reps) {
        QMat x = QMat(rep) * minv;
        ZMat xi;
        if (!x.to_integral(xi)) throw std::logic_error("embed_in_D: non-integral coordinates");
        out.push_back(xi);
    }
    return out;
}

// ---------------------------------------------------------------- E targets

struct EDfs {
    const ZMat& gram;                     // component gram, n x n
    std::vector<std::vector<Int>> roots;  // both signs
    std::vector<std::vector<long>> pairing;  // root pairing table
    ZMat target;                          // block diagonal factor gram
    std::vector<int> factor_end;          // row index after each factor
    std::vector<int> factor_fork;         // first fork row of a D factor, else -1
    std::vector<int> chosen;
    std::set<std::string> images;
    std::vector<ZMat> reps;

    void build_pairing() {
        int m = static_cast<int>(roots.size()), n = gram.n;
        std::vector<std::vector<Int>> rg(m, std::vector<Int>(n));
        for (int a = 0; a < m; ++a)
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) rg[a][j] += roots[a][i] * gram(i, j);
        pairing.assign(m, std::vector<long>(m));
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) {
                Int s = 0;
                for (int j = 0; j < n; ++j) s += rg[a][j] * roots[b][j];
                pairing[a][b] = pairing[b][a] = s.get_si();
            }
    }

    bool chain_ordered(int row) const {
        // orientation conventions kill tuple-level duplicates of one image
        for (size_t f = 0; f < factor_end.size(); ++f) {
            int end = factor_end[f];
            int begin = f == 0 ? 0 : factor_end[f - 1];
            if (row == end - 1) {
                if (factor_fork[f] >= 0) {
                    if (chosen[factor_fork[f]] > chosen[end - 1]) return false;
                } else if (end - begin >= 2 && chosen[begin] > chosen[end - 1]) {
                    return false;
                }
            }
        }
        return true;
    }

    void descend(int row, int total) {
        if (row == total) {
            ZMat m(total, gram.n);
            for (int i = 0; i < total; ++i)
                for (int j = 0; j < gram.n; ++j) m(i, j) = roots[chosen[i]][j];
            ZMat canon = row_canon(m);
            if (images.insert(mat_key(canon)).second) reps.push_back(m);
            return;
        }
        // the Weyl group moves any root to roots[0], and the stabilizer of a
        // root is transitive on each pairing class, so the first two rows can
        // be pinned to the first admissible candidates
        for (int c = 0; c < static_cast<int>(roots.size()); ++c) {
            bool ok = true;
            for (int i = 0; i < row && ok; ++i)
                if (pairing[chosen[i]][c] != target(i, row).get_si()) ok = false;
            if (!ok) continue;
            chosen[row] = c;
            if (chain_ordered(row)) descend(row + 1, total);
            if (row <= 1) break;
        }
    }
};

// reflection in simple root i as a matrix acting on row vectors
ZMat simple_reflection(const ZMat& gram, int i) {
    ZMat s = ZMat::identity(gram.n);
    for (int j = 0; j < gram.n; ++j) s(j, i) += gram(j, i);
    return s;
}

// partition the found images into Weyl orbits, keeping one representative
std::vector<ZMat> weyl_orbit_dedup(const ZMat& gram, const std::vector<ZMat>& reps) {
    std::vector<ZMat> refl;
    for (int i = 0; i < gram.n; ++i) refl.push_back(simple_reflection(gram, i));
    std::set<std::string> seen;
    std::vector<ZMat> out;
    for (const ZMat& rep : reps) {
        std::string key = mat_key(row_canon(rep));
        if (seen.count(key)) continue;
        out.push_back(rep);
        std::vector<ZMat> frontier = {row_canon(rep)};
        seen.insert(key);
        while (!frontier.empty()) {
            std::vector<ZMat> next;
            for (const ZMat& cur : frontier)
                for (const ZMat& s : refl) {
                    ZMat img = row_canon(cur * s);
                    if (seen.insert(mat_key(img)).second) next.push_back(img);
                }
            frontier = std::move(next);
        }
    }
    return out;
}

std::vector<ZMat> embed_in_E(int n, const std::vector<std::pair<char, int>>& factors) {
    int total = 0;
    for (const auto& f : factors) total += f.second;
    if (total > n) return {};

    Lattice comp = named("E" + std::to_string(n));
    if (total == n) {
        // a full-rank sub-root-system of different type spans a proper
        // finite-index sublattice, never primitive in any even overlattice
        if (factors.size() == 1 && factors[0].first == 'E' && factors[0].second == n)
            return {ZMat::identity(n)};
        return {};
    }

    EDfs dfs{comp.gram, {}, {}, ZMat(total, total), {}, {}, {}, {}, {}};
    int at = 0;
    for (const auto& f : factors) {
        Lattice fl = named(std::string(1, f.first) + std::to_string(f.second));
        for (int i = 0; i < f.second; ++i)
            for (int j = 0; j < f.second; ++j) dfs.target(at + i, at + j) = fl.gram(i, j);
        at += f.second;
        dfs.factor_end.push_back(at);
        dfs.factor_fork.push_back(f.first == 'D' ? at - 2 : -1);
    }
    for (const auto& v : vectors_of_norm(comp.gram, Int(-2))) {
        dfs.roots.push_back(v);
        std::vector<Int> neg(v.size());
        for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        dfs.roots.push_back(neg);
    }
    dfs.build_pairing();
    dfs.chosen.resize(total);
    dfs.descend(0, total);
    return weyl_orbit_dedup(comp.gram, dfs.reps);
}

}  // namespace

std::vector<ZMat> component_embeddings(char letter, int n,
                                       const std::vector<std::pair<char, int>>& factors,
                                       const SearchBudget&) {
    if (factors.empty()) throw std::invalid_argument("component_embeddings: no factors");
    int total = 0;
    for (const auto& f : factors) total += factor_rank(f);

    if (letter == 'A') {
        if (total > n) return {};
        if (total == n) {
            if (factors.size() == 1 && factors[0] == std::make_pair('A', n))
                return {ZMat::identity(n)};
            return {};
        }
        return embed_in_A(n, factors);
    }
    if (letter == 'D') {
        if (total > n) return {};
        if (total == n && factors.size() == 1 && factors[0] == std::make_pair('D', n))
            return {ZMat::identity(n)};
        auto reps = embed_in_D(n, factors);
        if (total == n) {
            // keep only images spanning a primitive sublattice of the
            // component; full-rank proper sub-root-systems never do
            std::vector<ZMat> kept;
            for (const auto& r : reps)
                if (index_in(ZMat::identity(n), r) == 1) kept.push_back(r);
            return kept;
        }
        return reps;
    }
    if (letter == 'E') return embed_in_E(n, factors);
    throw std::invalid_argument("component_embeddings: bad component type");
}

std::vector<ZMat> ade_embeddings(const Lattice& S, const Lattice& R) {
    RootSystem rs = root_type(S.gram);
    RootSystem rr = root_type(R.gram);
    if (rs.components.size() != 1 || rr.components.size() != 1)
        throw std::invalid_argument("ade_embeddings: both lattices must be irreducible ADE");
    auto check_cartan = [](const Lattice& L, const std::pair<char, int>& c) {
        if (L.rank() != c.second ||
            L.gram != named(std::string(1, c.first) + std::to_string(c.second)).gram)
            throw std::invalid_argument("ade_embeddings: lattice not in Cartan basis");
    };
    check_cartan(S, rs.components[0]);
    check_cartan(R, rr.components[0]);

    std::vector<ZMat> out;
    for (const auto& rows :
         component_embeddings(rr.components[0].first, rr.components[0].second, rs.components))
        if (is_primitive_rows(rows)) out.push_back(rows);
    return out;
}

Lattice nishiyama_partner(const Lattice& T) {
    bool shaped = T.rank() == 3 && T.gram(0, 0) == 0 && T.gram(1, 1) == 0 &&
                  T.gram(0, 1) == 1 && T.gram(1, 0) == 1 && T.gram(0, 2) == 0 &&
                  T.gram(2, 0) == 0 && T.gram(1, 2) == 0 && T.gram(2, 1) == 0 &&
                  T.gram(2, 2) > 0 && T.gram(2, 2) % 2 == 0;
    if (!shaped)
        throw std::invalid_argument("nishiyama_partner: input must have Gram U + [t], t > 0 even");
    Int t = T.gram(2, 2);

    Lattice e8 = named("E8");
    Fqf want = disc_group(T).form;
    for (const auto& v : vectors_of_norm(e8.gram, -t)) {
        ZMat row(1, 8);
        for (int j = 0; j < 8; ++j) row(0, j) = v[j];
        if (!is_primitive_rows(row)) continue;
        ZMat comp = orth_complement_rows(e8.gram, row);
        ZMat g = gram_of_rows(e8.gram, comp);
        Lattice cand("", g);
        if (!fqf_is_isomorphic(disc_group(cand).form, want)) continue;
        RootSystem rt = root_type(g);
        QuotientShape q = quotient_shape(7, rt.root_basis());
        if (q.free_rank == 0 && q.torsion.empty()) cand.label = rt.type_string();
        return cand;
    }
    throw std::invalid_argument("nishiyama_partner: no partner with the required invariants");
}

}  // namespace latk
