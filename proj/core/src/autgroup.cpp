#include "latk/autgroup.hpp"

#include "latk/lattice.hpp"
#include "latk/shortvec.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

namespace latk {

namespace {

// Invariant vector classes spanning the lattice: all roots, plus short
// vectors of the saturated orthogonal complement of the root span, with the
// norm bound raised until the classes span. Every class is stable under the
// full isometry group, so backtracking may restrict images to them.
struct Universe {
    ZMat gram;
    int n = 0;
    std::vector<std::vector<Int>> vecs;     // both signs, lex sorted
    std::map<std::vector<Int>, int> index;  // vec -> position
    ZMat pg;                                // pg(i,j) = <v_i, v_j>
    std::vector<std::vector<Int>> keys;     // distinct profile keys, sorted
    std::vector<int> key_of;                // per vec, index into keys
};

std::vector<std::vector<Int>> collect_spanning(const ZMat& g) {
    int d = g.m;
    std::vector<std::vector<Int>> out;
    if (d == 0) return out;
    Int bound = 0;
    while (true) {
        bound -= 2;
        auto classes = short_vectors_by_norm(g, bound);
        out.clear();
        ZMat m(0, d);
        for (const auto& [norm, vs] : classes)
            for (const auto& v : vs) out.push_back(v);
        if (!out.empty()) {
            ZMat span(int(out.size()), d);
            for (int i = 0; i < span.m; ++i) span.set_row(i, out[i]);
            if (rank_of(span) == d) return out;
        }
    }
}

Universe build_universe(const ZMat& gram) {
    Universe u;
    u.gram = gram;
    u.n = gram.m;
    if (u.n == 0) return u;
    for (int i = 0; i < u.n; ++i)
        if (gram(i, i) > -2)
            throw std::invalid_argument("isometry search needs a negative definite gram");

    auto roots = vectors_of_norm(gram, Int(-2));
    std::vector<std::vector<Int>> reps = roots;
    ZMat rmat(int(roots.size()), u.n);
    for (int i = 0; i < rmat.m; ++i) rmat.set_row(i, roots[i]);
    int rspan = roots.empty() ? 0 : rank_of(rmat);
    if (rspan < u.n) {
        ZMat comp = roots.empty() ? ZMat::identity(u.n) : orth_complement_rows(gram, rmat);
        ZMat cg = gram_of_rows(gram, comp);
        for (const auto& cv : collect_spanning(cg)) reps.push_back(cv * comp);
    }

    for (const auto& v : reps) {
        u.vecs.push_back(v);
        std::vector<Int> neg(v.size());
        for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        u.vecs.push_back(neg);
    }
    std::sort(u.vecs.begin(), u.vecs.end());
    for (size_t i = 0; i < u.vecs.size(); ++i) u.index[u.vecs[i]] = int(i);

    int sz = int(u.vecs.size());
    ZMat vm(sz, u.n);
    for (int i = 0; i < sz; ++i) vm.set_row(i, u.vecs[i]);
    u.pg = vm * gram * vm.transpose();

    // profile of v: own norm, then the histogram of (norm(u), <v,u>) over the
    // whole universe; invariant under every isometry
    std::map<std::vector<Int>, std::vector<int>> grouped;
    for (int i = 0; i < sz; ++i) {
        std::map<std::pair<Int, Int>, long> hist;
        for (int j = 0; j < sz; ++j) ++hist[{u.pg(j, j), u.pg(i, j)}];
        std::vector<Int> key{u.pg(i, i)};
        for (const auto& [pk, c] : hist) {
            key.push_back(pk.first);
            key.push_back(pk.second);
            key.push_back(Int(c));
        }
        grouped[key].push_back(i);
    }
    u.key_of.assign(sz, -1);
    for (const auto& [key, members] : grouped) {
        int id = int(u.keys.size());
        u.keys.push_back(key);
        for (int i : members) u.key_of[i] = id;
    }
    return u;
}

// Independent spanning base. Vectors pairing nontrivially with the ones
// already chosen are preferred so image constraints bind at every level;
// ties go to the smaller fingerprint class.
std::vector<int> choose_base(const Universe& u) {
    std::vector<long> class_size(u.keys.size(), 0);
    for (int k : u.key_of) ++class_size[k];
    int sz = int(u.vecs.size());
    std::vector<int> base;
    std::vector<char> used(sz, 0);
    while (int(base.size()) < u.n) {
        int best = -1;
        long best_links = -1, best_class = 0;
        for (int i = 0; i < sz; ++i) {
            if (used[i]) continue;
            long links = 0;
            for (int b : base)
                if (u.pg(i, b) != 0) ++links;
            if (best >= 0) {
                if (links < best_links) continue;
                if (links == best_links && class_size[u.key_of[i]] >= best_class) continue;
            }
            ZMat trial(int(base.size()) + 1, u.n);
            for (size_t r = 0; r < base.size(); ++r) trial.set_row(int(r), u.vecs[base[r]]);
            trial.set_row(int(base.size()), u.vecs[i]);
            if (rank_of(trial) != trial.m) {
                used[i] = 1;
                continue;
            }
            best = i;
            best_links = links;
            best_class = class_size[u.key_of[i]];
        }
        if (best < 0) throw std::logic_error("universe does not span");
        used[best] = 1;
        base.push_back(best);
    }
    return base;
}

struct Searcher {
    const Universe* src;
    const Universe* dst;
    SearchBudget budget;
    std::vector<int> base;
    QMat binv;
    std::vector<std::vector<int>> cands;  // per level, profile-matched dst indexes
    std::vector<int> img;
    ZMat out;
    long long nodes = 0;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Searcher(const Universe& s, const Universe& d, const SearchBudget& b)
        : src(&s), dst(&d), budget(b) {
        base = choose_base(s);
        ZMat bm(s.n, s.n);
        for (int i = 0; i < s.n; ++i) bm.set_row(i, s.vecs[base[i]]);
        binv = inverse(bm);
        cands.resize(base.size());
        std::map<std::vector<Int>, std::vector<int>> dst_by_key;
        for (size_t i = 0; i < d.vecs.size(); ++i)
            dst_by_key[d.keys[d.key_of[i]]].push_back(int(i));
        for (size_t l = 0; l < base.size(); ++l) {
            auto it = dst_by_key.find(s.keys[s.key_of[base[l]]]);
            if (it != dst_by_key.end()) cands[l] = it->second;
        }
        img.assign(base.size(), -1);
    }

    void tick() {
        ++nodes;
        if (budget.max_nodes && nodes > budget.max_nodes)
            throw BudgetExceeded("isometry search: node budget exhausted");
        if (budget.seconds > 0 && (nodes & 63) == 0) {
            double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (el > budget.seconds) throw BudgetExceeded("isometry search: time budget exhausted");
        }
    }

    // restrict candidate lists at levels > placed to vectors compatible with
    // base[placed] -> w; false when some deeper level runs dry
    bool refine(const std::vector<std::vector<int>>& lists, size_t placed, int w,
                std::vector<std::vector<int>>& out) const {
        out.assign(base.size(), {});
        for (size_t j = placed + 1; j < base.size(); ++j) {
            const Int& target = src->pg(base[j], base[placed]);
            for (int v : lists[j])
                if (dst->pg(v, w) == target) out[j].push_back(v);
            if (out[j].empty()) return false;
        }
        return true;
    }

    bool dfs(size_t l, const std::vector<std::vector<int>>& lists) {
        tick();
        if (l == base.size()) return finish();
        for (int w : lists[l]) {
            img[l] = w;
            std::vector<std::vector<int>> next;
            if (refine(lists, l, w, next) && dfs(l + 1, next)) return true;
        }
        img[l] = -1;
        return false;
    }

    bool finish() {
        ZMat im(int(base.size()), dst->n);
        for (size_t i = 0; i < base.size(); ++i) im.set_row(int(i), dst->vecs[img[i]]);
        QMat a = binv * QMat(im);
        ZMat az;
        if (!a.to_integral(az)) return false;
        ZMat back = az * dst->gram * az.transpose();
        if (!(back == src->gram)) throw std::logic_error("isometry search produced a non-isometry");
        out = az;
        return true;
    }
};

}  // namespace

AutGroup automorphism_group(const ZMat& gram, const SearchBudget& budget) {
    AutGroup g;
    if (gram.m == 0) return g;
    if (gram.m != gram.n || !gram.is_symmetric())
        throw std::invalid_argument("automorphism_group: gram must be symmetric");
    Universe u = build_universe(gram);
    Searcher s(u, u, budget);

    for (int level = int(s.base.size()) - 1; level >= 0; --level) {
        std::vector<std::vector<int>> lists = s.cands;
        for (int j = 0; j < level; ++j) {
            s.img[j] = s.base[j];
            std::vector<std::vector<int>> next;
            if (!s.refine(lists, size_t(j), s.base[j], next))
                throw std::logic_error("identity prefix became infeasible");
            lists = std::move(next);
        }
        int b = s.base[level];
        std::set<int> orbit{b};
        auto close = [&](std::vector<int> frontier) {
            while (!frontier.empty()) {
                int p = frontier.back();
                frontier.pop_back();
                for (const ZMat& a : g.generators) {
                    auto w = u.vecs[p] * a;
                    int q = u.index.at(w);
                    if (orbit.insert(q).second) frontier.push_back(q);
                }
            }
        };
        close({b});
        for (int w : lists[level]) {
            if (orbit.count(w)) continue;
            s.img[level] = w;
            std::vector<std::vector<int>> next;
            if (s.refine(lists, size_t(level), w, next) && s.dfs(size_t(level) + 1, next)) {
                g.generators.push_back(s.out);
                orbit.insert(w);
                close(std::vector<int>(orbit.begin(), orbit.end()));
            }
        }
        g.order *= Int(long(orbit.size()));
    }
    return g;
}

bool is_isometric(const ZMat& g1, const ZMat& g2, ZMat* witness, const SearchBudget& budget) {
    if (g1.m != g2.m) return false;
    if (g1 == g2) {
        if (witness) *witness = ZMat::identity(g1.m);
        return true;
    }
    if (g1.m == 0) {
        if (witness) *witness = ZMat(0, 0);
        return true;
    }
    if (det(g1) != det(g2)) return false;
    Universe u1 = build_universe(g1);
    Universe u2 = build_universe(g2);
    // profile multisets must agree; each key carries norms and pair counts
    {
        std::map<std::vector<Int>, long> h1, h2;
        for (int k : u1.key_of) ++h1[u1.keys[k]];
        for (int k : u2.key_of) ++h2[u2.keys[k]];
        if (h1 != h2) return false;
    }
    Searcher s(u1, u2, budget);
    for (size_t l = 0; l < s.base.size(); ++l)
        if (s.cands[l].empty()) return false;
    if (!s.dfs(0, s.cands)) return false;
    if (witness) *witness = s.out;
    return true;
}

}  // namespace latk
