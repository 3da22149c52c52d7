#include "latk/niemeier.hpp"

#include "latk/int.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace latk {

namespace {

struct GlueSpec {
    std::vector<std::pair<char, int>> comps;
    long h;
    std::vector<std::vector<int>> gens;  // one glue label per component
};

// all cyclic shifts of w[lo..hi), the rest fixed
void push_cycled(std::vector<std::vector<int>>& out, const std::vector<int>& w, int lo, int hi) {
    int k = hi - lo;
    for (int s = 0; s < k; ++s) {
        std::vector<int> v = w;
        for (int i = 0; i < k; ++i) v[lo + i] = w[lo + (i + s) % k];
        out.push_back(v);
    }
}

std::vector<std::vector<int>> cycled(const std::vector<int>& w, int lo, int hi) {
    std::vector<std::vector<int>> out;
    push_cycled(out, w, lo, hi);
    return out;
}

// additive generators of the hexacode: words (a, b, c, f(1), f(w), f(w^2))
// with f(x) = a x^2 + b x + c over F4 = {0, 1, w, w^2}, labels 0, 1, 2, 3
std::vector<std::vector<int>> hexacode_gens() {
    auto mul = [](int x, int y) {
        static const int m[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
        return m[x][y];
    };
    std::vector<std::vector<int>> out;
    for (int coef = 0; coef < 3; ++coef)
        for (int v : {1, 2}) {
            std::vector<int> abc(3, 0);
            abc[coef] = v;
            std::vector<int> w = abc;
            for (int x : {1, 2, 3})
                w.push_back(mul(abc[0], mul(x, x)) ^ mul(abc[1], x) ^ abc[2]);
            out.push_back(w);
        }
    return out;
}

std::vector<std::vector<int>> even_perms_0123() {
    std::vector<int> w{0, 1, 2, 3};
    std::vector<std::vector<int>> out;
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (w[i] > w[j]) ++inv;
        if (inv % 2 == 0) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<GlueSpec> glue_table() {
    std::vector<GlueSpec> t;
    t.push_back({{{'D', 24}}, 46, {{1}}});
    t.push_back({{{'D', 16}, {'E', 8}}, 30, {{1, 0}}});
    t.push_back({{{'E', 8}, {'E', 8}, {'E', 8}}, 30, {}});
    t.push_back({{{'A', 24}}, 25, {{5}}});
    t.push_back({{{'D', 12}, {'D', 12}}, 22, cycled({1, 2}, 0, 2)});
    t.push_back({{{'A', 17}, {'E', 7}}, 18, {{3, 1}}});
    t.push_back({{{'D', 10}, {'E', 7}, {'E', 7}}, 18, {{1, 1, 0}, {3, 0, 1}}});
    t.push_back({{{'A', 15}, {'D', 9}}, 16, {{2, 1}}});
    t.push_back({{{'D', 8}, {'D', 8}, {'D', 8}}, 14, cycled({1, 2, 2}, 0, 3)});
    t.push_back({{{'A', 12}, {'A', 12}}, 13, {{1, 5}}});
    t.push_back({{{'A', 11}, {'D', 7}, {'E', 6}}, 12, {{1, 1, 1}}});
    t.push_back({{{'E', 6}, {'E', 6}, {'E', 6}, {'E', 6}}, 12, cycled({1, 0, 1, 2}, 1, 4)});
    t.push_back({{{'A', 9}, {'A', 9}, {'D', 6}}, 10, {{2, 4, 0}, {5, 0, 1}, {0, 5, 3}}});
    t.push_back({{{'D', 6}, {'D', 6}, {'D', 6}, {'D', 6}}, 10, even_perms_0123()});
    t.push_back({{{'A', 8}, {'A', 8}, {'A', 8}}, 9, cycled({1, 1, 4}, 0, 3)});
    t.push_back({{{'A', 7}, {'A', 7}, {'D', 5}, {'D', 5}}, 8, {{1, 1, 1, 2}, {1, 7, 2, 1}}});
    t.push_back({{{'A', 6}, {'A', 6}, {'A', 6}, {'A', 6}}, 7, cycled({1, 2, 1, 6}, 1, 4)});
    {
        GlueSpec s{{{'A', 5}, {'A', 5}, {'A', 5}, {'A', 5}, {'D', 4}}, 6, {}};
        push_cycled(s.gens, {2, 0, 2, 4, 0}, 1, 4);
        s.gens.push_back({3, 3, 0, 0, 1});
        s.gens.push_back({3, 0, 3, 0, 2});
        s.gens.push_back({3, 0, 0, 3, 3});
        t.push_back(s);
    }
    t.push_back({std::vector<std::pair<char, int>>(6, {'D', 4}), 6, hexacode_gens()});
    t.push_back({std::vector<std::pair<char, int>>(6, {'A', 4}), 5, cycled({1, 0, 1, 4, 4, 1}, 1, 6)});
    t.push_back({std::vector<std::pair<char, int>>(8, {'A', 3}), 4,
                 cycled({3, 2, 0, 0, 1, 0, 1, 1}, 1, 8)});
    t.push_back({std::vector<std::pair<char, int>>(12, {'A', 2}), 3,
                 cycled({2, 1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2}, 1, 12)});
    t.push_back({std::vector<std::pair<char, int>>(24, {'A', 1}), 2,
                 cycled({1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1},
                        1, 24)});
    return t;
}

// dual basis vector at the node: x with x * G = -e_node
std::vector<Rat> weight_row(const QMat& ginv, int node) {
    std::vector<Rat> w(ginv.n);
    for (int j = 0; j < ginv.n; ++j) w[j] = -ginv(node, j);
    return w;
}

// representative of the glue class with the given label, component coords.
// A_n: Z/(n+1) generated by the first fundamental weight. D_n: 1, 3 are the
// fork-node classes, 2 the chain-end class. E6: Z/3, E7: Z/2 at the minuscule
// node. E8: trivial.
std::vector<Rat> glue_vec(char t, int n, const QMat& ginv, int label) {
    std::vector<Rat> z(n, Rat(0));
    if (label == 0) return z;
    auto mul = [&](std::vector<Rat> w, int k) {
        for (Rat& e : w) e *= k;
        return w;
    };
    switch (t) {
        case 'A': return mul(weight_row(ginv, 0), label);
        case 'D':
            if (label == 2) return weight_row(ginv, 0);
            return weight_row(ginv, label == 1 ? n - 2 : n - 1);
        case 'E':
            if (n == 6) return mul(weight_row(ginv, 0), label);
            if (n == 7) return weight_row(ginv, 6);
            throw std::invalid_argument("E8 has no glue");
    }
    throw std::invalid_argument("unknown component type");
}

std::vector<Rat> reduce_mod_one(std::vector<Rat> v) {
    for (Rat& e : v) e = mod_rat(e, 1);
    return v;
}

std::string canonical_name(std::vector<std::pair<char, int>> comps) {
    std::sort(comps.begin(), comps.end());
    std::string out;
    for (size_t i = 0; i < comps.size();) {
        size_t j = i;
        while (j < comps.size() && comps[j] == comps[i]) ++j;
        out += comps[i].first;
        out += std::to_string(comps[i].second);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

Niemeier build(const GlueSpec& spec) {
    Niemeier nl;
    nl.components = spec.comps;
    nl.coxeter = spec.h;
    nl.name = canonical_name(spec.comps);

    Lattice root;
    std::vector<int> offset;
    std::vector<QMat> ginv;
    for (const auto& [t, n] : spec.comps) {
        Lattice c = named(std::string(1, t) + std::to_string(n));
        offset.push_back(root.rank());
        ginv.push_back(inverse(QMat(c.gram)));
        root = root.rank() ? root.direct_sum(c) : c;
    }
    int rk = root.rank();
    if (rk != 24) throw std::logic_error(nl.name + ": components do not sum to rank 24");

    for (const auto& word : spec.gens) {
        if (int(word.size()) != int(spec.comps.size()))
            throw std::logic_error(nl.name + ": glue word length mismatch");
        std::vector<Rat> g(rk, Rat(0));
        for (size_t c = 0; c < word.size(); ++c) {
            auto part = glue_vec(spec.comps[c].first, spec.comps[c].second, ginv[c], word[c]);
            for (size_t j = 0; j < part.size(); ++j) g[offset[c] + j] = part[j];
        }
        nl.glue_gens.push_back(reduce_mod_one(g));
    }

    Int d = 1;
    for (const auto& g : nl.glue_gens)
        for (const Rat& e : g) d = lcm(d, Int(e.get_den()));
    ZMat stack(rk + int(nl.glue_gens.size()), rk);
    for (int i = 0; i < rk; ++i) stack(i, i) = d;
    for (size_t r = 0; r < nl.glue_gens.size(); ++r)
        for (int j = 0; j < rk; ++j) {
            Rat e = Rat(d) * nl.glue_gens[r][j];
            if (e.get_den() != 1) throw std::logic_error(nl.name + ": denominator fault");
            stack(rk + int(r), j) = Int(e.get_num());
        }
    ZMat h = hnf(stack);
    if (h.m != rk) throw std::logic_error(nl.name + ": glued basis is not full rank");

    QMat b(rk, rk);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < rk; ++j) {
            b(i, j) = Rat(h(i, j), d);
            b(i, j).canonicalize();
        }
    QMat gq = b * QMat(root.gram) * b.transpose();
    ZMat gram;
    if (!gq.to_integral(gram)) throw std::logic_error(nl.name + ": glue code is not integral");
    for (int i = 0; i < rk; ++i)
        if (gram(i, i) % 2 != 0) throw std::logic_error(nl.name + ": glue code is not even");
    if (det(gram) != 1) throw std::logic_error(nl.name + ": glued lattice is not unimodular");

    nl.lat = Lattice(nl.name, gram);
    if (!inverse(b).to_integral(nl.roots_in))
        throw std::logic_error(nl.name + ": root sublattice fault");
    return nl;
}

}  // namespace

const std::vector<Niemeier>& niemeier_lattices() {
    static const std::vector<Niemeier> all = [] {
        std::vector<Niemeier> v;
        for (const auto& spec : glue_table()) v.push_back(build(spec));
        return v;
    }();
    return all;
}

const Niemeier& niemeier_by_name(const std::string& name) {
    for (const Niemeier& nl : niemeier_lattices())
        if (nl.name == name) return nl;
    throw std::invalid_argument("no Niemeier lattice named " + name);
}

std::vector<std::vector<Rat>> span_mod_one(const std::vector<std::vector<Rat>>& gens) {
    std::set<std::vector<Rat>> seen;
    std::vector<std::vector<Rat>> queue;
    if (gens.empty()) return {};
    std::vector<Rat> zero(gens[0].size(), Rat(0));
    seen.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        std::vector<Rat> v = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            std::vector<Rat> w(v.size());
            for (size_t i = 0; i < v.size(); ++i) w[i] = mod_rat(v[i] + g[i], 1);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace latk
