#include "latk/roots.hpp"

#include "latk/shortvec.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace latk {

namespace {

std::pair<char, int> classify_component(const std::vector<int>& verts,
                                        const std::vector<std::vector<int>>& adj) {
    int sz = int(verts.size());
    std::vector<int> branch;
    int edges = 0;
    for (int v : verts) {
        edges += int(adj[v].size());
        if (adj[v].size() >= 4) throw std::logic_error("root graph vertex of degree >= 4");
        if (adj[v].size() == 3) branch.push_back(v);
    }
    edges /= 2;
    if (edges != sz - 1) throw std::logic_error("root component is not a tree");
    if (branch.empty()) return {'A', sz};
    if (branch.size() > 1) throw std::logic_error("root component with two branch points");
    int b = branch[0];
    std::vector<int> arms;
    for (int nb : adj[b]) {
        int len = 1, prev = b, cur = nb;
        while (true) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) throw std::logic_error("root component with no short arm");
    if (arms[1] == 1) return {'D', arms[2] + 3};
    if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', arms[2] + 4};
    throw std::logic_error("unrecognized root component");
}

}  // namespace

ZMat RootSystem::root_basis() const {
    int n = simple_roots.empty() ? 0 : int(simple_roots[0].size());
    ZMat m(int(simple_roots.size()), n);
    for (int i = 0; i < m.m; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = simple_roots[i][j];
    return m;
}

std::string RootSystem::type_string() const {
    if (components.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < components.size();) {
        size_t j = i;
        while (j < components.size() && components[j] == components[i]) ++j;
        out += components[i].first;
        out += std::to_string(components[i].second);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

RootSystem root_type(const ZMat& gram) {
    RootSystem rs;
    auto pos = vectors_of_norm(gram, Int(-2));
    rs.root_count = Int(2) * Int(pos.size());
    if (pos.empty()) return rs;

    std::set<std::vector<Int>> pos_set(pos.begin(), pos.end());
    int n = gram.m;
    for (const auto& r : pos) {
        bool simple = true;
        for (const auto& s : pos) {
            std::vector<Int> t(n);
            bool zero = true;
            for (int i = 0; i < n; ++i) {
                t[i] = r[i] - s[i];
                if (t[i] != 0) zero = false;
            }
            if (zero) continue;
            if (pos_set.count(t)) {
                simple = false;
                break;
            }
        }
        if (simple) rs.simple_roots.push_back(r);
    }

    int k = int(rs.simple_roots.size());
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Int p = dot(rs.simple_roots[i], gram, rs.simple_roots[j]);
            if (p == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            } else if (p != 0) {
                throw std::logic_error("fundamental roots with pairing outside {0,1}");
            }
        }

    std::vector<int> seen(k, 0);
    for (int i = 0; i < k; ++i) {
        if (seen[i]) continue;
        std::vector<int> comp, stack{i};
        seen[i] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        rs.components.push_back(classify_component(comp, adj));
    }
    std::sort(rs.components.begin(), rs.components.end());

    Int expected = 0;
    for (auto [letter, m] : rs.components) expected += ade_root_count(letter, m);
    if (expected != rs.root_count)
        throw std::logic_error("root count does not match classified type");
    return rs;
}

QuotientShape quotient_shape(int ambient_rank, const ZMat& sub) {
    QuotientShape qs;
    if (sub.m == 0) {
        qs.free_rank = ambient_rank;
        return qs;
    }
    ZMat u, v;
    ZMat d = snf(sub, u, v);
    int rank = 0;
    for (int i = 0; i < std::min(d.m, d.n); ++i) {
        if (d(i, i) == 0) break;
        ++rank;
        if (d(i, i) > 1) qs.torsion.push_back(d(i, i));
    }
    qs.free_rank = ambient_rank - rank;
    std::sort(qs.torsion.begin(), qs.torsion.end());
    return qs;
}

std::string QuotientShape::str() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const Int& t : torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

Int ade_root_count(char letter, int n) {
    switch (letter) {
        case 'A': return Int(n) * Int(n + 1);
        case 'D': return Int(2) * Int(n) * Int(n - 1);
        case 'E':
            if (n == 6) return 72;
            if (n == 7) return 126;
            if (n == 8) return 240;
            break;
    }
    throw std::invalid_argument("unknown ADE component");
}

}  // namespace latk
