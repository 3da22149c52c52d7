#include "latk/neighbors.hpp"

#include "latk/genus.hpp"
#include "latk/roots.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace latk {

namespace {

void check_neighbor_args(const ZMat& G, const Int& p) {
    if (!Lattice{"", G}.is_even()) throw std::invalid_argument("neighbors: lattice must be even");
    if (p <= 2 || !is_prime(p)) throw std::invalid_argument("neighbors: p must be an odd prime");
    if (det(G) % p == 0) throw std::invalid_argument("neighbors: p must not divide det");
}

// neighbor lattice for an isotropic-mod-p vector x (entries in [0, p))
ZMat neighbor_of(const ZMat& G, const Int& p, std::vector<Int> x) {
    int n = G.n;
    auto pair_with = [&](const std::vector<Int>& v) {
        std::vector<Int> w(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += G(i, j) * v[j];
        return w;
    };
    std::vector<Int> w = pair_with(x);
    int j0 = -1;
    for (int j = 0; j < n; ++j)
        if (mod_floor(w[j], p) != 0) { j0 = j; break; }
    if (j0 < 0) throw std::logic_error("neighbors: singular reduction");
    Int c = dot(x, G, x);
    if (mod_floor(c, p * p) != 0) {
        // shift x by p * t * e_j0 to lift isotropy from mod p to mod 2p^2
        Int t = mod_floor(-(c / p) * invmod(mod_floor(2 * w[j0], p), p), p);
        x[j0] += p * t;
        w = pair_with(x);
    }
    // rows of p * N: p * (kernel of <., w> mod p) and x itself
    ZMat rows(n + 1, n);
    Int inv = invmod(mod_floor(w[j0], p), p);
    int r = 0;
    for (int k = 0; k < n; ++k) {
        if (k == j0) continue;
        rows(r, k) = p;
        rows(r, j0) = -p * mod_floor(w[k] * inv, p);
        ++r;
    }
    rows(r, j0) = p * p;
    ++r;
    for (int k = 0; k < n; ++k) rows(r, k) = x[k];
    ZMat B = hnf(rows);
    if (B.m != n) throw std::logic_error("neighbors: rank drop");
    ZMat NG = B * G * B.transpose();
    for (auto& e : NG.a) {
        if (e % (p * p) != 0) throw std::logic_error("neighbors: non-integral neighbor");
        e /= p * p;
    }
    return NG;
}

}  // namespace

void for_each_neighbor(const ZMat& G, const Int& p,
                       const std::function<bool(const ZMat&)>& visit) {
    check_neighbor_args(G, p);
    int n = G.n;
    long pl = to_long(p);
    std::vector<std::vector<long>> gm(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gm[i][j] = to_long(mod_floor(G(i, j), p));
    std::vector<long> x(n, 0);
    for (int lead = n - 1; lead >= 0; --lead) {
        // projective reps: x[lead] = 1, free coordinates right of lead
        std::fill(x.begin(), x.end(), 0L);
        x[lead] = 1;
        for (;;) {
            long q = 0;
            for (int i = lead; i < n; ++i) {
                if (x[i] == 0) continue;
                q += gm[i][i] * x[i] * x[i];
                for (int j = i + 1; j < n; ++j)
                    if (x[j] != 0) q += 2 * gm[i][j] * x[i] * x[j];
            }
            if (q % pl == 0) {
                std::vector<Int> xi(n);
                for (int i = 0; i < n; ++i) xi[i] = x[i];
                if (!visit(neighbor_of(G, p, std::move(xi)))) return;
            }
            int k = n - 1;
            while (k > lead && x[k] == pl - 1) x[k--] = 0;
            if (k == lead) break;
            ++x[k];
        }
    }
}

std::vector<ZMat> kneser_neighbors(const ZMat& gram, const Int& p) {
    std::vector<ZMat> out;
    for_each_neighbor(gram, p, [&](const ZMat& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

Int neighbor_prime(const ZMat& gram) {
    Int d = det(gram);
    for (Int q = 3;; q += 2)
        if (is_prime(q) && d % q != 0) return q;
}

GenusEnumeration enumerate_genus(const ZMat& gram, const Int& p0, const SearchBudget& budget) {
    Inertia sig = inertia(QMat(gram));
    if (sig.zero > 0 || (sig.pos > 0 && sig.neg > 0))
        throw std::invalid_argument("enumerate_genus: need a definite form");
    Int p = p0 == 0 ? neighbor_prime(gram) : p0;
    check_neighbor_args(gram, p);

    GenusEnumeration out;
    out.mass = genus_mass(gram);

    struct Cls {
        ZMat g_in, g_neg;
        Int roots;
        std::string rtype;
    };
    std::vector<Cls> cls;
    bool flip = sig.pos > 0;  // invariant machinery wants negative definite

    auto add_class = [&](const ZMat& g) {
        ZMat gn = flip ? Int(-1) * g : g;
        RootSystem rs = root_type(gn);
        std::string ts = rs.type_string();
        for (const auto& c : cls)
            if (c.roots == rs.root_count && c.rtype == ts &&
                is_isometric(gn, c.g_neg, nullptr, budget))
                return;
        AutGroup A = automorphism_group(gn, budget);
        cls.push_back({g, gn, rs.root_count, ts});
        out.classes.emplace_back(ts, g);
        out.aut_orders.push_back(A.order);
        out.found_mass += Rat(1) / Rat(A.order);
        out.found_mass.canonicalize();
    };

    add_class(gram);
    for (size_t next = 0; out.found_mass != out.mass && next < cls.size(); ++next) {
        const ZMat cur = cls[next].g_in;
        for_each_neighbor(cur, p, [&](const ZMat& ng) {
            add_class(ng);
            return out.found_mass != out.mass;
        });
    }
    if (out.found_mass > out.mass)
        throw std::logic_error("enumerate_genus: class masses exceed the genus mass");
    out.complete = out.found_mass == out.mass;
    return out;
}

}  // namespace latk
