#include "latk/discform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "latk/formgroup.hpp"

namespace latk {

Fqf::Fqf(std::vector<Int> ords, QMat v) : orders(std::move(ords)), vals(std::move(v)) {
    check();
}

Int Fqf::order() const {
    Int n = 1;
    for (const auto& d : orders) n *= d;
    return n;
}

std::vector<Int> Fqf::reduce(std::vector<Int> x) const {
    for (int i = 0; i < ngens(); ++i) x[i] = mod_floor(x[i], orders[i]);
    return x;
}

Rat Fqf::q(const std::vector<Int>& x) const {
    Rat acc = 0;
    for (int i = 0; i < ngens(); ++i) {
        if (x[i] == 0) continue;
        acc += Rat(x[i] * x[i]) * vals(i, i);
        for (int j = i + 1; j < ngens(); ++j)
            if (x[j] != 0) acc += Rat(2 * x[i] * x[j]) * vals(i, j);
    }
    return mod_rat(acc, 2);
}

Rat Fqf::b(const std::vector<Int>& x, const std::vector<Int>& y) const {
    Rat acc = 0;
    for (int i = 0; i < ngens(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < ngens(); ++j)
            if (y[j] != 0) acc += Rat(x[i] * y[j]) * vals(i, j);
    }
    return mod_rat(acc, 1);
}

Int Fqf::elem_order(const std::vector<Int>& x) const {
    Int ord = 1;
    for (int i = 0; i < ngens(); ++i) ord = lcm(ord, orders[i] / gcd(orders[i], x[i]));
    return ord;
}

Fqf Fqf::direct_sum(const Fqf& other) const {
    int k = ngens(), l = other.ngens();
    std::vector<Int> ords = orders;
    ords.insert(ords.end(), other.orders.begin(), other.orders.end());
    QMat v(k + l, k + l);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) v(i, j) = vals(i, j);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) v(k + i, k + j) = other.vals(i, j);
    return Fqf(std::move(ords), std::move(v));
}

Fqf Fqf::negated() const {
    QMat v = vals;
    for (int i = 0; i < ngens(); ++i)
        for (int j = 0; j < ngens(); ++j)
            v(i, j) = (i == j) ? mod_rat(-v(i, j), 2) : mod_rat(-v(i, j), 1);
    return Fqf(orders, std::move(v));
}

std::vector<Int> Fqf::primes() const {
    std::set<Int> ps;
    for (const auto& d : orders) {
        Int m = d;
        for (Int p = 2; p * p <= m;) {
            if (m % p == 0) {
                ps.insert(p);
                while (m % p == 0) m /= p;
            }
            p = p == 2 ? Int(3) : p + 2;
        }
        if (m > 1) ps.insert(m);
    }
    return std::vector<Int>(ps.begin(), ps.end());
}

Fqf Fqf::prime_part(const Int& p) const {
    std::vector<int> idx;
    std::vector<Int> mult, ords;
    for (int i = 0; i < ngens(); ++i) {
        Int pk = 1, m = orders[i];
        while (m % p == 0) {
            pk *= p;
            m /= p;
        }
        if (pk > 1) {
            idx.push_back(i);
            mult.push_back(m);
            ords.push_back(pk);
        }
    }
    int k = static_cast<int>(idx.size());
    QMat v(k, k);
    for (int a = 0; a < k; ++a)
        for (int c = 0; c < k; ++c) {
            Rat w = Rat(mult[a] * mult[c]) * vals(idx[a], idx[c]);
            v(a, c) = (a == c) ? mod_rat(w, 2) : mod_rat(w, 1);
        }
    return Fqf(std::move(ords), std::move(v));
}

void Fqf::check() const {
    int k = ngens();
    if (vals.m != k || vals.n != k) throw std::invalid_argument("Fqf: value matrix shape");
    for (int i = 0; i < k; ++i) {
        if (orders[i] < 2) throw std::invalid_argument("Fqf: generator order < 2");
        Rat qi = vals(i, i);
        if (qi < 0 || qi >= 2) throw std::invalid_argument("Fqf: q value out of range");
        // d*q in Z and d^2*q in 2Z
        Rat dq = Rat(orders[i]) * qi;
        if (dq.get_den() != 1) throw std::invalid_argument("Fqf: q denominator exceeds order");
        if (mod_rat(Rat(orders[i]) * dq, 2) != 0)
            throw std::invalid_argument("Fqf: q not well-defined for the order");
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (vals(i, j) != vals(j, i)) throw std::invalid_argument("Fqf: b not symmetric");
            if (vals(i, j) < 0 || vals(i, j) >= 1)
                throw std::invalid_argument("Fqf: b value out of range");
            if (mod_rat(Rat(orders[i]) * vals(i, j), 1) != 0)
                throw std::invalid_argument("Fqf: b not well-defined for the order");
        }
    }
}

DiscGroup disc_group(const Lattice& L) {
    if (L.det() == 0) throw std::invalid_argument("disc_group: degenerate lattice");
    if (!L.is_even()) throw std::invalid_argument("disc_group: lattice not even");
    int n = L.rank();
    ZMat U, V;
    ZMat D = snf(L.gram, U, V);

    DiscGroup out;
    out.lat = L;
    std::vector<int> kept;
    for (int i = 0; i < n; ++i)
        if (D(i, i) > 1) kept.push_back(i);
    int k = static_cast<int>(kept.size());

    // generator i of L^sharp: row kept[i] of U divided by its elementary divisor
    out.gens = QMat(k, n);
    out.orders.resize(k);
    for (int a = 0; a < k; ++a) {
        int i = kept[a];
        out.orders[a] = D(i, i);
        for (int j = 0; j < n; ++j) {
            out.gens(a, j) = Rat(U(i, j), D(i, i));
            out.gens(a, j).canonicalize();
        }
    }

    // coords(x) = x * Uinv * D, then keep the kept indices mod orders
    ZMat Uinv;
    if (!inverse(U).to_integral(Uinv)) throw std::logic_error("disc_group: U not unimodular");
    ZMat UD(n, k);
    for (int j = 0; j < n; ++j)
        for (int a = 0; a < k; ++a) UD(j, a) = Uinv(j, kept[a]) * D(kept[a], kept[a]);
    out.coord_map = UD;

    QMat v(k, k);
    for (int a = 0; a < k; ++a)
        for (int c = 0; c < k; ++c) {
            Rat w = 0;
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) w += out.gens(a, s) * Rat(L.gram(s, t)) * out.gens(c, t);
            v(a, c) = (a == c) ? mod_rat(w, 2) : mod_rat(w, 1);
        }
    out.form = Fqf(out.orders, std::move(v));
    return out;
}

std::vector<Int> DiscGroup::coords(const std::vector<Rat>& x) const {
    int n = lat.rank(), k = form.ngens();
    std::vector<Int> c(k);
    for (int a = 0; a < k; ++a) {
        Rat acc = 0;
        for (int j = 0; j < n; ++j) acc += x[j] * Rat(coord_map(j, a));
        if (acc.get_den() != 1) throw std::invalid_argument("DiscGroup::coords: x not in dual");
        c[a] = mod_floor(acc.get_num(), orders[a]);
    }
    return c;
}

std::vector<Rat> DiscGroup::lift(const std::vector<Int>& c) const {
    int n = lat.rank(), k = form.ngens();
    std::vector<Rat> x(n, Rat(0));
    for (int a = 0; a < k; ++a)
        for (int j = 0; j < n; ++j) x[j] += Rat(c[a]) * gens(a, j);
    return x;
}

ZMat disc_action(const DiscGroup& D, const ZMat& f) {
    if (!is_isometry_matrix(D.lat.gram, f)) throw std::invalid_argument("disc_action: not an isometry");
    int k = D.form.ngens(), n = D.lat.rank();
    ZMat A(k, k);
    for (int i = 0; i < k; ++i) {
        std::vector<Rat> img(n, Rat(0));
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < n; ++t) img[t] += D.gens(i, j) * Rat(f(j, t));
        std::vector<Int> c = D.coords(img);
        for (int j = 0; j < k; ++j) A(i, j) = c[j];
    }
    return A;
}

bool is_form_automorphism(const Fqf& q, const ZMat& A) {
    int k = q.ngens();
    if (A.m != k || A.n != k) return false;
    for (int i = 0; i < k; ++i) {
        // well-defined: order(g_i) kills the image row
        for (int j = 0; j < k; ++j)
            if (mod_floor(q.orders[i] * A(i, j), q.orders[j]) != 0) return false;
        if (q.q(A.row_vec(i)) != q.vals(i, i)) return false;
        for (int j = i + 1; j < k; ++j)
            if (q.b(A.row_vec(i), A.row_vec(j)) != q.vals(i, j)) return false;
    }
    return subgroup_order(q, subgroup_lattice(q, A)) == q.order();
}

ZMat form_compose(const Fqf& q, const ZMat& A, const ZMat& B) {
    ZMat C = A * B;
    for (int i = 0; i < C.m; ++i)
        for (int j = 0; j < C.n; ++j) C(i, j) = mod_floor(C(i, j), q.orders[j]);
    return C;
}

bool form_equal(const Fqf& q, const ZMat& A, const ZMat& B) {
    if (A.m != B.m || A.n != B.n) return false;
    for (int i = 0; i < A.m; ++i)
        for (int j = 0; j < A.n; ++j)
            if (mod_floor(A(i, j) - B(i, j), q.orders[j]) != 0) return false;
    return true;
}

Fqf fqf_u(int k) {
    Int d = pow_int(2, k);
    QMat v(2, 2);
    v(0, 0) = v(1, 1) = 0;
    v(0, 1) = v(1, 0) = Rat(1, d);
    return Fqf({d, d}, std::move(v));
}

Fqf fqf_v(int k) {
    Int d = pow_int(2, k);
    QMat v(2, 2);
    v(0, 0) = v(1, 1) = mod_rat(Rat(2, d), 2);
    v(0, 1) = v(1, 0) = Rat(1, d);
    return Fqf({d, d}, std::move(v));
}

Fqf fqf_w(const Int& p, int k, const Int& eps) {
    Int d = pow_int(p, k);
    QMat v(1, 1);
    if (p == 2) {
        Int e = mod_floor(eps, k == 1 ? 4 : 8);
        if (e % 2 == 0) throw std::invalid_argument("fqf_w: eps must be odd at p=2");
        v(0, 0) = mod_rat(Rat(e, d), 2);
    } else {
        if (eps != 1 && eps != -1) throw std::invalid_argument("fqf_w: eps must be +-1 for odd p");
        // smallest positive even a, coprime to p, with Legendre(a,p) = eps
        Int a = 0;
        for (Int c = 2;; c += 2) {
            if (c % p == 0) continue;
            if (kronecker(c, p) == eps) {
                a = c;
                break;
            }
        }
        v(0, 0) = mod_rat(Rat(a, d), 2);
    }
    return Fqf({d}, std::move(v));
}

Fqf FqfBlock::form() const {
    if (kind == 'u') return fqf_u(k);
    if (kind == 'v') return fqf_v(k);
    return fqf_w(p, k, eps);
}

Fqf fqf_from_blocks(const std::vector<FqfBlock>& blocks) {
    Fqf acc;
    for (const auto& b : blocks) acc = acc.direct_sum(b.form());
    return acc;
}

namespace {

// multiset of q-values over the whole group (small groups only)
std::vector<Rat> q_value_multiset(const Fqf& q) {
    std::vector<Rat> vals;
    for (const auto& x : fqf_elements(q, Int(1) << 16)) vals.push_back(q.q(x));
    std::sort(vals.begin(), vals.end());
    return vals;
}

int valp(const Int& x, const Int& p) {
    if (x == 0) return -1;
    int v = 0;
    Int m = x;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

// scale of a reduced rational w.r.t. p: k with denominator = p^k (0 if none)
int den_scale(const Rat& r, const Int& p) { return valp(r.get_den(), p); }

struct Peeler {
    Int p;
    Fqf cur;  // independent generators, p-power orders
    std::vector<FqfBlock> out;

    void run() {
        while (cur.ngens() > 0) step();
    }

    void step() {
        int k = 0;
        for (const auto& d : cur.orders) k = std::max(k, valp(d, p));
        Int pk = pow_int(p, k);

        // rank-1 candidate: max-order generator with b(g,g) of full scale
        int one = -1;
        for (int i = 0; i < cur.ngens(); ++i)
            if (cur.orders[i] == pk && den_scale(mod_rat(cur.vals(i, i), 1), p) == k) {
                one = i;
                break;
            }
        if (one >= 0) {
            peel_one(one, k, pk);
            return;
        }

        // off-diagonal pair of full scale among max-order generators
        int pi = -1, pj = -1;
        for (int i = 0; i < cur.ngens() && pi < 0; ++i) {
            if (cur.orders[i] != pk) continue;
            for (int j = i + 1; j < cur.ngens(); ++j) {
                if (cur.orders[j] != pk) continue;
                if (den_scale(cur.vals(i, j), p) == k) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi < 0) throw std::invalid_argument("elementary_decomposition: degenerate form");

        if (p != 2) {
            // g_i += g_j makes b(g_i,g_i) full scale; then rank-1 applies
            add_gen(pi, pj);
            peel_one(pi, k, pk);
            return;
        }
        peel_two(pi, pj, k, pk);
    }

    // in-place basis change g_i += g_j (valid: ord(g_i) is maximal)
    void add_gen(int i, int j) {
        QMat& v = cur.vals;
        Rat qi = mod_rat(v(i, i) + v(j, j) + 2 * v(i, j), 2);
        for (int l = 0; l < cur.ngens(); ++l) {
            if (l == i) continue;
            Rat bl = mod_rat(v(i, l) + ((l == j) ? mod_rat(v(j, j), 1) : v(j, l)), 1);
            v(i, l) = bl;
            v(l, i) = bl;
        }
        v(i, i) = qi;
    }

    void peel_one(int i, int k, const Int& pk) {
        Rat bii = mod_rat(cur.vals(i, i), 1);
        // record the block from q(g_i) = a / p^k
        Rat qi = cur.vals(i, i);
        Int a = qi.get_num() * (pk / qi.get_den());
        if (p == 2)
            out.push_back({'w', p, k, mod_floor(a, k == 1 ? 4 : 8)});
        else
            out.push_back({'w', p, k, Int(kronecker(a, p))});

        // correct the other generators: g_l -= lambda_l * g_i
        Int u = bii.get_num() * (pk / bii.get_den());  // unit mod p^k
        Int uinv = invmod(u, pk);
        std::vector<std::vector<Int>> rows;
        for (int l = 0; l < cur.ngens(); ++l) {
            if (l == i) continue;
            Rat bli = cur.vals(l, i);
            Int c = bli.get_num() * (pk / bli.get_den());
            Int lambda = mod_floor(c * uinv, pk);
            std::vector<Int> r(cur.ngens(), Int(0));
            r[l] = 1;
            r[i] = -lambda;
            rows.push_back(cur.reduce(std::move(r)));
        }
        recurse(rows);
    }

    void peel_two(int i, int j, int k, const Int& pk) {
        // identify u_k vs v_k by the q-value multiset of the span
        Fqf blk({pk, pk}, QMat(2, 2));
        blk.vals(0, 0) = cur.vals(i, i);
        blk.vals(1, 1) = cur.vals(j, j);
        blk.vals(0, 1) = blk.vals(1, 0) = cur.vals(i, j);
        auto ms = q_value_multiset(blk);
        if (ms == q_value_multiset(fqf_u(k)))
            out.push_back({'u', 2, k, 0});
        else if (ms == q_value_multiset(fqf_v(k)))
            out.push_back({'v', 2, k, 0});
        else
            throw std::logic_error("elementary_decomposition: unrecognized 2x2 block");

        // solve (alpha,beta) * [[A,C],[C,B]] = (r_i, r_j) mod 2^k
        auto scaled = [&](const Rat& r) {
            Rat m = mod_rat(r, 1);
            return mod_floor(m.get_num() * (pk / m.get_den()), pk);
        };
        Int A = scaled(cur.vals(i, i)), B = scaled(cur.vals(j, j)), C = scaled(cur.vals(i, j));
        Int det = mod_floor(A * B - C * C, pk);
        Int dinv = invmod(det, pk);
        std::vector<std::vector<Int>> rows;
        for (int l = 0; l < cur.ngens(); ++l) {
            if (l == i || l == j) continue;
            Int ri = scaled(cur.vals(l, i)), rj = scaled(cur.vals(l, j));
            Int alpha = mod_floor((ri * B - rj * C) * dinv, pk);
            Int beta = mod_floor((rj * A - ri * C) * dinv, pk);
            std::vector<Int> r(cur.ngens(), Int(0));
            r[l] = 1;
            r[i] = -alpha;
            r[j] = -beta;
            rows.push_back(cur.reduce(std::move(r)));
        }
        recurse(rows);
    }

    void recurse(const std::vector<std::vector<Int>>& rows) {
        if (rows.empty()) {
            cur = Fqf();
            return;
        }
        ZMat X(static_cast<int>(rows.size()), cur.ngens());
        for (int r = 0; r < X.m; ++r) X.set_row(r, rows[r]);
        ZMat sub = subgroup_lattice(cur, X);
        cur = subquotient_form(cur, sub, zero_lattice(cur));
    }
};

}  // namespace

std::vector<FqfBlock> elementary_decomposition(const Fqf& q) {
    std::vector<FqfBlock> out;
    for (const Int& p : q.primes()) {
        Peeler peeler{p, q.prime_part(p), {}};
        // re-derive an independent generator basis before peeling
        peeler.cur = subquotient_form(peeler.cur, full_lattice(peeler.cur), zero_lattice(peeler.cur));
        peeler.run();
        out.insert(out.end(), peeler.out.begin(), peeler.out.end());
    }
    return out;
}

namespace {

// canonical state of the scale-(p,k) slot: u count, v count, sorted w units
struct ScaleState {
    int nu = 0, nv = 0;
    std::vector<Int> eps;

    bool operator<(const ScaleState& o) const {
        // prefer few w blocks, then few v blocks, then small units
        if (eps.size() != o.eps.size()) return eps.size() < o.eps.size();
        if (nv != o.nv) return nv < o.nv;
        if (eps != o.eps) return eps < o.eps;
        return nu < o.nu;
    }
    bool operator==(const ScaleState& o) const = default;
};

void push_sorted(std::vector<Int>& v, const Int& x) {
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

// all states reachable by the same-scale relations at p = 2, scale k
ScaleState canonical_scale2(const ScaleState& start, int k) {
    std::set<ScaleState> seen;
    std::vector<ScaleState> queue = {start};
    seen.insert(start);
    ScaleState best = start;
    while (!queue.empty()) {
        ScaleState s = queue.back();
        queue.pop_back();
        if (s < best) best = s;
        std::vector<ScaleState> next;
        // 2u <-> 2v
        if (s.nu >= 2) {
            ScaleState t = s;
            t.nu -= 2;
            t.nv += 2;
            next.push_back(t);
        }
        if (s.nv >= 2) {
            ScaleState t = s;
            t.nv -= 2;
            t.nu += 2;
            next.push_back(t);
        }
        if (k >= 2) {
            // pair trade preserving sum and product of units mod 8
            for (size_t a = 0; a < s.eps.size(); ++a)
                for (size_t b = a + 1; b < s.eps.size(); ++b) {
                    Int pr = mod_floor(s.eps[a] * s.eps[b], 8);
                    Int sm = mod_floor(s.eps[a] + s.eps[b], 8);
                    for (Int e1 = 1; e1 < 8; e1 += 2)
                        for (Int e2 = e1; e2 < 8; e2 += 2) {
                            if (mod_floor(e1 * e2, 8) != pr || mod_floor(e1 + e2, 8) != sm)
                                continue;
                            ScaleState t = s;
                            t.eps.erase(t.eps.begin() + b);
                            t.eps.erase(t.eps.begin() + a);
                            push_sorted(t.eps, e1);
                            push_sorted(t.eps, e2);
                            next.push_back(t);
                        }
                }
        } else {
            // scale 1: u + w^e <-> w^e + w^e + w^e', v + w^e <-> 3 w^{e'}
            for (size_t a = 0; a < s.eps.size(); ++a) {
                Int e = s.eps[a], econj = e == 1 ? Int(3) : Int(1);
                if (s.nu >= 1) {
                    ScaleState t = s;
                    t.nu -= 1;
                    push_sorted(t.eps, e);
                    push_sorted(t.eps, econj);
                    next.push_back(t);
                }
                if (s.nv >= 1) {
                    ScaleState t = s;
                    t.nv -= 1;
                    t.eps.erase(t.eps.begin() + a);
                    push_sorted(t.eps, econj);
                    push_sorted(t.eps, econj);
                    push_sorted(t.eps, econj);
                    next.push_back(t);
                }
            }
            // reverse directions: 3 equal w's -> v + w^{e'}; {e,e,e'} -> u + w^e
            auto count = [&](const Int& e) {
                return std::count(s.eps.begin(), s.eps.end(), e);
            };
            for (Int e : {Int(1), Int(3)}) {
                Int econj = e == 1 ? Int(3) : Int(1);
                if (count(e) >= 3) {
                    ScaleState t = s;
                    for (int r = 0; r < 3; ++r)
                        t.eps.erase(std::find(t.eps.begin(), t.eps.end(), e));
                    t.nv += 1;
                    push_sorted(t.eps, econj);
                    next.push_back(t);
                }
                if (count(e) >= 2 && count(econj) >= 1) {
                    ScaleState t = s;
                    t.eps.erase(std::find(t.eps.begin(), t.eps.end(), e));
                    t.eps.erase(std::find(t.eps.begin(), t.eps.end(), e));
                    t.eps.erase(std::find(t.eps.begin(), t.eps.end(), econj));
                    t.nu += 1;
                    push_sorted(t.eps, e);
                    next.push_back(t);
                }
            }
        }
        for (auto& t : next)
            if (seen.insert(t).second) queue.push_back(t);
    }
    return best;
}

int block_kind_rank(const FqfBlock& b) { return b.kind == 'u' ? 0 : b.kind == 'v' ? 1 : 2; }

bool block_less(const FqfBlock& x, const FqfBlock& y) {
    if (x.p != y.p) return x.p < y.p;
    if (x.k != y.k) return x.k < y.k;
    if (block_kind_rank(x) != block_kind_rank(y)) return block_kind_rank(x) < block_kind_rank(y);
    return x.eps < y.eps;
}

}  // namespace

std::vector<FqfBlock> normal_form_blocks(const Fqf& q) {
    std::vector<FqfBlock> blocks = elementary_decomposition(q);
    std::map<std::pair<Int, int>, std::vector<FqfBlock>> slots;
    for (auto& b : blocks) slots[{b.p, b.k}].push_back(b);

    std::vector<FqfBlock> out;
    for (auto& [key, list] : slots) {
        const Int& p = key.first;
        int k = key.second;
        if (p == 2) {
            ScaleState s;
            for (auto& b : list) {
                if (b.kind == 'u')
                    ++s.nu;
                else if (b.kind == 'v')
                    ++s.nv;
                else
                    push_sorted(s.eps, b.eps);
            }
            ScaleState c = canonical_scale2(s, k);
            for (int r = 0; r < c.nu; ++r) out.push_back({'u', 2, k, 0});
            for (int r = 0; r < c.nv; ++r) out.push_back({'v', 2, k, 0});
            for (const Int& e : c.eps) out.push_back({'w', 2, k, e});
        } else {
            // w^1 ... w^1 w^{prod of signs}
            Int sign = 1;
            for (auto& b : list) sign *= b.eps;
            for (size_t r = 0; r + 1 < list.size(); ++r) out.push_back({'w', p, k, 1});
            out.push_back({'w', p, k, sign});
        }
    }
    std::sort(out.begin(), out.end(), block_less);
    return out;
}

std::string render_blocks(const std::vector<FqfBlock>& blocks) {
    if (blocks.empty()) return "1";
    std::string s;
    size_t i = 0;
    while (i < blocks.size()) {
        size_t j = i;
        while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
        std::string piece;
        const FqfBlock& b = blocks[i];
        if (b.kind == 'u' || b.kind == 'v')
            piece = std::string(1, b.kind) + std::to_string(b.k);
        else
            piece = "w" + b.eps.get_str() + "_" + b.p.get_str() + "_" + std::to_string(b.k);
        if (j - i > 1) piece += "^" + std::to_string(j - i);
        if (!s.empty()) s += " + ";
        s += piece;
        i = j;
    }
    return s;
}

std::string normal_form_string(const Fqf& q) { return render_blocks(normal_form_blocks(q)); }

}  // namespace latk
