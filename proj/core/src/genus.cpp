#include "latk/genus.hpp"

#include "latk/discform.hpp"
#include "latk/formgroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace latk {

namespace {

constexpr int kInfVal = 1 << 28;

int rat_valuation(const Rat& x, const Int& p) {
    if (x == 0) return kInfVal;
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

// unit cofactor of x = p^v * (num/den), num and den coprime to p
void rat_unit(const Rat& x, const Int& p, int v, Int& num, Int& den) {
    num = x.get_num();
    den = x.get_den();
    int vn = valuation(num, p);
    num /= pow_int(p, static_cast<unsigned long>(vn));
    den /= pow_int(p, static_cast<unsigned long>(vn - v));
}

int unit_mod8(const Rat& x, int v) {
    Int num, den;
    rat_unit(x, 2, v, num, den);
    Int r = mod_floor(num * invmod(mod_floor(den, 8), 8), 8);
    return static_cast<int>(r.get_si());
}

int unit_chi(const Rat& x, const Int& p, int v) {
    Int num, den;
    rat_unit(x, p, v, num, den);
    return kronecker(num, p) * kronecker(den, p);
}

void sym_addmul(QMat& S, int i, int j, const Rat& c) {
    for (int k = 0; k < S.n; ++k) S(i, k) += c * S(j, k);
    for (int k = 0; k < S.m; ++k) S(k, i) += c * S(k, j);
}

void sym_swap(QMat& S, int i, int j) {
    if (i == j) return;
    for (int k = 0; k < S.n; ++k) std::swap(S(i, k), S(j, k));
    for (int k = 0; k < S.m; ++k) std::swap(S(k, i), S(k, j));
}

struct RawBlock {
    int scale;
    bool pair;  // 2x2 even block (p = 2 only)
    Rat unit;   // diagonal unit, or det unit of the 2x2 block
};

std::vector<RawBlock> jordan_raw(const ZMat& gram, const Int& p) {
    int n = gram.n;
    QMat S{QMat(gram)};
    std::vector<RawBlock> raw;
    int i0 = 0;
    while (i0 < n) {
        int best = kInfVal, bi = -1, bj = -1;
        for (int i = i0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                int v = rat_valuation(S(i, j), p);
                if (v < best || (v == best && bi != bj && i == j)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) throw std::invalid_argument("jordan: degenerate form");
        if (bi != bj && p != 2) {
            // move an off-diagonal minimum onto the diagonal (2 is a unit)
            sym_addmul(S, bi, bj, 1);
            bj = bi;
        }
        if (bi == bj) {
            sym_swap(S, i0, bi);
            Rat d = S(i0, i0);
            for (int j = i0 + 1; j < n; ++j) {
                if (S(j, i0) == 0) continue;
                sym_addmul(S, j, i0, -S(j, i0) / d);
            }
            raw.push_back({best, false, d / Rat(pow_int(p, best))});
            i0 += 1;
        } else {
            sym_swap(S, i0, bi);
            sym_swap(S, i0 + 1, bj);
            Rat a = S(i0, i0), c = S(i0, i0 + 1), b = S(i0 + 1, i0 + 1);
            Rat det2 = a * b - c * c;
            for (int j = i0 + 2; j < n; ++j) {
                Rat r0 = S(j, i0), r1 = S(j, i0 + 1);
                if (r0 == 0 && r1 == 0) continue;
                sym_addmul(S, j, i0, -(r0 * b - r1 * c) / det2);
                sym_addmul(S, j, i0 + 1, -(r1 * a - r0 * c) / det2);
            }
            raw.push_back({best, true, det2 / Rat(pow_int(p, 2 * best))});
            i0 += 2;
        }
    }
    return raw;
}

}  // namespace

std::vector<JordanBlock> jordan_decomposition(const ZMat& gram, const Int& p) {
    if (gram.m != gram.n || !gram.is_symmetric())
        throw std::invalid_argument("jordan: need a symmetric square gram");
    std::map<int, JordanBlock> by_scale;
    for (const auto& rb : jordan_raw(gram, p)) {
        JordanBlock& b = by_scale[rb.scale];
        b.scale = rb.scale;
        b.rank += rb.pair ? 2 : 1;
        if (p == 2) {
            int u = unit_mod8(rb.unit, 0);
            b.unit = b.unit * u % 8;
            if (!rb.pair) {
                b.odd = true;
                b.oddity = (b.oddity + u) % 8;
            }
        } else {
            b.eps *= unit_chi(rb.unit, p, 0);
        }
    }
    std::vector<JordanBlock> out;
    for (auto& [k, b] : by_scale) {
        if (p == 2) b.eps = (b.unit == 1 || b.unit == 7) ? 1 : -1;
        out.push_back(b);
    }
    return out;
}

GenusSymbol genus_symbol(const ZMat& gram) {
    GenusSymbol g;
    g.rank = gram.n;
    g.sig = inertia(QMat(gram));
    if (g.sig.zero > 0) throw std::invalid_argument("genus_symbol: degenerate form");
    g.det = det(gram);
    for (long p : prime_factors(2 * g.det)) {
        LocalSymbol ls;
        ls.p = p;
        ls.blocks = jordan_decomposition(gram, Int(p));
        g.local.push_back(std::move(ls));
    }
    return g;
}

std::string GenusSymbol::str() const {
    std::ostringstream os;
    os << "sig(" << sig.pos << "," << sig.neg << ") det " << det.get_str();
    for (const auto& ls : local) {
        os << " " << ls.p.get_str() << ":";
        bool first = true;
        for (const auto& b : ls.blocks) {
            os << (first ? "" : ".") << pow_int(ls.p, b.scale).get_str() << "^"
               << (b.eps > 0 ? "+" : "-") << b.rank;
            if (ls.p == 2) os << (b.odd ? "_" + std::to_string(b.oddity) : "_II");
            first = false;
        }
    }
    return os.str();
}

bool same_genus(const ZMat& g1, const ZMat& g2) {
    if (g1.n != g2.n) return false;
    GenusSymbol a = genus_symbol(g1), b = genus_symbol(g2);
    bool by_symbol = a == b;
    Lattice L1{"", g1}, L2{"", g2};
    if (L1.is_even() && L2.is_even()) {
        bool by_form = a.sig.pos == b.sig.pos && a.sig.neg == b.sig.neg &&
                       fqf_is_isomorphic(disc_group(L1).form, disc_group(L2).form);
        if (by_form != by_symbol)
            throw std::logic_error("same_genus: local symbols disagree with discriminant form");
    }
    return by_symbol;
}

}  // namespace latk
