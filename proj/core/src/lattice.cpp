#include "latk/lattice.hpp"

#include <cctype>
#include <stdexcept>

namespace latk {

bool Lattice::is_even() const {
    for (int i = 0; i < gram.n; ++i)
        if (gram(i, i) % 2 != 0) return false;
    return true;
}

bool Lattice::is_negative_definite() const {
    Inertia s = signature();
    return s.pos == 0 && s.zero == 0;
}

Lattice Lattice::rescaled(const Int& s) const {
    ZMat g = gram;
    for (auto& e : g.a) e *= s;
    std::string lab = label;
    if (s == -1)
        lab += "(-1)";
    else if (s != 1)
        lab += "(" + s.get_str() + ")";
    return Lattice(lab, std::move(g));
}

Lattice Lattice::direct_sum(const Lattice& other) const {
    ZMat g = ZMat::zero(rank() + other.rank(), rank() + other.rank());
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) g(i, j) = gram(i, j);
    for (int i = 0; i < other.rank(); ++i)
        for (int j = 0; j < other.rank(); ++j)
            g(rank() + i, rank() + j) = other.gram(i, j);
    std::string lab;
    if (label.empty())
        lab = other.label;
    else if (other.label.empty())
        lab = label;
    else
        lab = label + " + " + other.label;
    return Lattice(std::move(lab), std::move(g));
}

namespace {

ZMat cartan_neg_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    ZMat g = ZMat::zero(n, n);
    for (int i = 0; i < n; ++i) g(i, i) = -2;
    for (auto [a, b] : edges) {
        g(a, b) = 1;
        g(b, a) = 1;
    }
    return g;
}

ZMat gram_A(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return cartan_neg_from_edges(n, e);
}

ZMat gram_D(int n) {
    if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
    e.push_back({n - 3, n - 1});
    return cartan_neg_from_edges(n, e);
}

// Bourbaki numbering: chain 1-3-4-5-...-n with 2 attached to 4
ZMat gram_E(int n) {
    if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
    std::vector<std::pair<int, int>> e = {{0, 2}, {1, 3}, {2, 3}};
    for (int i = 3; i + 1 < n; ++i) e.push_back({i, i + 1});
    return cartan_neg_from_edges(n, e);
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument("lattice DSL: expected '" + std::string(1, c) +
                                        "' at offset " + std::to_string(pos) + " in \"" + s + "\"");
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits)
            throw std::invalid_argument("lattice DSL: expected integer in \"" + s + "\"");
        return Int(s.substr(start, pos - start));
    }

    Lattice atom() {
        skip_ws();
        if (accept('[')) {
            Int k = integer();
            expect(']');
            ZMat g(1, 1);
            g(0, 0) = k;
            return Lattice("[" + k.get_str() + "]", std::move(g));
        }
        if (accept('(')) {
            Lattice inner = sum();
            expect(')');
            return inner;
        }
        size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string name = s.substr(start, pos - start);
        if (name.empty())
            throw std::invalid_argument("lattice DSL: expected summand at offset " +
                                        std::to_string(start) + " in \"" + s + "\"");
        if (name == "U") return Lattice("U", ZMat{{0, 1}, {1, 0}});
        if (name == "A" || name == "D" || name == "E") {
            size_t d0 = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == d0)
                throw std::invalid_argument("lattice DSL: root lattice needs a rank in \"" + s +
                                            "\"");
            int n = std::stoi(s.substr(d0, pos - d0));
            std::string lab = name + std::to_string(n);
            if (name == "A") return Lattice(lab, gram_A(n));
            if (name == "D") return Lattice(lab, gram_D(n));
            return Lattice(lab, gram_E(n));
        }
        throw std::invalid_argument("lattice DSL: unknown summand \"" + name + "\"");
    }

    Lattice term() {
        Lattice base = atom();
        // optional rescale (s), then optional repetition ^r, in that order
        if (peek() == '(') {
            size_t save = pos;
            ++pos;
            skip_ws();
            if (pos < s.size() && (s[pos] == '-' || s[pos] == '+' ||
                                   std::isdigit(static_cast<unsigned char>(s[pos])))) {
                Int k = integer();
                expect(')');
                base = base.rescaled(k);
            } else {
                pos = save;
            }
        }
        if (accept('^')) {
            Int r = integer();
            if (r < 1 || r > 64) throw std::invalid_argument("lattice DSL: bad repetition count");
            Lattice acc = base;
            for (Int i = 1; i < r; ++i) acc = acc.direct_sum(base);
            return acc;
        }
        return base;
    }

    Lattice sum() {
        Lattice acc = term();
        while (accept('+')) acc = acc.direct_sum(term());
        return acc;
    }
};

}  // namespace

Lattice from_dsl(const std::string& text) {
    Parser p(text);
    Lattice L = p.sum();
    if (!p.eof())
        throw std::invalid_argument("lattice DSL: trailing input at offset " +
                                    std::to_string(p.pos) + " in \"" + text + "\"");
    return L;
}

Lattice named(const std::string& name) { return from_dsl(name); }

ZMat gram_of_rows(const ZMat& G, const ZMat& S) { return S * G * S.transpose(); }

ZMat saturate_rows(const ZMat& S) {
    // double orthogonal complement w.r.t. the standard dot product
    ZMat T = kernel_z(S.transpose());
    return kernel_z(T.transpose());
}

bool is_primitive_rows(const ZMat& S) {
    ZMat sat = saturate_rows(S);
    return hnf(S) == hnf(sat);
}

ZMat orth_complement_rows(const ZMat& G, const ZMat& S) { return kernel_z(G * S.transpose()); }

ZMat invariant_rows(const ZMat& f) {
    ZMat d = f;
    for (int i = 0; i < d.n; ++i) d(i, i) -= 1;
    return kernel_z(d);
}

ZMat coinvariant_rows(const ZMat& G, const ZMat& f) {
    return orth_complement_rows(G, invariant_rows(f));
}

Int index_in(const ZMat& sup, const ZMat& sub) {
    if (rank_of(sup) != sup.m || rank_of(sub) != sub.m || sup.m != sub.m)
        throw std::invalid_argument("index_in: need equal full row ranks");
    ZMat coeff(sub.m, sup.m);  // coeff * sup = sub, must be integral
    for (int i = 0; i < sub.m; ++i) {
        std::vector<Rat> b(sub.n);
        for (int j = 0; j < sub.n; ++j) b[j] = Rat(sub(i, j));
        std::vector<Rat> x = solve_left(sup, b);
        for (int j = 0; j < sup.m; ++j) {
            if (x[j].get_den() != 1)
                throw std::invalid_argument("index_in: sub not contained in sup");
            coeff(i, j) = x[j].get_num();
        }
    }
    Int v = det(coeff);
    if (v == 0) throw std::invalid_argument("index_in: spans differ");
    return v < 0 ? Int(-v) : v;
}

bool is_isometry_matrix(const ZMat& G, const ZMat& A) {
    if (A.m != G.n || A.n != G.n) return false;
    return A * G * A.transpose() == G;
}

int matrix_order(const ZMat& A, int bound) {
    ZMat id = ZMat::identity(A.n);
    ZMat p = A;
    for (int k = 1; k <= bound; ++k) {
        if (p == id) return k;
        p = p * A;
    }
    throw std::runtime_error("matrix_order: exceeded bound");
}

}  // namespace latk
