#include "latk/shortvec.hpp"

#include "latk/int.hpp"

#include <algorithm>
#include <stdexcept>

namespace latk {

namespace {

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// some rational >= sqrt(x), x >= 0
Rat sqrt_upper(const Rat& x) {
    Int prod = x.get_num() * x.get_den();
    return Rat(isqrt(prod) + 1, x.get_den());
}

bool lex_positive(const std::vector<Int>& v) {
    for (const Int& e : v) {
        if (e != 0) return e > 0;
    }
    return false;
}

struct Enumerator {
    int n;
    QMat u;               // unit upper triangular factors
    std::vector<Rat> d;   // positive diagonal of the LDL^T of -gram
    Rat cap;              // enumerate norms q(x) <= cap in the positive form

    std::vector<Int> x;
    std::vector<Rat> shift;  // shift[i] = sum_{j>i} u(i,j) x[j]
    std::vector<Rat> slack;  // remaining budget at level i
    std::map<Int, std::vector<std::vector<Int>>>* out;

    Enumerator(const ZMat& gram, const Int& bound)
        : n(gram.m), u(gram.m, gram.m), d(gram.m), cap(-bound) {
        if (gram.m != gram.n) throw std::invalid_argument("gram not square");
        QMat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = Rat(-gram(i, j));
        for (int i = 0; i < n; ++i) {
            d[i] = a(i, i);
            if (d[i] <= 0) throw std::invalid_argument("gram not negative definite");
            for (int j = 0; j < n; ++j) u(i, j) = (i == j) ? Rat(1) : Rat(0);
            for (int j = i + 1; j < n; ++j) u(i, j) = a(i, j) / d[i];
            for (int k = i + 1; k < n; ++k)
                for (int l = k; l < n; ++l) {
                    a(k, l) -= a(k, i) * a(i, l) / d[i];
                    a(l, k) = a(k, l);
                }
        }
        x.assign(n, Int(0));
        shift.assign(n, Rat(0));
        slack.assign(n + 1, Rat(0));
    }

    void run(std::map<Int, std::vector<std::vector<Int>>>& sink) {
        out = &sink;
        slack[n] = cap;
        descend(n - 1);
        for (auto& [norm, vecs] : sink) std::sort(vecs.begin(), vecs.end());
    }

    void descend(int i) {
        if (i < 0) {
            if (lex_positive(x)) {
                Rat used = cap - slack[0];
                Int norm = -Int(used.get_num());  // used is integral: q integer valued
                if (used.get_den() != 1) throw std::logic_error("non-integral norm");
                if (norm <= -2) (*out)[norm].push_back(x);
            }
            return;
        }
        Rat s(0);
        for (int j = i + 1; j < n; ++j)
            if (x[j] != 0) s += u(i, j) * Rat(x[j]);
        shift[i] = s;
        Rat b = slack[i + 1] / d[i];
        Rat r = sqrt_upper(b);
        Int lo = ceil_rat(-s - r);
        Int hi = floor_rat(-s + r);
        for (Int t = lo; t <= hi; ++t) {
            Rat off = Rat(t) + s;
            Rat used = d[i] * off * off;
            if (used > slack[i + 1]) continue;
            x[i] = t;
            slack[i] = slack[i + 1] - used;
            descend(i - 1);
        }
        x[i] = 0;
    }
};

}  // namespace

std::map<Int, std::vector<std::vector<Int>>> short_vectors_by_norm(const ZMat& gram,
                                                                   const Int& bound) {
    std::map<Int, std::vector<std::vector<Int>>> sink;
    if (bound > -2) return sink;
    Enumerator e(gram, bound);
    e.run(sink);
    return sink;
}

std::vector<std::vector<Int>> vectors_of_norm(const ZMat& gram, const Int& norm) {
    auto all = short_vectors_by_norm(gram, norm);
    auto it = all.find(norm);
    if (it == all.end()) return {};
    return std::move(it->second);
}

Int count_vectors_of_norm(const ZMat& gram, const Int& norm) {
    return Int(2) * Int(vectors_of_norm(gram, norm).size());
}

}  // namespace latk
