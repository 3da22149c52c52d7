#include "latk/int.hpp"

#include <map>

namespace latk {

std::vector<long> primes_upto(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(n + 1, true);
    for (long i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

std::vector<long> prime_factors(Int n) {
    n = abs(n);
    if (n == 0) throw std::invalid_argument("prime_factors(0)");
    std::vector<long> ps;
    for (long d = 2; Int(d) * d <= n; d += (d == 2 ? 1 : 2))
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(to_long(n));
    return ps;
}

Rat bernoulli(unsigned n) {
    static std::map<unsigned, Rat> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    for (unsigned m = 0; m <= n; ++m) {
        if (cache.count(m)) continue;
        if (m == 0) {
            cache[0] = Rat(1);
            continue;
        }
        Rat s(0);
        Int binom;
        for (unsigned j = 0; j < m; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
            s += Rat(binom) * cache[j];
        }
        Rat b = -s / Rat(m + 1);
        b.canonicalize();
        cache[m] = b;
    }
    return cache[n];
}

Rat zeta_one_minus(unsigned twok) {
    // zeta(1-2k) for twok = 2k >= 2
    Rat z = -bernoulli(twok) / Rat(twok);
    z.canonicalize();
    return z;
}

Rat dirichlet_L_one_minus(unsigned k, const Int& D) {
    if (D == 1) return zeta_one_minus(2 * ((k + 1) / 2));  // caller handles trivial character separately
    Int f = abs(D);
    unsigned long fl = f.get_ui();
    // generalized Bernoulli number B_{k,chi} = f^{k-1} sum_{a=1}^{f} chi(a) B_k(a/f)
    // with B_k(x) the Bernoulli polynomial; L(1-k, chi) = -B_{k,chi}/k.
    // B_k(x) = sum_{i=0}^{k} C(k,i) B_i x^{k-i}
    Rat bk(0);
    for (unsigned long a = 1; a <= fl; ++a) {
        int chi = kronecker(D, Int(a));
        if (chi == 0) continue;
        Rat x(Int(a), f);
        Rat bpoly(0);
        Rat xpow(1);
        // accumulate from i = k down to 0 so xpow tracks x^{k-i}
        std::vector<Rat> terms(k + 1);
        for (unsigned i = 0; i <= k; ++i) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), k, i);
            terms[i] = Rat(binom) * bernoulli(i);
        }
        for (int i = static_cast<int>(k); i >= 0; --i) {
            bpoly += terms[static_cast<unsigned>(i)] * xpow;
            xpow *= x;
        }
        bk += Rat(chi) * bpoly;
    }
    Rat fpow(pow_int(f, k >= 1 ? k - 1 : 0));
    bk *= fpow;
    Rat L = -bk / Rat(k);
    L.canonicalize();
    return L;
}

std::string rat_str(const Rat& x) {
    std::string s = x.get_num().get_str();
    if (x.get_den() != 1) s += "/" + x.get_den().get_str();
    return s;
}

}  // namespace latk
