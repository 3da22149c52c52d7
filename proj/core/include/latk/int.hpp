// Arbitrary-precision integer/rational helpers on top of GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latk {

using Int = mpz_class;
using Rat = mpq_class;

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("Int does not fit in long");
    return a.get_si();
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = gcd(a,b) = s*a + t*b
inline Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// floor(sqrt(a)), a >= 0
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_square(const Int& a) { return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()); }

// Kronecker symbol (a/n)
inline int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

// largest k with p^k | a (a != 0), and the cofactor a / p^k
inline int valuation(Int a, const Int& p, Int* unit = nullptr) {
    if (a == 0) throw std::invalid_argument("valuation of zero");
    int k = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        a = q;
        ++k;
    }
    if (unit) *unit = a;
    return k;
}

inline Int pow_int(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

// a^(-1) mod m, m > 1, gcd(a,m) = 1
inline Int invmod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("invmod: not invertible");
    return r;
}

// canonical representative in [0, m)
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// reduce a rational into [0, m) for a positive integer modulus m
inline Rat mod_rat(Rat x, const Int& m) {
    x.canonicalize();
    Int den = x.get_den();
    Int num = mod_floor(x.get_num(), m * den);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat qmod2(const Rat& x) { return mod_rat(x, 2); }
inline Rat bmod1(const Rat& x) { return mod_rat(x, 1); }

std::vector<long> primes_upto(long n);
bool is_prime(const Int& n);

// distinct prime divisors of |n|, ascending (n != 0)
std::vector<long> prime_factors(Int n);

// Bernoulli number B_n (B_1 = -1/2 convention), memoized.
Rat bernoulli(unsigned n);

// zeta(1-2k) = -B_{2k} / (2k), exact
Rat zeta_one_minus(unsigned twok);

// Dirichlet L-function L(1-k, chi_D) for the Kronecker character mod |D|,
// D a fundamental discriminant (or 1), via generalized Bernoulli numbers.
Rat dirichlet_L_one_minus(unsigned k, const Int& D);

std::string rat_str(const Rat& x);

}  // namespace latk
