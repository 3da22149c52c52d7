// Exact Minkowski-Siegel mass. The analytic normalization
//   mass = 2 pi^{-n(n+1)/4} prod_{j<=n} Gamma(j/2) |det|^{(n+1)/2} prod_p 2/alpha_p
// is assembled with the good primes folded into even zeta values and one
// Dirichlet L-value; every power of pi and every square root cancels
// identically, which the code asserts rather than assumes.
#include "latk/genus.hpp"

#include <algorithm>
#include <stdexcept>

namespace latk {

namespace {

Rat rat_factorial(long k) {
    Rat r = 1;
    for (long i = 2; i <= k; ++i) r *= i;
    return r;
}

// Gamma(m/2) = g * sqrt(pi) for odd m of either sign; returns g
Rat gamma_half(long m) {
    Rat g = 1;
    long t = m;
    while (t > 1) { t -= 2; g *= Rat(t, 2); }
    while (t < 1) { g /= Rat(t, 2); t += 2; }
    return g;
}

// rational r with zeta(2m) = r * pi^{2m}
Rat zeta_even_rat(long twom) {
    Rat r = bernoulli(static_cast<unsigned>(twom)) *
            Rat(pow_int(2, static_cast<unsigned long>(twom - 1))) / rat_factorial(twom);
    if ((twom / 2) % 2 == 0) r = -r;
    return r;
}

Rat pow_rat(const Rat& x, long e) {
    Rat r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

Rat local_density(const std::vector<JordanBlock>& blocks, const Int& p) {
    std::vector<JordanBlock> bl = blocks;
    std::sort(bl.begin(), bl.end(),
              [](const JordanBlock& x, const JordanBlock& y) { return x.scale < y.scale; });
    long W = 0;
    for (size_t i = 0; i < bl.size(); ++i) {
        long above = 0;
        for (size_t j = i + 1; j < bl.size(); ++j) above += bl[j].rank;
        W += bl[i].scale *
             (static_cast<long>(bl[i].rank) * (bl[i].rank + 1) / 2 + bl[i].rank * above);
    }
    Rat a(pow_int(p, static_cast<unsigned long>(W)));
    Rat pinv(Int(1), p);
    if (p != 2) {
        for (const auto& b : bl) {
            Rat g = 2;
            int s = b.rank / 2;
            if (b.rank % 2 == 1) {
                for (int j = 1; j <= s; ++j) g *= 1 - pow_rat(pinv, 2 * j);
            } else {
                int e = b.eps;
                if (s % 2 == 1 && kronecker(-1, p) == -1) e = -e;
                g *= 1 - e * pow_rat(pinv, s);
                for (int j = 1; j < s; ++j) g *= 1 - pow_rat(pinv, 2 * j);
            }
            a *= g;
        }
        return a;
    }
    Rat half(1, 2);
    for (const auto& b : bl) {
        a *= Rat(pow_int(2, b.rank));
        Rat g = 2;
        if (!b.odd) {
            int s = b.rank / 2;
            bool bound = false;
            for (const auto& c : bl)
                if (c.odd && (c.scale == b.scale - 1 || c.scale == b.scale + 1)) bound = true;
            if (bound) {
                // an odd neighbor one scale away kills the sign distinction
                for (int j = 1; j <= s; ++j) g *= 1 - pow_rat(half, 2 * j);
            } else {
                g *= 1 - b.eps * pow_rat(half, s);
                for (int j = 1; j < s; ++j) g *= 1 - pow_rat(half, 2 * j);
            }
        } else if (b.rank % 2 == 1) {
            for (int j = 1; j <= (b.rank - 1) / 2; ++j) g *= 1 - pow_rat(half, 2 * j);
        } else {
            for (int j = 1; j < b.rank / 2; ++j) g *= 1 - pow_rat(half, 2 * j);
            if (b.unit % 4 == 3) g *= half;
        }
        a *= g;
    }
    for (size_t i = 0; i + 1 < bl.size(); ++i) {
        int gap = bl[i + 1].scale - bl[i].scale;
        if ((gap == 1 && (bl[i].odd || bl[i + 1].odd)) ||
            (gap == 2 && bl[i].odd && bl[i + 1].odd))
            a *= half;
    }
    return a;
}

Int fundamental_discriminant(const Int& D) {
    if (D == 0) throw std::invalid_argument("fundamental_discriminant(0)");
    Int A = abs(D);
    for (Int d = 2; d * d <= A; ++d)
        while (A % (d * d) == 0) A /= d * d;
    Int d0 = D > 0 ? A : -A;
    if (mod_floor(d0, 4) != 1) d0 *= 4;
    return d0;
}

Rat genus_mass(const ZMat& gram) {
    Inertia sig = inertia(QMat(gram));
    if (sig.zero > 0 || (sig.pos > 0 && sig.neg > 0))
        throw std::invalid_argument("genus_mass: need a definite form");
    ZMat G = sig.neg > 0 ? Int(-1) * gram : gram;
    long n = G.n;
    if (n == 1) return Rat(1, 2);
    Int d = det(G);
    std::vector<long> bad = prime_factors(2 * d);

    Rat coef = 2;
    long hpi = -n * (n + 1) / 2;  // running exponent of sqrt(pi)
    for (long j = 1; j <= n; ++j) {
        if (j % 2 == 0) coef *= rat_factorial(j / 2 - 1);
        else { coef *= gamma_half(j); hpi += 1; }
    }

    if (n % 2 == 1) {
        long s = (n - 1) / 2;
        coef *= Rat(pow_int(d, static_cast<unsigned long>((n + 1) / 2)));
        for (long j = 1; j <= s; ++j) { coef *= zeta_even_rat(2 * j); hpi += 4 * j; }
        for (long p : bad)
            for (long j = 1; j <= s; ++j) coef *= 1 - pow_rat(Rat(Int(1), Int(p)), 2 * j);
    } else {
        long s = n / 2;
        coef *= Rat(pow_int(d, static_cast<unsigned long>(s)));
        for (long j = 1; j < s; ++j) { coef *= zeta_even_rat(2 * j); hpi += 4 * j; }
        Int D0 = fundamental_discriminant(s % 2 == 1 ? Int(-d) : d);
        if (D0 == 1) {
            if (s % 2 != 0) throw std::logic_error("genus_mass: zeta at an odd argument");
            coef *= zeta_even_rat(s);
            hpi += 2 * s;
            Int h = isqrt(d);
            if (h * h != d) throw std::logic_error("genus_mass: determinant must be square");
            coef *= h;
        } else {
            Int f = abs(D0);
            long par = D0 < 0 ? 1 : 0;  // parity of the character
            coef /= Rat(pow_int(f, static_cast<unsigned long>(s)));
            hpi += 2 * s - 1;
            coef *= gamma_half(1 - s + par);
            hpi += 1;
            coef /= rat_factorial((s + par) / 2 - 1);
            coef *= dirichlet_L_one_minus(static_cast<unsigned>(s), D0);
            Int u = isqrt(d * f);
            if (u * u != d * f) throw std::logic_error("genus_mass: radicals fail to cancel");
            coef *= u;
        }
        for (long p : bad) {
            Rat pinv(Int(1), Int(p));
            coef *= 1 - kronecker(D0, p) * pow_rat(pinv, s);
            for (long j = 1; j < s; ++j) coef *= 1 - pow_rat(pinv, 2 * j);
        }
    }
    if (hpi != 0) throw std::logic_error("genus_mass: pi powers fail to cancel");
    for (long p : bad)
        coef *= Rat(2) / local_density(jordan_decomposition(G, Int(p)), Int(p));
    coef.canonicalize();
    return coef;
}

}  // namespace latk
