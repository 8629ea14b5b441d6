// Test-only reference routines. None of these go through the library's
// reduction, Sturm or stability code paths.
#ifndef STURMSTAB_TESTS_ORACLES_HPP
#define STURMSTAB_TESTS_ORACLES_HPP

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "sturmstab/polynomial.hpp"
#include "sturmstab/rational.hpp"

namespace sturmstab::testing {

/// Bivariate polynomial in (mu, n) keyed by (power of mu, power of n).
using Bivariate = std::map<std::pair<int, int>, Integer>;

inline void add_to(Bivariate& acc, const Bivariate& term, const Integer& scale = 1) {
    for (const auto& [k, v] : term) {
        acc[k] += scale * v;
        if (acc[k] == 0)
            acc.erase(k);
    }
}

inline Bivariate mul(const Bivariate& a, const Bivariate& b) {
    Bivariate out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            const std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            out[k] += va * vb;
            if (out[k] == 0)
                out.erase(k);
        }
    return out;
}

inline Bivariate power(const Bivariate& a, int e) {
    Bivariate out{{{0, 0}, 1}};
    for (int i = 0; i < e; ++i)
        out = mul(out, a);
    return out;
}

/// (mu + n)^N - mu^N by repeated multiplication.
inline Bivariate shifted_difference(int order) {
    Bivariate out = power(Bivariate{{{1, 0}, 1}, {{0, 1}, 1}}, order);
    add_to(out, Bivariate{{{order, 0}, 1}}, -1);
    return out;
}

/// sum_i a_i (mu^2 + mu n)^i n^{N-2i}.
inline Bivariate reduced_expansion(const std::vector<Integer>& a, int order) {
    const Bivariate s{{{2, 0}, 1}, {{1, 1}, 1}};
    Bivariate out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Bivariate npow{{{0, order - 2 * static_cast<int>(i)}, 1}};
        add_to(out, mul(power(s, static_cast<int>(i)), npow), a[i]);
    }
    return out;
}

/// Sign of (u + sigma*sqrt(d)) / v - x for rational u, v, d (d >= 0, v != 0).
inline int compare_surd(const Rational& x, const Rational& u, int sigma, const Rational& d, const Rational& v) {
    // root - x = (u - x v + sigma sqrt d) / v
    const Rational a = u - x * v;
    int s;
    const int sa = a.sign();
    if (d.is_zero() || sigma == 0)
        s = sa;
    else if (sa == 0)
        s = sigma;
    else if (sa == sigma)
        s = sa;
    else {
        const Rational lhs = a * a;
        s = lhs == d ? 0 : (lhs > d ? sa : sigma);
    }
    return s * v.sign();
}

/// lo <= (u + sigma sqrt d)/v <= hi.
inline bool encloses_surd(const Rational& lo, const Rational& hi, const Rational& u, int sigma, const Rational& d,
                          const Rational& v) {
    return compare_surd(lo, u, sigma, d, v) >= 0 && compare_surd(hi, u, sigma, d, v) <= 0;
}

/// Uniform rational p/q in [lo, hi] with q drawn from 1..max_den.
inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 12) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long q = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(lo * q, hi * q);
    return Rational(num_dist(rng), q);
}

/// Product of (x - r) over the given roots, times `lead`.
inline Polynomial from_roots(const std::vector<Rational>& roots, const Rational& lead = 1) {
    Polynomial p = Polynomial::constant(lead);
    for (const auto& r : roots)
        p = p * Polynomial{-r, Rational(1)};
    return p;
}

} // namespace sturmstab::testing

#endif
