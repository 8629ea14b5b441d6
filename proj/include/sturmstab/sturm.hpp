#ifndef STURMSTAB_STURM_HPP
#define STURMSTAB_STURM_HPP

#include <vector>

#include "sturmstab/polynomial.hpp"
#include "sturmstab/rational.hpp"

namespace sturmstab {

/// Sturm chain g_0, g_1 = g_0', g_k = -rem(g_{k-2}, g_{k-1}), ending in a
/// nonzero constant. Every element is rescaled by a positive rational to
/// primitive integer form, which leaves all signs intact.
///
/// g_0 is the squarefree part of the input (same leading sign). When the
/// input had repeated roots, `deflated()` is true.
class SturmChain {
public:
    /// Throws std::domain_error for the zero polynomial.
    explicit SturmChain(const Polynomial& p);

    const std::vector<Polynomial>& polys() const { return polys_; }
    std::size_t size() const { return polys_.size(); }
    const Polynomial& operator[](std::size_t k) const { return polys_[k]; }
    bool deflated() const { return deflated_; }

    /// Signs of every chain element at x, one-sided per `side`.
    std::vector<int> signs(const Rational& x, Side side = Side::at) const;

private:
    std::vector<Polynomial> polys_;
    bool deflated_ = false;
};

inline SturmChain build_chain(const Polynomial& p) { return SturmChain(p); }

/// Number of sign alternations in a sign sequence, zeros skipped.
int count_variations(const std::vector<int>& signs);

int sign_variations(const SturmChain& chain, const Rational& x, Side side = Side::at);

/// Distinct real roots strictly inside (a, b): V(a+) - V(b-). Roots at the
/// endpoints are excluded. Throws std::invalid_argument unless a < b, and
/// std::domain_error for the zero polynomial.
int count_roots_open(const Polynomial& p, const Rational& a, const Rational& b);
int count_roots_open(const SturmChain& chain, const Rational& a, const Rational& b);

/// Interval [lo, hi] holding exactly one distinct root. A root hit exactly
/// during bisection is reported as lo == hi.
struct RootEnclosure {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational mid() const { return midpoint(lo, hi); }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// One enclosure per distinct root in (a, b), ascending and disjoint, each of
/// width <= tol. Throws std::invalid_argument unless a < b and tol > 0.
std::vector<RootEnclosure> isolate_and_refine(const Polynomial& p, const Rational& a, const Rational& b,
                                              const Rational& tol);
std::vector<RootEnclosure> isolate_and_refine(const SturmChain& chain, const Rational& a, const Rational& b,
                                              const Rational& tol);

} // namespace sturmstab

#endif
