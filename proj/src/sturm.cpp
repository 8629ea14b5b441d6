#include "sturmstab/sturm.hpp"

#include <stdexcept>

namespace sturmstab {

namespace {

std::vector<Polynomial> raw_chain(const Polynomial& g0) {
    std::vector<Polynomial> chain{positive_primitive(g0)};
    Polynomial d = derivative(g0);
    if (d.is_zero())
        return chain;
    chain.push_back(positive_primitive(d));
    while (true) {
        const auto& prev = chain[chain.size() - 2];
        const auto& last = chain.back();
        Polynomial r = divrem(prev, last).remainder;
        if (r.is_zero())
            break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

void refine(const Polynomial& g0, Rational lo, Rational hi, const Rational& tol,
            std::vector<RootEnclosure>& out) {
    // Ends that are themselves roots (split points, interval ends) are moved
    // off so the closed enclosure holds exactly one root.
    const int sign_lo = sign_at(g0, lo, Side::from_right);
    while (hi - lo > tol || g0(lo).is_zero() || g0(hi).is_zero()) {
        Rational mid = midpoint(lo, hi);
        const int v = g0(mid).sign();
        if (v == 0) {
            out.push_back({mid, mid});
            return;
        }
        if (v == sign_lo)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    out.push_back({std::move(lo), std::move(hi)});
}

void isolate(const SturmChain& chain, const Rational& lo, const Rational& hi, int count, const Rational& tol,
             std::vector<RootEnclosure>& out) {
    if (count == 0)
        return;
    if (count == 1) {
        refine(chain[0], lo, hi, tol, out);
        return;
    }
    const Rational mid = midpoint(lo, hi);
    const int left = count_roots_open(chain, lo, mid);
    const bool at_mid = chain[0](mid).is_zero();
    isolate(chain, lo, mid, left, tol, out);
    if (at_mid)
        out.push_back({mid, mid});
    isolate(chain, mid, hi, count - left - (at_mid ? 1 : 0), tol, out);
}

} // namespace

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero())
        throw std::domain_error("Sturm chain of the zero polynomial");
    polys_ = raw_chain(p);
    if (!polys_.back().is_constant()) {
        // The last element is gcd(p, p') up to scale; divide it out and restart.
        Polynomial g0 = divrem(p, polys_.back()).quotient;
        if (g0.leading().sign() != p.leading().sign())
            g0 = -g0;
        polys_ = raw_chain(g0);
        deflated_ = true;
    }
}

std::vector<int> SturmChain::signs(const Rational& x, Side side) const {
    std::vector<int> out;
    out.reserve(polys_.size());
    for (const auto& g : polys_)
        out.push_back(sign_at(g, x, side));
    return out;
}

int count_variations(const std::vector<int>& signs) {
    int variations = 0;
    int previous = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (previous != 0 && s != previous)
            ++variations;
        previous = s;
    }
    return variations;
}

int sign_variations(const SturmChain& chain, const Rational& x, Side side) {
    return count_variations(chain.signs(x, side));
}

int count_roots_open(const SturmChain& chain, const Rational& a, const Rational& b) {
    if (!(a < b))
        throw std::invalid_argument("root counting interval needs a < b, got (" + a.str() + ", " + b.str() + ")");
    return sign_variations(chain, a, Side::from_right) - sign_variations(chain, b, Side::from_left);
}

int count_roots_open(const Polynomial& p, const Rational& a, const Rational& b) {
    if (!(a < b))
        throw std::invalid_argument("root counting interval needs a < b, got (" + a.str() + ", " + b.str() + ")");
    return count_roots_open(SturmChain(p), a, b);
}

std::vector<RootEnclosure> isolate_and_refine(const SturmChain& chain, const Rational& a, const Rational& b,
                                              const Rational& tol) {
    if (tol.sign() <= 0)
        throw std::invalid_argument("enclosure tolerance must be positive");
    std::vector<RootEnclosure> out;
    isolate(chain, a, b, count_roots_open(chain, a, b), tol, out);
    return out;
}

std::vector<RootEnclosure> isolate_and_refine(const Polynomial& p, const Rational& a, const Rational& b,
                                              const Rational& tol) {
    if (!(a < b))
        throw std::invalid_argument("isolation interval needs a < b, got (" + a.str() + ", " + b.str() + ")");
    return isolate_and_refine(SturmChain(p), a, b, tol);
}

} // namespace sturmstab
