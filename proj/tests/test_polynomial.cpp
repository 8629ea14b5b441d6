#include <algorithm>
#include <random>

#include <doctest.h>

#include "support/oracles.hpp"
#include "sturmstab/polynomial.hpp"

using namespace sturmstab;
using sturmstab::testing::from_roots;
using sturmstab::testing::random_rational;

namespace {

// n = 2 slice of q for alpha = 1, beta = 1/4, gamma = 0.
const Polynomial kQuad{Rational(3, 4), Rational(2), Rational(5, 4)};

Polynomial random_poly(std::mt19937_64& rng, int degree) {
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k)
        c.push_back(random_rational(rng, -5, 5, 7));
    if (c.back().is_zero())
        c.back() = Rational(1);
    return Polynomial(c);
}

} // namespace

TEST_CASE("canonical form trims zero leading coefficients") {
    const Polynomial p{Rational(1), Rational(0), Rational(0)};
    CHECK(p.degree() == 0);
    CHECK(Polynomial{Rational(0)}.is_zero());
    CHECK(Polynomial().degree() == -1);
}

TEST_CASE("basic arithmetic") {
    const Polynomial s{Rational(0), Rational(1)};
    const Polynomial s2m1{Rational(-1), Rational(0), Rational(1)};
    CHECK(s2m1 + Polynomial::constant(1) == Polynomial::monomial(1, 2));
    CHECK((s + Polynomial::constant(1)) * (s - Polynomial::constant(1)) == s2m1);
    CHECK(Polynomial{Rational(0), Rational(2), Rational(1)} * Rational(1, 2) ==
          Polynomial{Rational(0), Rational(1), Rational(1, 2)});
    CHECK(-s == Polynomial{Rational(0), Rational(-1)});
    CHECK((s * Polynomial()).is_zero());
    CHECK(kQuad.str('s') == "5/4*s^2 + 2*s + 3/4");
}

TEST_CASE("derivative") {
    CHECK(derivative(kQuad) == Polynomial{Rational(2), Rational(5, 2)});
    CHECK(derivative(Polynomial::constant(7)).is_zero());
    CHECK(derivative(Polynomial::monomial(1, 3)) == Polynomial::monomial(3, 2));
}

TEST_CASE("division with remainder") {
    const Polynomial s2m1{Rational(-1), Rational(0), Rational(1)};
    const auto [q, r] = divrem(s2m1, Polynomial{Rational(-1), Rational(1)});
    CHECK(q == Polynomial{Rational(1), Rational(1)});
    CHECK(r.is_zero());

    const auto step = divrem(kQuad, derivative(kQuad));
    CHECK(step.remainder.degree() == 0);
    CHECK(step.remainder == Polynomial::constant(Rational(-1, 20)));

    const auto cube = divrem(Polynomial::monomial(1, 3), Polynomial::monomial(1, 1));
    CHECK(cube.quotient == Polynomial::monomial(1, 2));
    CHECK(cube.remainder.is_zero());

    CHECK_THROWS_AS(divrem(kQuad, Polynomial()), std::domain_error);
}

TEST_CASE("division round trip on random operands") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = random_poly(rng, static_cast<int>(rng() % 8));
        const Polynomial b = random_poly(rng, static_cast<int>(rng() % 5));
        const auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd and squarefree part") {
    const Polynomial x{Rational(0), Rational(1)};
    const Polynomial xp1{Rational(1), Rational(1)};
    CHECK(gcd(xp1 * xp1, xp1 * Rational(2)) == xp1);
    CHECK(gcd(Polynomial{Rational(1), Rational(0), Rational(1)}, x) == Polynomial::constant(1));
    CHECK_THROWS_AS(gcd(Polynomial(), Polynomial()), std::domain_error);

    // (s-2)^2 (s+3), expanded by the planted-root helper.
    const Polynomial p = from_roots({Rational(2), Rational(2), Rational(-3)});
    CHECK(p == Polynomial{Rational(12), Rational(-8), Rational(-1), Rational(1)});
    CHECK(gcd(p, derivative(p)) == Polynomial{Rational(-2), Rational(1)});
    CHECK(squarefree_part(p) == from_roots({Rational(2), Rational(-3)}));
    CHECK(squarefree_part(xp1 * xp1) == xp1);
    CHECK(squarefree_part(kQuad) == monic(kQuad));
    CHECK_THROWS_AS(squarefree_part(Polynomial()), std::domain_error);
}

TEST_CASE("gcd divides both inputs; squarefree part keeps roots and signs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        // Distinct planted roots with odd multiplicities 1 or 3 and a
        // positive leading coefficient: then p and its monic squarefree part
        // agree in sign away from the roots.
        std::vector<Rational> distinct;
        const int k = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) {
            const Rational r = random_rational(rng, -3, 3, 3);
            if (std::find(distinct.begin(), distinct.end(), r) == distinct.end())
                distinct.push_back(r);
        }
        std::vector<Rational> roots;
        for (const auto& r : distinct)
            for (int m = (rng() % 2 == 0) ? 1 : 3; m > 0; --m)
                roots.push_back(r);
        const Polynomial p = from_roots(roots, random_rational(rng, 1, 4, 3));
        const Polynomial other = random_poly(rng, 3) * from_roots({roots.front()});
        const Polynomial g = gcd(p, other);
        CHECK(divrem(p, g).remainder.is_zero());
        CHECK(divrem(other, g).remainder.is_zero());

        const Polynomial sq = squarefree_part(p);
        CHECK(sq == from_roots(distinct));
        CHECK(gcd(sq, derivative(sq)).degree() == 0);
        for (int i = 0; i < 20; ++i) {
            const Rational x = random_rational(rng, -4, 4, 17);
            if (!p(x).is_zero())
                CHECK(sq(x).sign() == p(x).sign());
        }
    }
}

TEST_CASE("one-sided signs") {
    CHECK(sign_at(kQuad, Rational(-1)) == 0);
    CHECK(sign_at(kQuad, Rational(-1), Side::from_right) == -1);
    CHECK(sign_at(kQuad, Rational(-1), Side::from_left) == 1);
    CHECK(sign_at(Polynomial::monomial(1, 2), Rational(0), Side::from_left) == 1);
    CHECK(sign_at(Polynomial::monomial(1, 3), Rational(0), Side::from_left) == -1);
    CHECK(sign_at(Polynomial(), Rational(3), Side::from_right) == 0);
}

TEST_CASE("one-sided sign matches shrinking offsets") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> roots;
        const int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i)
            roots.push_back(random_rational(rng, -2, 2, 2));
        const Polynomial p = from_roots(roots, random_rational(rng, -3, 3, 2) + Rational(1, 7));
        const Rational x = roots[rng() % roots.size()];
        for (const Side side : {Side::from_left, Side::from_right}) {
            // Halve delta until the sign has stopped changing for a while.
            Rational delta(1);
            int last = 0;
            int stable = 0;
            for (int i = 0; i < 200 && stable < 20; ++i) {
                const Rational probe = side == Side::from_right ? x + delta : x - delta;
                const int s = p(probe).sign();
                stable = (s == last && s != 0) ? stable + 1 : 0;
                last = s;
                delta /= Rational(2);
            }
            CHECK(sign_at(p, x, side) == last);
        }
    }
}
