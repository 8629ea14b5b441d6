#include <algorithm>
#include <random>

#include <doctest.h>

#include "support/oracles.hpp"
#include "sturmstab/dispersion.hpp"
#include "sturmstab/sturm.hpp"

using namespace sturmstab;
using sturmstab::testing::random_rational;

namespace {

DispersionSpec spec3(Rational a, Rational b, Rational c) { return DispersionSpec::from_coefficients({a, b, c}); }

DispersionSpec random_spec(std::mt19937_64& rng, std::size_t terms = 3) {
    while (true) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < terms; ++i)
            c.push_back(random_rational(rng, -3, 3));
        if (std::any_of(c.begin(), c.end(), [](const Rational& r) { return !r.is_zero(); }))
            return DispersionSpec::from_coefficients(c);
    }
}

} // namespace

TEST_CASE("dispersion spec validation and parsing") {
    CHECK_THROWS_AS(spec3(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(DispersionSpec({{4, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(DispersionSpec({{1, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(DispersionSpec({{5, Rational(1)}, {3, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(DispersionSpec({}), std::invalid_argument);

    const auto s = DispersionSpec::parse("1, 1/4, 0");
    CHECK(s == spec3(1, Rational(1, 4), 0));
    CHECK(s.str() == "1,1/4,0");
    CHECK(s.max_order() == 7);
    CHECK(s.coefficient(5) == Rational(1, 4));
    CHECK(s.coefficient(9) == Rational(0));

    try {
        DispersionSpec::parse("1,1/x,0");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column() == 4);
    }
    CHECK_THROWS_AS(DispersionSpec::parse("0,0,0"), std::invalid_argument);
}

TEST_CASE("parameter names") {
    CHECK(parameter_name(3) == "alpha");
    CHECK(parameter_name(7) == "gamma");
    CHECK(parameter_name(9) == "c9");
    CHECK(parameter_order("beta") == 5);
    CHECK(parameter_order("c11") == 11);
    CHECK(parameter_order("c4") == 0);
    CHECK(parameter_order("delta") == 0);
}

TEST_CASE("dispersion relation") {
    const auto s = spec3(1, Rational(1, 4), 0);
    // -alpha k^3 + beta k^5 - gamma k^7 at k = 1
    CHECK(omega(s, 1) == Rational(-3, 4));
    CHECK(omega(s, 0) == Rational(0));
    CHECK(omega(spec3(2, -1, 3), 2) == Rational(-2 * 8 - 32 - 3 * 128));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto spec = random_spec(rng);
        const Rational k = random_rational(rng, -4, 4);
        CHECK(omega(spec, -k) == -omega(spec, k));
        CHECK(omega_polynomial(spec)(k) == omega(spec, k));
    }
}

TEST_CASE("bifurcation speed") {
    CHECK(bifurcation_speed(spec3(1, Rational(1, 4), 0)) == Rational(3, 4));
    CHECK(bifurcation_speed(spec3(1, 1, 1)) == Rational(1));
    CHECK(bifurcation_speed(spec3(0, 0, 1)) == Rational(1));
}

TEST_CASE("travelling frame") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        const auto spec = random_spec(rng);
        const auto frame = TravellingFrame::at_bifurcation(spec);
        CHECK(frame.Omega(1) == Rational(0));
        const Rational k = random_rational(rng, -3, 3);
        CHECK(frame.Omega(k) == omega(spec, k) - k * frame.speed());

        // P(mu) = -[Omega(mu+n) - Omega(mu)]
        const int n = 1 + static_cast<int>(rng() % 6);
        const Rational mu = random_rational(rng, -5, 5);
        CHECK(collision_poly(spec, n)(mu) == -(frame.Omega(mu + Rational(n)) - frame.Omega(mu)));
    }
}

TEST_CASE("collision polynomial") {
    const auto one = spec3(1, 1, 1);
    const auto p1 = collision_poly(one, 1);
    CHECK(p1(0) == Rational(0));
    CHECK(p1.coeff(6) == Rational(7));
    // gamma(7mu^6 n + 21 mu^5 n^2 + ...) - beta(5 mu^4 n + ...) + alpha(3 mu^2 n + 3 mu n^2 + n^3) - V0 n
    const auto p2 = collision_poly(one, 2);
    CHECK(p2.coeff(5) == Rational(21 * 4));
    CHECK(p2.coeff(4) == Rational(35 * 8 - 5 * 2));
    CHECK(p2.coeff(0) == Rational(128 - 32 + 8 - 2));

    CHECK(collision_poly(spec3(1, Rational(1, 4), 0), 2).degree() == 4);
    CHECK_THROWS_AS(collision_poly(one, 0), std::invalid_argument);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        const auto spec = random_spec(rng, 1 + rng() % 4);
        CHECK(collision_poly(spec, 1)(0) == Rational(0));
        if (!spec.terms().back().coeff.is_zero()) {
            for (int n = 1; n <= 4; ++n) {
                const auto p = collision_poly(spec, n);
                CHECK(p.degree() == spec.max_order() - 1);
                // Roots symmetric under mu -> -mu - n: P(-mu-n) = P(mu).
                const Polynomial reflected = compose(p, Polynomial{Rational(-n), Rational(-1)});
                CHECK(reflected == p);
            }
        }
    }
}
