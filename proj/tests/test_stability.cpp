#include <algorithm>
#include <random>

#include <doctest.h>

#include "support/oracles.hpp"
#include "sturmstab/stability.hpp"

using namespace sturmstab;
using namespace sturmstab::testing;

namespace {

DispersionSpec spec3(Rational a, Rational b, Rational c) { return DispersionSpec::from_coefficients({a, b, c}); }

const DispersionSpec kExample = spec3(1, Rational(1, 4), 0);

} // namespace

TEST_CASE("mode n = 2 of the example has the root s = -3/5") {
    const auto v = analyze_mode(kExample, 2);
    CHECK(v.root_count == 1);
    CHECK(v.lower == Rational(-1));
    CHECK(v.upper == Rational(0));
    REQUIRE(v.roots.size() == 1);
    CHECK(v.roots[0].contains(Rational(-3, 5)));
    REQUIRE(v.floquet.size() == 1);
    // mu = -1 +/- sqrt(2/5)
    const auto& f = v.floquet[0];
    CHECK(encloses_surd(f.plus.lo, f.plus.hi, -5, 1, 10, 5));
    CHECK(encloses_surd(f.minus.lo, f.minus.hi, -5, -1, 10, 5));
    CHECK(f.plus.mid().to_double() == doctest::Approx(-0.36754).epsilon(1e-4));
    CHECK(f.minus.mid().to_double() == doctest::Approx(-1.63246).epsilon(1e-4));
    CHECK(v.signs_at_lower == std::vector<int>{-1, -1, 1});
    CHECK(v.signs_at_upper == std::vector<int>{1, 1, 1});
}

TEST_CASE("modes n = 1 and n = 4 of the example are stable") {
    CHECK(analyze_mode(kExample, 1).root_count == 0);
    CHECK(analyze_mode(kExample, 4).root_count == 0);
    CHECK_THROWS_AS(analyze_mode(kExample, 0), std::invalid_argument);
}

TEST_CASE("full analysis of the example") {
    const auto r = analyze(kExample, 4);
    CHECK(r.v0 == Rational(3, 4));
    REQUIRE(r.verdicts.size() == 4);
    std::vector<int> counts;
    for (const auto& v : r.verdicts)
        counts.push_back(v.root_count);
    CHECK(counts == std::vector<int>{0, 1, 1, 0});
    CHECK_FALSE(r.stable());
    CHECK(r.unstable_modes() == std::vector<int>{2, 3});
    CHECK(unstable_modes(kExample, 4) == std::vector<int>{2, 3});

    const auto threaded = analyze(kExample, 12, default_tolerance(), 4);
    const auto serial = analyze(kExample, 12);
    CHECK(to_json(threaded) == to_json(serial));

    CHECK_THROWS_AS(analyze(kExample, 0), std::invalid_argument);
}

TEST_CASE("positive-gamma family without beta is stable") {
    const auto r = analyze(spec3(1, 0, 1), 50);
    CHECK(r.stable());
    CHECK(r.unstable_modes().empty());
}

TEST_CASE("degenerate slices are reported as resonant") {
    CHECK_THROWS_AS(count_unstable_roots(Polynomial(), 3), ResonantDegeneracy);
    CHECK(count_unstable_roots(Polynomial::constant(2), 3) == 0);
}

TEST_CASE("report JSON shape") {
    const auto j = to_json(analyze(kExample, 3));
    CHECK(j["format"] == 1);
    CHECK(j["v0"] == "3/4");
    CHECK(j["nMax"] == 3);
    CHECK(j["spec"]["coeffs"] == "1,1/4,0");
    CHECK(j["overall"] == "possibly-unstable");
    CHECK(j["unstableN"] == nlohmann::json::array({2, 3}));
    REQUIRE(j["verdicts"].size() == 3);
    const auto& v2 = j["verdicts"][1];
    CHECK(v2["n"] == 2);
    CHECK(v2["rootCount"] == 1);
    CHECK(v2["roots"].size() == 1);
    CHECK(v2["mu"][0].size() == 2);
    CHECK(v2["signsAtA"] == nlohmann::json::array({-1, -1, 1}));
    CHECK(v2["signsAtB"] == nlohmann::json::array({1, 1, 1}));

    const auto stable = to_json(analyze(spec3(1, 0, 1), 5));
    CHECK(stable["overall"] == "stable");
}

TEST_CASE("Floquet recovery is consistent with the collision polynomial") {
    std::mt19937_64 rng(2718);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 25; ++trial) {
        std::vector<Rational> c{random_rational(rng, -3, 3), random_rational(rng, -3, 3),
                                random_rational(rng, -3, 3)};
        if (std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); }))
            continue;
        const auto spec = DispersionSpec::from_coefficients(c);
        for (int n = 1; n <= 8; ++n) {
            const auto coarse = analyze_mode(spec, n, Rational(1, 1000));
            if (coarse.root_count == 0)
                continue;
            const auto fine = analyze_mode(spec, n, Rational(1, 1000000000));
            const Polynomial p = collision_poly(spec, n);
            for (std::size_t k = 0; k < coarse.roots.size(); ++k) {
                const auto& fc = coarse.floquet[k];
                const auto& ff = fine.floquet[k];
                // Interval guarantee.
                CHECK(coarse.roots[k].lo >= coarse.lower);
                CHECK(coarse.roots[k].hi <= coarse.upper);
                CHECK(fine.roots[k].lo > fine.lower);
                CHECK(fine.roots[k].hi < fine.upper);
                // Vieta: the sum is exact at the midpoints.
                CHECK(fc.minus.mid() + fc.plus.mid() == Rational(-n));
                // Product of the pair is -s; each member satisfies mu(mu+n) = s.
                const Rational s = fine.roots[k].mid();
                CHECK((ff.minus.mid() * ff.plus.mid() + s).abs() <= Rational(1, 100000000));
                for (const auto* e : {&ff.minus, &ff.plus}) {
                    const Rational mu = e->mid();
                    CHECK((mu * (mu + Rational(n)) - s).abs() <= Rational(1, 100000000));
                }
                // Both mu lie in (-n, 0).
                CHECK(ff.minus.lo > Rational(-n) - Rational(1, 1000000));
                CHECK(ff.plus.hi < Rational(1, 1000000));
                // Residual of P shrinks as the enclosure tightens.
                const Rational coarse_res = p(fc.plus.mid()).abs() + p(fc.minus.mid()).abs();
                const Rational fine_res = p(ff.plus.mid()).abs() + p(ff.minus.mid()).abs();
                if (!coarse_res.is_zero())
                    CHECK(fine_res < coarse_res);
                ++checked;
            }
        }
    }
    CHECK(checked > 5);
}

TEST_CASE("positive scaling leaves every verdict unchanged") {
    std::mt19937_64 rng(161);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> c{random_rational(rng, -3, 3), random_rational(rng, -3, 3),
                                random_rational(rng, -3, 3)};
        if (std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); }))
            continue;
        const auto spec = DispersionSpec::from_coefficients(c);
        const Rational factor = random_rational(rng, 0, 5, 9) + Rational(1, 11);
        CHECK(unstable_modes(spec, 20) == unstable_modes(spec.scaled(factor), 20));
    }
}
