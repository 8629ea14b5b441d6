#include "sturmstab/stability.hpp"

#include <algorithm>
#include <cmath>

#include "sturmstab/parallel.hpp"

namespace sturmstab {

namespace {

Rational lower_endpoint(int n) { return -Rational(static_cast<long>(n) * n, 4); }

unsigned bits_for(const Rational& tol) {
    // Smallest b with 2^-b <= tol / 4.
    unsigned bits = 2;
    Rational step(1, 4);
    while (step > tol && bits < 4096) {
        step /= Rational(2);
        ++bits;
    }
    return bits;
}

nlohmann::json enclosure_json(const RootEnclosure& e) { return nlohmann::json::array({e.lo.str(), e.hi.str()}); }

} // namespace

bool StabilityReport::stable() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const ModeVerdict& v) { return v.root_count == 0; });
}

std::vector<int> StabilityReport::unstable_modes() const {
    std::vector<int> out;
    for (const auto& v : verdicts)
        if (v.root_count > 0)
            out.push_back(v.n);
    return out;
}

int count_unstable_roots(const Polynomial& slice, int n) {
    if (slice.is_zero())
        throw ResonantDegeneracy(n);
    if (slice.is_constant())
        return 0;
    return count_roots_open(SturmChain(slice), lower_endpoint(n), Rational(0));
}

std::vector<int> unstable_modes(const ReducedPolynomial& q, int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("n_max must be >= 1");
    std::vector<int> out;
    for (int n = 1; n <= n_max; ++n)
        if (count_unstable_roots(instantiate(q, n), n) > 0)
            out.push_back(n);
    return out;
}

std::vector<int> unstable_modes(const DispersionSpec& spec, int n_max) {
    return unstable_modes(build_reduced(spec), n_max);
}

FloquetPair recover_floquet(const RootEnclosure& s, int n, const Rational& tol) {
    // mu+ = (-n + sqrt(n^2 + 4s)) / 2 is increasing in s; mu- = -n - mu+.
    const unsigned bits = bits_for(tol);
    const Rational nn(n);
    const Rational disc_lo = nn * nn + Rational(4) * s.lo;
    const Rational disc_hi = nn * nn + Rational(4) * s.hi;
    const Rational root_lo = sqrt_bounds(disc_lo, bits).lo;
    const Rational root_hi = sqrt_bounds(disc_hi, bits).hi;
    RootEnclosure plus{(root_lo - nn) / Rational(2), (root_hi - nn) / Rational(2)};
    RootEnclosure minus{-nn - plus.hi, -nn - plus.lo};
    return {std::move(minus), std::move(plus)};
}

ModeVerdict analyze_mode(const DispersionSpec& spec, int n, const Rational& tol) {
    if (n < 1)
        throw std::invalid_argument("mode difference n must be >= 1, got " + std::to_string(n));
    const Polynomial slice = instantiate(build_reduced(spec), n);
    if (slice.is_zero())
        throw ResonantDegeneracy(n);

    ModeVerdict v;
    v.n = n;
    v.lower = lower_endpoint(n);
    v.upper = Rational(0);
    const SturmChain chain(slice);
    v.chain = chain.polys();
    v.signs_at_lower = chain.signs(v.lower, Side::from_right);
    v.signs_at_upper = chain.signs(v.upper, Side::from_left);
    v.variations_lower = count_variations(v.signs_at_lower);
    v.variations_upper = count_variations(v.signs_at_upper);
    v.root_count = v.variations_lower - v.variations_upper;
    if (v.root_count > 0) {
        v.roots = isolate_and_refine(chain, v.lower, v.upper, tol);
        for (const auto& r : v.roots)
            v.floquet.push_back(recover_floquet(r, n, tol));
    }
    return v;
}

StabilityReport analyze(const DispersionSpec& spec, int n_max, const Rational& tol, unsigned threads) {
    if (n_max < 1)
        throw std::invalid_argument("n_max must be >= 1, got " + std::to_string(n_max));
    StabilityReport report{spec, bifurcation_speed(spec), n_max, {}};
    report.verdicts.resize(static_cast<std::size_t>(n_max));
    parallel_for(report.verdicts.size(), threads, [&](std::size_t i) {
        report.verdicts[i] = analyze_mode(spec, static_cast<int>(i) + 1, tol);
    });
    return report;
}

nlohmann::json to_json(const StabilityReport& report) {
    using nlohmann::json;
    json verdicts = json::array();
    for (const auto& v : report.verdicts) {
        json roots = json::array();
        json roots_approx = json::array();
        for (const auto& r : v.roots) {
            roots.push_back(enclosure_json(r));
            roots_approx.push_back(r.mid().to_double());
        }
        json mu = json::array();
        json mu_approx = json::array();
        for (const auto& f : v.floquet) {
            mu.push_back(json::array({enclosure_json(f.minus), enclosure_json(f.plus)}));
            mu_approx.push_back(json::array({f.minus.mid().to_double(), f.plus.mid().to_double()}));
        }
        verdicts.push_back({
            {"n", v.n},
            {"interval", json::array({v.lower.str(), v.upper.str()})},
            {"rootCount", v.root_count},
            {"roots", roots},
            {"rootsApprox", roots_approx},
            {"mu", mu},
            {"muApprox", mu_approx},
            {"signsAtA", v.signs_at_lower},
            {"signsAtB", v.signs_at_upper},
            {"variationsAtA", v.variations_lower},
            {"variationsAtB", v.variations_upper},
        });
    }
    json coeffs = json::array();
    for (const auto& t : report.spec.terms())
        coeffs.push_back({{"order", t.order}, {"coeff", t.coeff.str()}});
    return {
        {"format", 1},
        {"spec", {{"coeffs", report.spec.str()}, {"terms", coeffs}}},
        {"v0", report.v0.str()},
        {"nMax", report.n_max},
        {"verdicts", verdicts},
        {"overall", report.stable() ? "stable" : "possibly-unstable"},
        {"unstableN", report.unstable_modes()},
    };
}

} // namespace sturmstab
