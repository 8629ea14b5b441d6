#ifndef STURMSTAB_STABILITY_HPP
#define STURMSTAB_STABILITY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sturmstab/dispersion.hpp"
#include "sturmstab/polynomial.hpp"
#include "sturmstab/rational.hpp"
#include "sturmstab/reduce.hpp"
#include "sturmstab/sturm.hpp"

namespace sturmstab {

/// q(s, n) vanished identically for some n: every s is a collision, so the
/// count of isolated roots is meaningless.
class ResonantDegeneracy : public std::runtime_error {
public:
    explicit ResonantDegeneracy(int n)
        : std::runtime_error("identically resonant spec: q(s, " + std::to_string(n) + ") is the zero polynomial"),
          n_(n) {}
    int n() const noexcept { return n_; }

private:
    int n_;
};

/// Default enclosure width for reported roots. Only affects reporting.
inline Rational default_tolerance() { return Rational(1, 1000000000); }

/// Floquet parameters mu- < mu+ with mu- + mu+ = -n and mu- * mu+ = -s,
/// so that mu (mu + n) = s for each.
struct FloquetPair {
    RootEnclosure minus;
    RootEnclosure plus;
};

struct ModeVerdict {
    int n = 0;
    Rational lower;              // -n^2/4
    Rational upper;              // 0
    std::vector<Polynomial> chain;
    std::vector<int> signs_at_lower; // one-sided, from the right
    std::vector<int> signs_at_upper; // one-sided, from the left
    int variations_lower = 0;
    int variations_upper = 0;
    int root_count = 0;
    std::vector<RootEnclosure> roots;
    std::vector<FloquetPair> floquet;
};

struct StabilityReport {
    DispersionSpec spec;
    Rational v0;
    int n_max = 0;
    std::vector<ModeVerdict> verdicts;

    bool stable() const;
    /// Mode differences with at least one root of q in (-n^2/4, 0).
    std::vector<int> unstable_modes() const;
};

/// Distinct roots of the n-slice of q inside (-n^2/4, 0). Throws
/// ResonantDegeneracy when the slice is the zero polynomial.
int count_unstable_roots(const Polynomial& slice, int n);

/// All n in 1..n_max whose slice has a root in (-n^2/4, 0). Counting only;
/// this is the path used by sweeps.
std::vector<int> unstable_modes(const DispersionSpec& spec, int n_max);
std::vector<int> unstable_modes(const ReducedPolynomial& q, int n_max);

/// Recovers both Floquet parameters from an enclosure of s in
/// (-n^2/4, 0), each as a rational enclosure no wider than the s
/// enclosure plus `tol`.
FloquetPair recover_floquet(const RootEnclosure& s, int n, const Rational& tol);

ModeVerdict analyze_mode(const DispersionSpec& spec, int n, const Rational& tol = default_tolerance());

/// Verdicts for n = 1..n_max in ascending n. `threads` > 1 evaluates modes
/// concurrently; the result does not depend on it.
StabilityReport analyze(const DispersionSpec& spec, int n_max, const Rational& tol = default_tolerance(),
                        unsigned threads = 1);

/// Default sample count of the sampling branch of oracle_count.
inline constexpr int kOraclePanels = 100000;

/// Independent distinct-root count in (a, b) that avoids Sturm chains.
/// Degree <= 3: exact classification of the monotone pieces between the
/// critical points (computed in Q(sqrt D)). Higher degree: sign sampling of
/// the squarefree part on `panels` panels with exact confirmation of every
/// sign, which cannot see two roots inside one panel.
int oracle_count(const Polynomial& p, const Rational& a, const Rational& b, int panels = kOraclePanels);

/// Sampling branch on its own, for any degree.
int oracle_count_sampled(const Polynomial& p, const Rational& a, const Rational& b, int panels = kOraclePanels);

nlohmann::json to_json(const StabilityReport& report);

} // namespace sturmstab

#endif
