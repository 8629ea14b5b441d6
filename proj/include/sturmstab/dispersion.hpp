#ifndef STURMSTAB_DISPERSION_HPP
#define STURMSTAB_DISPERSION_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sturmstab/polynomial.hpp"
#include "sturmstab/rational.hpp"

namespace sturmstab {

/// One linear dispersive term c * d^order u / dx^order.
struct DispersionTerm {
    int order;
    Rational coeff;

    friend bool operator==(const DispersionTerm&, const DispersionTerm&) = default;
};

/// Odd-order dispersive part of
///
///     u_t + sum_m c_m u_{(m)x} + f(u)_x = 0,     m = 3, 5, 7, ...
///
/// The sign convention is the one of u_t + alpha u_3x + beta u_5x + gamma u_7x.
/// The equivalent form u_t = sum C_m u_{(m)x} + ... has C_m = -c_m.
class DispersionSpec {
public:
    /// Orders must be odd, >= 3 and strictly increasing; at least one
    /// coefficient must be nonzero. Throws std::invalid_argument otherwise.
    explicit DispersionSpec(std::vector<DispersionTerm> terms);

    /// Coefficients assigned to orders 3, 5, 7, ... in sequence.
    static DispersionSpec from_coefficients(const std::vector<Rational>& coeffs);

    /// Comma-separated rationals, e.g. "1,1/4,0". Parse errors carry the
    /// column of the offending character within `text`.
    static DispersionSpec parse(std::string_view text);

    const std::vector<DispersionTerm>& terms() const { return terms_; }
    int max_order() const { return terms_.back().order; }
    /// Coefficient of the given order; zero when absent.
    Rational coefficient(int order) const;

    /// Same spec with every coefficient multiplied by `factor` (nonzero).
    DispersionSpec scaled(const Rational& factor) const;

    /// Dense coefficient list for orders 3, 5, ..., max_order.
    std::vector<Rational> coefficient_list() const;
    /// Inverse of parse() for the dense coefficient list.
    std::string str() const;

    friend bool operator==(const DispersionSpec&, const DispersionSpec&) = default;

private:
    std::vector<DispersionTerm> terms_;
};

/// Linear dispersion relation omega(k) = sum_t (-1)^t c_{2t+1} k^{2t+1}.
Rational omega(const DispersionSpec& spec, const Rational& k);

/// omega as a polynomial in k.
Polynomial omega_polynomial(const DispersionSpec& spec);

/// Speed V0 = sum_t (-1)^{t+1} c_{2t+1} at which the k = 1 mode bifurcates
/// (alpha - beta + gamma for three terms).
Rational bifurcation_speed(const DispersionSpec& spec);

/// Dispersion relation seen from a frame moving with speed V:
/// Omega(k) = omega(k) - k V.
class TravellingFrame {
public:
    TravellingFrame(DispersionSpec spec, Rational speed)
        : spec_(std::move(spec)), speed_(std::move(speed)) {}

    /// Frame in which the k = 1 mode is stationary, i.e. Omega(1) = 0.
    /// Its speed is omega(1) = -V0, since V0 belongs to the steady
    /// equation written with +V u_x.
    static TravellingFrame at_bifurcation(const DispersionSpec& spec);

    const DispersionSpec& spec() const { return spec_; }
    const Rational& speed() const { return speed_; }

    Rational Omega(const Rational& k) const { return omega(spec_, k) - k * speed_; }

private:
    DispersionSpec spec_;
    Rational speed_;
};

/// Collision polynomial in mu for Fourier modes differing by n:
///
///     P(mu) = sum_t (-1)^{t+1} c_{2t+1} [(mu+n)^{2t+1} - mu^{2t+1}] - V0 n
///
/// which equals -[Omega(mu+n) - Omega(mu)] in the bifurcation frame.
/// Throws std::invalid_argument for n < 1.
Polynomial collision_poly(const DispersionSpec& spec, int n);

/// Same polynomial for an arbitrary rational mode difference (no validation).
Polynomial collision_poly_at(const DispersionSpec& spec, const Rational& n);

/// Conventional name of the coefficient of the given order: alpha, beta,
/// gamma for 3, 5, 7 and c<order> beyond.
std::string parameter_name(int order);

/// Inverse of parameter_name; also accepts "c3", "c5", .... Returns 0 when
/// the name is unknown.
int parameter_order(std::string_view name);

} // namespace sturmstab

#endif
