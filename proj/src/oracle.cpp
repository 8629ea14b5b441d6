// Root counting without Sturm chains, used to cross-check the Sturm path.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sturmstab/stability.hpp"

namespace sturmstab {

namespace {

// a + b*sqrt(d) for a fixed d >= 0 shared by all values in one count.
struct Surd {
    Rational a;
    Rational b;
};

class QuadraticField {
public:
    explicit QuadraticField(Rational d) : d_(std::move(d)) {}

    Surd mul(const Surd& x, const Surd& y) const {
        return {x.a * y.a + x.b * y.b * d_, x.a * y.b + x.b * y.a};
    }

    int sign(const Surd& x) const {
        const int sa = x.a.sign();
        const int sb = x.b.sign();
        if (sb == 0 || d_.is_zero())
            return sa;
        if (sa == 0 || sa == sb)
            return sa == 0 ? sb : sa;
        // Opposite signs: compare a^2 with b^2 d.
        const Rational lhs = x.a * x.a;
        const Rational rhs = x.b * x.b * d_;
        if (lhs == rhs)
            return 0;
        return lhs > rhs ? sa : sb;
    }

    int compare(const Surd& x, const Surd& y) const { return sign({x.a - y.a, x.b - y.b}); }

    int sign_of(const Polynomial& p, const Surd& x) const {
        Surd acc{Rational(), Rational()};
        const auto c = p.coefficients();
        for (std::size_t k = c.size(); k-- > 0;) {
            acc = mul(acc, x);
            acc.a += c[k];
        }
        return sign(acc);
    }

private:
    Rational d_;
};

// Degree <= 3: p is monotone between consecutive critical points, so each
// piece holds a root iff p has strictly opposite signs at its ends. Roots at
// interior critical points are counted separately.
int closed_form_count(const Polynomial& p, const Rational& a, const Rational& b) {
    if (p.degree() <= 0)
        return 0;
    const Polynomial d = derivative(p);

    Rational disc;
    std::vector<Surd> critical;
    if (d.degree() == 1) {
        critical.push_back({-d.coeff(0) / d.coeff(1), Rational()});
    } else if (d.degree() == 2) {
        const Rational& A = d.coeff(2);
        const Rational& B = d.coeff(1);
        const Rational& C = d.coeff(0);
        disc = B * B - Rational(4) * A * C;
        const Rational centre = -B / (Rational(2) * A);
        const Rational half = Rational(1) / (Rational(2) * A);
        if (disc.is_zero())
            critical.push_back({centre, Rational()});
        else if (disc.sign() > 0) {
            critical.push_back({centre, -half});
            critical.push_back({centre, half});
        }
    }
    const QuadraticField field(disc);

    std::vector<Surd> points{{a, Rational()}};
    std::vector<bool> is_critical{false};
    std::sort(critical.begin(), critical.end(),
              [&](const Surd& x, const Surd& y) { return field.compare(x, y) < 0; });
    for (const auto& c : critical) {
        if (field.compare(c, points.front()) > 0 && field.compare(c, {b, Rational()}) < 0) {
            points.push_back(c);
            is_critical.push_back(true);
        }
    }
    points.push_back({b, Rational()});
    is_critical.push_back(false);

    std::vector<int> signs;
    signs.reserve(points.size());
    for (const auto& x : points)
        signs.push_back(field.sign_of(p, x));

    int count = 0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (signs[i] * signs[i + 1] < 0)
            ++count;
    for (std::size_t i = 1; i + 1 < points.size(); ++i)
        if (is_critical[i] && signs[i] == 0)
            ++count;
    return count;
}

// Sign of p at a sample point known to within x_err of xd. The double
// evaluation decides when it clears a bound covering rounding and the
// point error; otherwise `exact()` supplies the point.
template <typename Exact>
int filtered_sign(const Polynomial& p, const std::vector<double>& coeffs, double xd, double x_err, Exact exact) {
    const double ax = std::fabs(xd) + x_err;
    double value = 0.0;
    double magnitude = 0.0;
    double slope = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        value = value * xd + coeffs[k];
        slope = slope * ax + magnitude;
        magnitude = magnitude * ax + std::fabs(coeffs[k]);
    }
    const double bound = 1e-9 * static_cast<double>(coeffs.size() + 1) * magnitude + 4.0 * slope * x_err;
    if (std::isfinite(value) && std::fabs(value) > bound)
        return value > 0 ? 1 : -1;
    return p(exact()).sign();
}

} // namespace

int oracle_count_sampled(const Polynomial& p, const Rational& a, const Rational& b, int panels) {
    if (!(a < b))
        throw std::invalid_argument("oracle interval needs a < b, got (" + a.str() + ", " + b.str() + ")");
    if (p.is_zero())
        throw std::domain_error("oracle count of the zero polynomial");
    if (panels < 1)
        throw std::invalid_argument("oracle needs at least one panel");
    if (p.degree() == 0)
        return 0;

    const Polynomial sq = squarefree_part(p);
    std::vector<double> coeffs;
    for (const auto& c : sq.coefficients())
        coeffs.push_back(c.to_double());

    const Rational step = (b - a) / Rational(panels);
    const double ad = a.to_double();
    const double wd = (b - a).to_double();
    const double x_err = 16.0 * std::numeric_limits<double>::epsilon() *
                         (std::fabs(ad) + std::fabs(b.to_double()) + std::numeric_limits<double>::min());
    int count = 0;
    int previous = sign_at(sq, a, Side::from_right);
    for (int i = 1; i <= panels; ++i) {
        const double xd = ad + wd * (static_cast<double>(i) / panels);
        const int s = i == panels ? sign_at(sq, b, Side::from_left)
                                  : filtered_sign(sq, coeffs, xd, x_err, [&] { return a + step * Rational(i); });
        if (s == 0) {
            ++count; // a root sits exactly on a sample point
            previous = 0;
            continue;
        }
        if (previous != 0 && s != previous)
            ++count;
        previous = s;
    }
    return count;
}

int oracle_count(const Polynomial& p, const Rational& a, const Rational& b, int panels) {
    if (!(a < b))
        throw std::invalid_argument("oracle interval needs a < b, got (" + a.str() + ", " + b.str() + ")");
    if (p.is_zero())
        throw std::domain_error("oracle count of the zero polynomial");
    if (p.degree() <= 3)
        return closed_form_count(p, a, b);
    return oracle_count_sampled(p, a, b, panels);
}

} // namespace sturmstab
