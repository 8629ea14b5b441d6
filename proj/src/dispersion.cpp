#include "sturmstab/dispersion.hpp"

#include <stdexcept>

namespace sturmstab {

namespace {

// (-1)^t for order = 2t + 1.
int alternating(int order) { return ((order - 1) / 2) % 2 == 0 ? 1 : -1; }

} // namespace

DispersionSpec::DispersionSpec(std::vector<DispersionTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty())
        throw std::invalid_argument("dispersion spec needs at least one term");
    bool any_nonzero = false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const int m = terms_[i].order;
        if (m < 3 || m % 2 == 0)
            throw std::invalid_argument("dispersive orders must be odd and >= 3, got " + std::to_string(m));
        if (i > 0 && m <= terms_[i - 1].order)
            throw std::invalid_argument("dispersive orders must be strictly increasing");
        any_nonzero = any_nonzero || !terms_[i].coeff.is_zero();
    }
    if (!any_nonzero)
        throw std::invalid_argument("dispersion spec has all coefficients zero");
}

DispersionSpec DispersionSpec::from_coefficients(const std::vector<Rational>& coeffs) {
    std::vector<DispersionTerm> terms;
    terms.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        terms.push_back({static_cast<int>(3 + 2 * i), coeffs[i]});
    return DispersionSpec(std::move(terms));
}

DispersionSpec DispersionSpec::parse(std::string_view text) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view field =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            coeffs.push_back(Rational::parse(field));
        } catch (const ParseError& e) {
            // Re-anchor the column to the whole coefficient list.
            std::size_t lead = 0;
            while (lead < field.size() && (field[lead] == ' ' || field[lead] == '\t'))
                ++lead;
            const std::size_t column = start + lead + e.column();
            throw ParseError("coefficient " + std::to_string(coeffs.size() + 1) + " in '" +
                                 std::string(text) + "' at column " + std::to_string(column + 1) +
                                 ": " + e.what(),
                             column);
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return from_coefficients(coeffs);
}

Rational DispersionSpec::coefficient(int order) const {
    for (const auto& t : terms_)
        if (t.order == order)
            return t.coeff;
    return {};
}

DispersionSpec DispersionSpec::scaled(const Rational& factor) const {
    std::vector<DispersionTerm> out = terms_;
    for (auto& t : out)
        t.coeff *= factor;
    return DispersionSpec(std::move(out));
}

std::vector<Rational> DispersionSpec::coefficient_list() const {
    std::vector<Rational> out(static_cast<std::size_t>((max_order() - 1) / 2));
    for (const auto& t : terms_)
        out[static_cast<std::size_t>((t.order - 3) / 2)] = t.coeff;
    return out;
}

std::string DispersionSpec::str() const {
    std::string out;
    for (const auto& c : coefficient_list()) {
        if (!out.empty())
            out += ',';
        out += c.str();
    }
    return out;
}

Rational omega(const DispersionSpec& spec, const Rational& k) {
    Rational sum;
    for (const auto& t : spec.terms())
        sum += Rational(alternating(t.order)) * t.coeff * pow(k, static_cast<unsigned>(t.order));
    return sum;
}

Polynomial omega_polynomial(const DispersionSpec& spec) {
    Polynomial p;
    for (const auto& t : spec.terms())
        p += Polynomial::monomial(Rational(alternating(t.order)) * t.coeff, static_cast<std::size_t>(t.order));
    return p;
}

Rational bifurcation_speed(const DispersionSpec& spec) {
    Rational v;
    for (const auto& t : spec.terms())
        v -= Rational(alternating(t.order)) * t.coeff;
    return v;
}

TravellingFrame TravellingFrame::at_bifurcation(const DispersionSpec& spec) {
    return TravellingFrame(spec, -bifurcation_speed(spec));
}

Polynomial collision_poly_at(const DispersionSpec& spec, const Rational& n) {
    const Polynomial mu{Rational(0), Rational(1)};
    const Polynomial shifted{n, Rational(1)};
    Polynomial p;
    for (const auto& t : spec.terms()) {
        const auto m = static_cast<unsigned>(t.order);
        p += (pow(shifted, m) - pow(mu, m)) * (Rational(-alternating(t.order)) * t.coeff);
    }
    p -= Polynomial::constant(bifurcation_speed(spec) * n);
    return p;
}

Polynomial collision_poly(const DispersionSpec& spec, int n) {
    if (n < 1)
        throw std::invalid_argument("mode difference n must be >= 1, got " + std::to_string(n));
    return collision_poly_at(spec, Rational(n));
}

std::string parameter_name(int order) {
    switch (order) {
    case 3: return "alpha";
    case 5: return "beta";
    case 7: return "gamma";
    default: return "c" + std::to_string(order);
    }
}

int parameter_order(std::string_view name) {
    if (name == "alpha")
        return 3;
    if (name == "beta")
        return 5;
    if (name == "gamma")
        return 7;
    if (name.size() >= 2 && name[0] == 'c') {
        int order = 0;
        for (char ch : name.substr(1)) {
            if (ch < '0' || ch > '9' || order > 10000)
                return 0;
            order = order * 10 + (ch - '0');
        }
        if (order >= 3 && order % 2 == 1)
            return order;
    }
    return 0;
}

} // namespace sturmstab
