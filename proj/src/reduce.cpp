#include "sturmstab/reduce.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sturmstab {

namespace {

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int alternating(int order) { return ((order - 1) / 2) % 2 == 0 ? 1 : -1; }

// "n^4 + 5*n^2*s + 5*s^2" for the reduction of (mu+n)^order - mu^order
// divided by n.
std::string reduced_monomials(int order) {
    const auto a = monomial_reduction(order);
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int npow = order - 1 - 2 * static_cast<int>(i);
        if (i > 0)
            os << " + ";
        bool need_star = false;
        if (a[i] != 1 || (npow == 0 && i == 0)) {
            os << a[i].get_str();
            need_star = true;
        }
        if (npow > 0) {
            os << (need_star ? "*" : "") << 'n';
            if (npow > 1)
                os << '^' << npow;
            need_star = true;
        }
        if (i > 0) {
            os << (need_star ? "*" : "") << 's';
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

} // namespace

ReductionTriangle::ReductionTriangle(int order) : order_(order) {
    if (order < 1 || order % 2 == 0)
        throw std::invalid_argument("reduction order must be odd and positive, got " + std::to_string(order));

    rows_.resize(static_cast<std::size_t>(rows()));
    for (int j = order; j >= 1; --j)
        rows_[0].push_back(binomial(order, j));

    for (int i = 1; i < rows(); ++i) {
        auto& row = rows_[static_cast<std::size_t>(i)];
        const int first = first_column(i);
        row.push_back(0);
        for (int j = first - 1; j >= 1; --j)
            row.push_back(at(i - 1, j + 1) - at(i, j + 1));
    }
}

bool ReductionTriangle::present(int row, int power) const {
    return row >= 0 && row < rows() && power >= 1 && power <= first_column(row);
}

const Integer& ReductionTriangle::at(int row, int power) const {
    if (!present(row, power))
        throw std::out_of_range("no triangle entry at row " + std::to_string(row) + ", n^" +
                                std::to_string(power));
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(first_column(row) - power)];
}

std::vector<Integer> ReductionTriangle::leaders() const {
    std::vector<Integer> out;
    for (int i = 0; i < rows(); ++i)
        out.push_back(at(i, order_ - 2 * i));
    return out;
}

std::string ReductionTriangle::render() const {
    constexpr int width = 8;
    std::ostringstream os;
    for (int j = order_; j >= 1; --j)
        os << std::setw(width) << ("n^" + std::to_string(j));
    os << "  |\n";
    for (int i = 0; i < rows(); ++i) {
        for (int j = order_; j >= 1; --j) {
            std::string cell;
            if (present(i, j)) {
                cell = at(i, j).get_str();
                if (j == order_ - 2 * i)
                    cell = "(" + cell + ")";
            }
            os << std::setw(width) << cell;
        }
        os << "  | s^" << i << '\n';
    }
    return os.str();
}

std::vector<Integer> monomial_reduction(int order) { return ReductionTriangle(order).leaders(); }

ReducedPolynomial::ReducedPolynomial(std::vector<Polynomial> s_coeffs) : s_coeffs_(std::move(s_coeffs)) {
    while (!s_coeffs_.empty() && s_coeffs_.back().is_zero())
        s_coeffs_.pop_back();
}

Polynomial ReducedPolynomial::s_coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(s_coeffs_.size()))
        return {};
    return s_coeffs_[static_cast<std::size_t>(power)];
}

Rational ReducedPolynomial::evaluate(const Rational& s, const Rational& n) const {
    return slice(n)(s);
}

Polynomial ReducedPolynomial::slice(const Rational& n) const {
    std::vector<Rational> coeffs;
    coeffs.reserve(s_coeffs_.size());
    for (const auto& c : s_coeffs_)
        coeffs.push_back(c(n));
    return Polynomial(std::move(coeffs));
}

std::string ReducedPolynomial::grouped_str(const DispersionSpec& spec) const {
    std::ostringstream os;
    bool first = true;
    auto emit_sign = [&](int sign) {
        if (first)
            os << (sign < 0 ? "-" : "");
        else
            os << (sign < 0 ? " - " : " + ");
        first = false;
    };
    for (auto it = spec.terms().rbegin(); it != spec.terms().rend(); ++it) {
        const Rational c = Rational(alternating(it->order)) * it->coeff;
        if (c.is_zero())
            continue;
        emit_sign(c.sign());
        if (c.abs() != Rational(1))
            os << c.abs() << '*';
        os << '(' << reduced_monomials(it->order) << ')';
    }
    const Rational v0 = bifurcation_speed(spec);
    if (!v0.is_zero() || first) {
        emit_sign(v0.sign());
        os << v0.abs();
    }
    return os.str();
}

std::string ReducedPolynomial::str() const {
    if (s_coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = s_coeffs_.size(); i-- > 0;) {
        if (s_coeffs_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << '(' << s_coeffs_[i].str('n') << ')';
        if (i > 0)
            os << "*s";
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

ReducedPolynomial build_reduced(const DispersionSpec& spec) {
    const auto degree = static_cast<std::size_t>((spec.max_order() - 1) / 2);
    std::vector<Polynomial> s_coeffs(degree + 1);
    for (const auto& t : spec.terms()) {
        if (t.coeff.is_zero())
            continue;
        const Rational c = Rational(alternating(t.order)) * t.coeff;
        const auto a = monomial_reduction(t.order);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto npow = static_cast<std::size_t>(t.order - 1) - 2 * i;
            s_coeffs[i] += Polynomial::monomial(c * Rational(a[i]), npow);
        }
    }
    s_coeffs[0] += Polynomial::constant(bifurcation_speed(spec));
    return ReducedPolynomial(std::move(s_coeffs));
}

Polynomial instantiate(const ReducedPolynomial& q, int n) {
    if (n < 1)
        throw std::invalid_argument("mode difference n must be >= 1, got " + std::to_string(n));
    return q.slice(Rational(n));
}

} // namespace sturmstab
