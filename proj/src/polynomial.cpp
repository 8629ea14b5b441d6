#include "sturmstab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sturmstab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_)
        a *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

std::string Polynomial::str(char var) const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        const Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit)
            os << mag;
        if (k > 0) {
            if (!unit)
                os << '*';
            os << var;
            if (k > 1)
                os << '^' << k;
        }
    }
    return os.str();
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result = Polynomial::constant(1);
    for (unsigned i = 0; i < exponent; ++i)
        result = result * base;
    return result;
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
    Polynomial acc;
    const auto c = outer.coefficients();
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * inner + Polynomial::constant(c[k]);
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    const auto c = p.coefficients();
    if (c.size() <= 1)
        return {};
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        d[k - 1] = c[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(d));
}

DivRem divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw std::domain_error("polynomial division by the zero polynomial");
    if (a.degree() < b.degree())
        return {Polynomial(), a};

    const auto ac = a.coefficients();
    const auto bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<mpq_class> rem;
    rem.reserve(ac.size());
    for (const auto& c : ac)
        rem.push_back(c.raw());
    mpq_class inv_lead;
    mpq_inv(inv_lead.get_mpq_t(), bc.back().raw().get_mpq_t());
    std::vector<mpq_class> quot(rem.size() - db);
    mpq_class t;

    for (std::size_t k = rem.size(); k-- > db;) {
        if (sgn(rem[k]) == 0)
            continue;
        mpq_class& factor = quot[k - db];
        mpq_mul(factor.get_mpq_t(), rem[k].get_mpq_t(), inv_lead.get_mpq_t());
        for (std::size_t j = 0; j < db; ++j) {
            mpq_mul(t.get_mpq_t(), factor.get_mpq_t(), bc[j].raw().get_mpq_t());
            mpq_sub(rem[k - db + j].get_mpq_t(), rem[k - db + j].get_mpq_t(), t.get_mpq_t());
        }
        rem[k] = 0;
    }
    rem.resize(db);
    auto adopt = [](std::vector<mpq_class>& v) {
        std::vector<Rational> out;
        out.reserve(v.size());
        for (auto& c : v)
            out.push_back(Rational::from_canonical(std::move(c)));
        return Polynomial(std::move(out));
    };
    return {adopt(quot), adopt(rem)};
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero())
        return p;
    return p * (Rational(1) / p.leading());
}

Polynomial positive_primitive(const Polynomial& p) {
    if (p.is_zero())
        return p;
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const auto& c : p.coefficients()) {
        if (c.is_zero())
            continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), mpq_denref(c.raw().get_mpq_t()));
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), mpq_numref(c.raw().get_mpq_t()));
    }
    const Rational scale(den_lcm, num_gcd);
    if (scale == Rational(1))
        return p;
    return p * scale;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd of two zero polynomials");
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = positive_primitive(divrem(x, y).remainder);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero())
        throw std::domain_error("squarefree part of the zero polynomial");
    const Polynomial g = gcd(p, derivative(p));
    return monic(divrem(p, g).quotient);
}

int sign_at(const Polynomial& p, const Rational& x, Side side) {
    if (p.is_zero())
        return 0;
    const int direct = p(x).sign();
    if (direct != 0 || side == Side::at)
        return direct;

    // Taylor coefficients at x by repeated synthetic division; the first
    // nonzero one decides the one-sided sign.
    std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
    const std::size_t n = c.size();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = n - 1; j > k; --j)
            c[j - 1] += c[j] * x;
        if (k > 0 && !c[k].is_zero()) {
            const int s = c[k].sign();
            return (side == Side::from_left && (k % 2 == 1)) ? -s : s;
        }
    }
    return 0; // unreachable for nonzero p
}

} // namespace sturmstab
