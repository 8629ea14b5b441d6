#ifndef STURMSTAB_POLYNOMIAL_HPP
#define STURMSTAB_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sturmstab/rational.hpp"

namespace sturmstab {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending powers. The representation is canonical: either empty (the zero
/// polynomial) or with a nonzero leading coefficient.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t power);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^power; zero beyond the degree.
    Rational coeff(std::size_t power) const;
    const Rational& leading() const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Human-readable form in descending powers, e.g. "5/4*s^2 + 2*s + 3/4".
    std::string str(char var = 'x') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Substitutes `inner` for the variable: outer(inner(x)).
Polynomial compose(const Polynomial& outer, const Polynomial& inner);

Polynomial derivative(const Polynomial& p);

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws
/// std::domain_error when b is the zero polynomial.
DivRem divrem(const Polynomial& a, const Polynomial& b);

/// Scales p to leading coefficient one. The zero polynomial is returned as is.
Polynomial monic(const Polynomial& p);

/// Divides p by a positive rational so its coefficients become coprime
/// integers. Signs of p at every point are unchanged.
Polynomial positive_primitive(const Polynomial& p);

/// Monic greatest common divisor. Throws std::domain_error if both are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), monic. Same distinct roots as p, all simple.
/// Throws std::domain_error for the zero polynomial.
Polynomial squarefree_part(const Polynomial& p);

/// Where a sign is taken relative to a point: exactly at it, or in the
/// limit approaching from either side.
enum class Side { at, from_left, from_right };

/// Sign of p at x, or of p(x -/+ eps) for infinitesimal eps > 0. One-sided
/// signs use the first derivative of p that does not vanish at x.
int sign_at(const Polynomial& p, const Rational& x, Side side = Side::at);

} // namespace sturmstab

#endif
