#ifndef STURMSTAB_RATIONAL_HPP
#define STURMSTAB_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace sturmstab {

using Integer = mpz_class;

/// Raised when text cannot be read as a rational. `column()` is the
/// zero-based offset of the offending character within the parsed text.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::invalid_argument(what), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(Integer(std::to_string(v), 10)) {}
    Rational(const Integer& v) : value_(v) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }
    /// Adopts a value already in lowest terms (the result of GMP arithmetic).
    static Rational from_canonical(mpq_class&& v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    /// Accepts "p", "p/q" and finite decimals such as "-0.25" or "1.5e-3".
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    double to_double() const { return value_.get_d(); }
    /// "p/q", or "p" for integers.
    std::string str() const;

    const mpq_class& raw() const noexcept { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;
};

/// Integer power with non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

/// Midpoint of two rationals.
inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

/// Rational bounds lo <= sqrt(x) <= hi with hi - lo <= 2^-bits. Requires x >= 0.
struct SqrtBounds {
    Rational lo;
    Rational hi;
};
SqrtBounds sqrt_bounds(const Rational& x, unsigned bits);

} // namespace sturmstab

#endif
