#include "sturmstab/rational.hpp"

#include <cctype>

namespace sturmstab {

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("cannot parse rational '" + std::string(text) + "' at column " +
                             std::to_string(pos + 1) + ": " + msg,
                         pos);
    }

    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos;
        return true;
    }

    int read_sign() {
        if (accept('-'))
            return -1;
        accept('+');
        return 1;
    }

    std::string read_digits(bool required) {
        const std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (required && pos == start)
            fail("expected digit");
        return std::string(text.substr(start, pos - start));
    }
};

} // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    Cursor cur{text};
    if (text.empty())
        cur.fail("empty input");

    const int sign = cur.read_sign();
    std::string int_part = cur.read_digits(false);

    if (cur.accept('/')) {
        if (int_part.empty())
            cur.fail("expected numerator digits");
        const std::size_t den_col = cur.pos;
        const std::string den = cur.read_digits(true);
        if (!cur.done())
            cur.fail("unexpected character");
        Integer d(den, 10);
        if (d == 0) {
            cur.pos = den_col;
            cur.fail("zero denominator");
        }
        Integer n(int_part, 10);
        return Rational(sign < 0 ? Integer(-n) : n, d);
    }

    std::string frac_part;
    if (cur.accept('.'))
        frac_part = cur.read_digits(false);
    if (int_part.empty() && frac_part.empty())
        cur.fail("expected digits");

    long exponent = 0;
    if (cur.accept('e') || cur.accept('E')) {
        const int esign = cur.read_sign();
        const std::string digits = cur.read_digits(true);
        if (digits.size() > 6)
            cur.fail("exponent too large");
        exponent = esign * std::stol(digits);
    }
    if (!cur.done())
        cur.fail("unexpected character");

    Integer mantissa(int_part + frac_part, 10);
    exponent -= static_cast<long>(frac_part.size());
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (sign < 0)
        mantissa = -mantissa;
    if (exponent >= 0)
        return Rational(Integer(mantissa * scale));
    return Rational(mantissa, scale);
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= b;
        exponent >>= 1U;
        if (exponent != 0)
            b *= b;
    }
    return result;
}

SqrtBounds sqrt_bounds(const Rational& x, unsigned bits) {
    if (x.sign() < 0)
        throw std::domain_error("sqrt_bounds of a negative rational");
    // sqrt(p/q) = sqrt(p*q)/q; scale by 2^bits before the integer root.
    const Integer p = x.numerator();
    const Integer q = x.denominator();
    Integer scaled = p * q;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2UL * bits);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Integer den = q;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    const bool exact = root * root == scaled;
    return {Rational(root, den), Rational(exact ? root : Integer(root + 1), den)};
}

} // namespace sturmstab
