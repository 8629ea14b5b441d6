#ifndef STURMSTAB_REDUCE_HPP
#define STURMSTAB_REDUCE_HPP

#include <string>
#include <vector>

#include "sturmstab/dispersion.hpp"
#include "sturmstab/polynomial.hpp"
#include "sturmstab/rational.hpp"

namespace sturmstab {

/// Triangular scheme rewriting (mu+n)^N - mu^N in powers of s = mu(mu+n):
///
///     (mu+n)^N - mu^N = sum_i a_i s^i n^{N-2i},   i = 0 .. (N-1)/2.
///
/// Row 0 holds binomial(N, j) for j = N .. 1. Row i >= 1 starts with a zero
/// in column N-2i+1 and continues rightward with
/// a(i, j) = a(i-1, j+1) - a(i, j+1). The first nonzero entry of row i, in
/// column N-2i, is a_i.
class ReductionTriangle {
public:
    /// Throws std::invalid_argument unless N is odd and positive.
    explicit ReductionTriangle(int order);

    int order() const { return order_; }
    int rows() const { return (order_ + 1) / 2; }

    /// Whether row i has an entry in the column of n^power.
    bool present(int row, int power) const;
    /// Entry in row i, column n^power. Throws std::out_of_range when absent.
    const Integer& at(int row, int power) const;

    /// a_0 .. a_{(N-1)/2}.
    std::vector<Integer> leaders() const;

    /// Table layout: one column per power n^N .. n^1, leaders in parentheses,
    /// trailing column naming the power of s.
    std::string render() const;

private:
    int first_column(int row) const { return row == 0 ? order_ : order_ - 2 * row + 1; }

    int order_;
    // rows_[i][k] is the entry in column first_column(i) - k.
    std::vector<std::vector<Integer>> rows_;
};

/// a_0 .. a_{(N-1)/2} from the triangle. Throws std::invalid_argument for
/// even or nonpositive N.
std::vector<Integer> monomial_reduction(int order);

/// q(s, n) stored as coefficients of s^i, each a polynomial in n. The
/// overall sign is chosen so that for alpha, beta, gamma
///
///     q = -gamma(n^6 + 7n^4 s + 14n^2 s^2 + 7s^3) + beta(n^4 + 5n^2 s + 5s^2)
///         - alpha(n^2 + 3s) + alpha - beta + gamma
///
/// and P(mu; n) = -n q(mu(mu+n), n).
class ReducedPolynomial {
public:
    explicit ReducedPolynomial(std::vector<Polynomial> s_coeffs);

    int degree_in_s() const { return static_cast<int>(s_coeffs_.size()) - 1; }
    /// Coefficient of s^power as a polynomial in n.
    Polynomial s_coeff(int power) const;
    const std::vector<Polynomial>& s_coeffs() const { return s_coeffs_; }

    Rational evaluate(const Rational& s, const Rational& n) const;

    /// q(., n) as a polynomial in s for any rational n, without validation.
    Polynomial slice(const Rational& n) const;

    /// Grouping by dispersive term, e.g.
    /// "-1*(n^2 + 3*s) + 1/4*(n^4 + 5*n^2*s + 5*s^2) + 3/4".
    std::string grouped_str(const DispersionSpec& spec) const;
    /// Collected form in descending powers of s.
    std::string str() const;

private:
    std::vector<Polynomial> s_coeffs_;
};

ReducedPolynomial build_reduced(const DispersionSpec& spec);

/// q(s, n) at a positive integer n, as a polynomial in s. Throws
/// std::invalid_argument for n < 1.
Polynomial instantiate(const ReducedPolynomial& q, int n);

} // namespace sturmstab

#endif
