#pragma once

#include <map>
#include <string>

#include "branchkit/checked.hpp"

namespace branchkit {

/// Integer polynomial in one variable q, stored sparsely with no zero coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    /// Zero coefficients in `coeffs` are dropped.
    explicit QPolynomial(const std::map<int, Count>& coeffs);

    static QPolynomial constant(Count c);
    /// c * q^e
    static QPolynomial monomial(int exponent, Count c = 1);

    const std::map<int, Count>& coefficients() const noexcept { return coeffs_; }
    Count coefficient(int exponent) const;
    /// Degree of the zero polynomial is -1.
    int degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_palindromic() const;

    QPolynomial& operator+=(const QPolynomial& other);
    QPolynomial& operator-=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

    std::string to_string() const;

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    void add_term(int exponent, Count c);
    std::map<int, Count> coeffs_;
};

/// Number of partitions of d into at most k parts, each at most n.
/// Memoized in a process-wide cache; throws ArithmeticOverflow past 63 bits.
Count pi(int n, int k, int d);

/// Number of strictly decreasing k-tuples from {1..n} summing to d.
Count p_k_n(int k, int n, int d);

/// Gaussian binomial [a choose b]_q, built by the q-Pascal rule.
/// Requires 0 <= b <= a.
QPolynomial gaussian_binomial(int a, int b);

/// Number of (n,k,d) entries currently memoized by pi().
std::size_t pi_cache_size();

} // namespace branchkit
