#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Q with GMP rationals.
 *
 * Every E-polynomial in the library is a RatPoly in the single variable x.
 * Coefficients are stored ascending (index i holds the coefficient of x^i)
 * and always trimmed, so the zero polynomial is the empty vector and the
 * stored leading coefficient is nonzero.
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace charvar {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms.
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);

    /// Ascending integer coefficients, e.g. {-1, 0, 1} is x^2 - 1.
    static RatPoly from_ints(std::initializer_list<long> ascending);
    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, std::size_t degree);
    static RatPoly x() { return monomial(1, 1); }
    static RatPoly one() { return constant(1); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i, zero past the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;

    bool is_integral() const;
    /// Throws NonIntegerResult if some coefficient is not an integer.
    std::vector<Integer> integer_coeffs() const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const Rational& c);

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

RatPoly operator+(RatPoly a, const RatPoly& b);
RatPoly operator-(RatPoly a, const RatPoly& b);
RatPoly operator-(RatPoly a);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(RatPoly a, const Rational& c);
RatPoly operator*(const Rational& c, RatPoly a);

/// Exact product. Coefficients are brought to a common denominator so the
/// inner convolution runs on GMP integers.
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);

/// Quotient and remainder of Euclidean division. Throws DivisionByZero.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& num, const RatPoly& den);

/// q with q * den == num. Throws NotDivisible if the remainder is nonzero.
RatPoly poly_exact_div(const RatPoly& num, const RatPoly& den);

/// p(x^h), h >= 1.
RatPoly poly_substitute_power(const RatPoly& p, unsigned h);

/// Horner evaluation.
Rational poly_eval(const RatPoly& p, const Rational& v);

/// p * x^k
RatPoly poly_shift_degree(const RatPoly& p, std::size_t k);

RatPoly pow(const RatPoly& p, unsigned e);

/// Coefficients of p(x + c), i.e. the Taylor expansion of p around c.
RatPoly poly_taylor_shift(const RatPoly& p, const Rational& c);

/// Descending powers with explicit signs: "x^5 - 3x^4 + 2x - 1".
std::string to_string(const RatPoly& p);
std::ostream& operator<<(std::ostream& os, const RatPoly& p);

}  // namespace charvar
