#pragma once

/**
 * @file series.hpp
 * @brief Power series in t truncated at a fixed order, with Q[x] coefficients.
 *
 * A TruncSeries of order N tracks the coefficients of t^0 .. t^N. Binary
 * operations require equal orders and throw OrderMismatch otherwise; nothing
 * is ever re-truncated behind the caller's back.
 */

#include "charvar/poly.hpp"

#include <cstddef>
#include <vector>

namespace charvar {

class TruncSeries {
public:
    /// The zero series of the given order.
    explicit TruncSeries(std::size_t order);
    /// Missing trailing coefficients are zero. Throws InvalidArgument if more
    /// than order + 1 coefficients are supplied.
    TruncSeries(std::size_t order, std::vector<RatPoly> coeffs);

    static TruncSeries one(std::size_t order);
    /// The series t (zero when order is 0).
    static TruncSeries t(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const RatPoly& operator[](std::size_t k) const { return coeffs_[k]; }
    const std::vector<RatPoly>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<RatPoly> coeffs_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
/// Coefficientwise product with a polynomial in x.
TruncSeries series_scale(const TruncSeries& a, const RatPoly& c);
/// Cauchy product truncated at the common order.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse by b_n = -sum_{k=1..n} a_k b_{n-k}. The constant
/// term must be exactly 1 (NonUnitConstantTerm otherwise).
TruncSeries series_invert(const TruncSeries& f);

/// log f = sum_{k>=1} (-1)^{k+1} (f-1)^k / k, for f with constant term 1.
TruncSeries series_log(const TruncSeries& f);

/// exp f = sum_{k>=0} f^k / k!, for f with constant term 0.
TruncSeries series_exp(const TruncSeries& f);

/// Multiplies the coefficient of t^n by x^{(r-1) n(n-1)/2}.
TruncSeries series_shift(const TruncSeries& f, unsigned r);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return series_add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return series_sub(a, b); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }

}  // namespace charvar
