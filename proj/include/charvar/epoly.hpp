#pragma once

/**
 * @file epoly.hpp
 * @brief E-polynomials of free-group character varieties and their strata.
 *
 * B_n^r(x) denotes the E-polynomial of the irreducible locus of the
 * GL_n-character variety of the free group of rank r. Two routes compute it:
 *
 *  - b_poly_series: generating series. With
 *      F(t) = 1 + sum_n ((x-1)(x^2-1)...(x^n-1))^{r-1} t^n,
 *    sum_n B_n t^n = (1 - x) PLog(S(F^{-1}(t))), S(t^n) = x^{(r-1) n(n-1)/2} t^n.
 *  - b_poly_closed: the expanded divisor/partition sum of the same identity,
 *    with the coefficients b_j of F^{-1} taken from an explicit partition
 *    expansion rather than from series inversion.
 *
 * Stratum polynomials for GL_n are sums over rectangular partitions of
 * products B_l(x^h)^k / (k! h^k); SL_n and PGL_n strata are the GL_n ones
 * divided by (x-1)^r.
 *
 * r = 1 is accepted: B_1^1 = x - 1 and B_n^1 = 0 for n >= 2.
 */

#include "charvar/partitions.hpp"
#include "charvar/poly.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace charvar {

enum class GroupKind { GL, SL, PGL };

/// "gl", "sl", "pgl"
std::string_view to_string(GroupKind g);
/// Case-insensitive; throws InvalidArgument.
GroupKind parse_group(std::string_view s);

struct StratumQuery {
    GroupKind group = GroupKind::GL;
    unsigned n = 1;
    unsigned r = 1;
    std::optional<Partition> stratum;  ///< empty: the whole character variety

    /// Throws InvalidArgument unless n, r >= 1 and the stratum partitions n.
    void validate() const;
};

/// ((x-1)(x^2-1)...(x^n-1))^{r-1}, the t^n coefficient of F.
RatPoly gl_count_factor(unsigned n, unsigned r);

RatPoly b_poly_closed(unsigned n, unsigned r);
/// [B_1, ..., B_{n_max}]
std::vector<RatPoly> b_poly_series(unsigned n_max, unsigned r);

/// B_l^r(x^h), memoized on (l, r, h). Filled from the series route.
RatPoly irreducible_epoly(unsigned l, unsigned r, unsigned h = 1);

/// prod over blocks of B_l(x^h)^k / (k! h^k)
RatPoly rect_term(const RectPartition& rp, unsigned r);

RatPoly e_gl_stratum(unsigned n, unsigned r, const Partition& m);
RatPoly e_gl_total(unsigned n, unsigned r);

/// GL: the GL_n polynomial. SL, PGL: exact division by (x-1)^r.
RatPoly e_group(const StratumQuery& q);

/// e_group at x = 1. Throws NonIntegerResult if that is not an integer.
Integer euler_char(const StratumQuery& q);

}  // namespace charvar
