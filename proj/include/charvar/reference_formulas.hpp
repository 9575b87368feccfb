#pragma once

/**
 * @file reference_formulas.hpp
 * @brief Published closed forms, stored as data and evaluated per s = r - 1.
 *
 * A formula is a sum of terms; a term is a rational coefficient times a
 * product of factor powers whose exponents are affine in s, times a product
 * of nested sums. The base factors are the small cyclotomic-type
 * polynomials that show up in the closed forms. Keeping the formulas as data
 * means a transcription error shows up as a test failure with a precise
 * location instead of as silently wrong code.
 */

#include "charvar/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charvar::reference {

enum class Factor {
    X,                   // x
    XMinus1,             // x - 1
    XPlus1,              // x + 1
    X2Plus1,             // x^2 + 1
    X2PlusXPlus1,        // x^2 + x + 1
    X3PlusX2PlusXPlus1,  // x^3 + x^2 + x + 1
    X2Plus2XPlus2,       // x^2 + 2x + 2
};

RatPoly factor_poly(Factor f);

/// base^(per_s * s + offset)
struct Power {
    Factor base;
    int per_s = 0;
    int offset = 0;
};

struct Term;
using Sum = std::vector<Term>;

struct Term {
    Rational coeff = 1;
    std::vector<Power> powers;
    std::vector<Sum> factors;  ///< each nested sum is multiplied in
};

/// Throws InvalidArgument if an exponent evaluates negative.
RatPoly evaluate(const Sum& formula, int s);

/// B_n^r(x) / (x - 1) for n in 1..4, in terms of s = r - 1.
const Sum& irreducible_over_x_minus_1(unsigned n);
/// B_n^r(x) for n in 1..4 and s = r - 1 >= 0.
RatPoly irreducible_closed_form(unsigned n, int s);

/// e of the SL_3-character variety of the free group of rank s + 1.
const Sum& sl3_formula();
/// e of the SL_4-character variety of the free group of rank s + 1.
const Sum& sl4_formula();

/// Index and both values of the first differing coefficient, if any.
struct CoefficientMismatch {
    std::size_t degree;
    Rational expected;
    Rational actual;
    std::string describe() const;
};
std::optional<CoefficientMismatch> first_difference(const RatPoly& expected, const RatPoly& actual);

}  // namespace charvar::reference
