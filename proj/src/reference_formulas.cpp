#include "charvar/reference_formulas.hpp"

#include "charvar/errors.hpp"

#include <sstream>

namespace charvar::reference {

namespace {

using enum Factor;

Rational q(long num, long den = 1) { return ratio(Integer(num), Integer(den)); }

Power P(Factor f, int per_s, int offset = 0) { return Power{f, per_s, offset}; }

Term T(Rational c, std::vector<Power> powers = {}, std::vector<Sum> factors = {}) {
    return Term{std::move(c), std::move(powers), std::move(factors)};
}

// Sums that recur below.
Sum one_minus_xp1_s() { return {T(1), T(-1, {P(XPlus1, 1)})}; }

Sum build_b1() { return {T(1, {P(XMinus1, 1)})}; }

Sum build_b2() {
    const Sum inner = {
        T(1, {P(XMinus1, 1), P(X, 1)}, {{T(1, {P(XPlus1, 1)}), T(-1)}}),
        T(q(1, 2), {P(XMinus1, 1)}),
        T(q(-1, 2), {P(XPlus1, 1)}),
    };
    return {T(1, {P(XMinus1, 1)}, {inner})};
}

Sum build_b3() {
    const Sum bracket = {
        T(q(1, 3)),
        T(-1, {P(X, 1)}),
        T(1, {P(X, 1), P(XPlus1, 1)}),
        T(1, {P(X, 3)}),
        T(1, {P(X, 3), P(XPlus1, 1), P(X2PlusXPlus1, 1)}),
        T(-2, {P(X, 3), P(XPlus1, 1)}),
    };
    const Sum inner = {
        T(q(-1, 3), {P(X2PlusXPlus1, 1)}),
        T(1, {P(XMinus1, 2)}, {bracket}),
    };
    return {T(1, {P(XMinus1, 1)}, {inner})};
}

Sum build_b4() {
    const Sum third = {
        T(-1, {P(XPlus1, 1), P(X2PlusXPlus1, 1)}),
        T(2, {P(XPlus1, 1)}),
        T(-1),
    };
    const Sum sixth = {
        T(-1, {P(XPlus1, 1), P(X2PlusXPlus1, 1), P(X3PlusX2PlusXPlus1, 1)}),
        T(2, {P(XPlus1, 1), P(X2PlusXPlus1, 1)}),
        T(1, {P(XPlus1, 2)}),
        T(-3, {P(XPlus1, 1)}),
        T(1),
    };
    const Sum inner = {
        T(q(1, 4), {P(XMinus1, 2)}),
        T(q(-1, 4), {P(XPlus1, 2)}),
        // (x^2 - 1)^s = (x - 1)^s (x + 1)^s
        T(1, {P(XMinus1, 1), P(XPlus1, 1), P(X, 1)}, {one_minus_xp1_s()}),
        T(q(1, 2), {P(XPlus1, 2), P(X, 2)}, {{T(1), T(-1, {P(X2Plus1, 1)})}}),
        T(q(1, 2), {P(XMinus1, 2), P(X, 2)}, {one_minus_xp1_s(), one_minus_xp1_s()}),
        T(-1, {P(XMinus1, 2), P(X, 3)}, {third}),
        T(-1, {P(XMinus1, 2), P(X, 6)}, {sixth}),
    };
    return {T(1, {P(XMinus1, 2)}, {inner})};
}

Sum build_sl3() {
    const Sum bracket = {
        T(1, {P(X, 3), P(X2PlusXPlus1, 1)}),
        T(1, {P(X, 1, 1)}),
        T(-2, {P(X, 3)}),
    };
    const Sum tail = {
        T(1, {P(XPlus1, 1)}, {bracket}),
        T(1, {P(X, 3)}),
        T(-1, {P(X, 1, 1)}),
        T(q(1, 6), {P(X, 0, 1), P(XPlus1, 0, 1)}),
    };
    return {
        T(q(1, 2), {P(XMinus1, 1, 1), P(XPlus1, 1), P(X, 0, 1)}),
        T(q(1, 3), {P(X2PlusXPlus1, 1), P(X, 0, 1), P(XPlus1, 0, 1)}),
        T(1, {P(XMinus1, 2)}, {tail}),
    };
}

Sum build_sl4() {
    // (x-1)^{3s+1} [ (x+1)^{2s} x^{2s}/2 + (x+1)^s ( x^{3s}(x^2+x+1)^s - 2x^{3s} - x^{2s} + 3x^s/2 ) ]
    const Sum line1 = {
        T(q(1, 2), {P(XPlus1, 2), P(X, 2)}),
        T(1, {P(XPlus1, 1)},
          {{T(1, {P(X, 3), P(X2PlusXPlus1, 1)}), T(-2, {P(X, 3)}), T(-1, {P(X, 2)}), T(q(3, 2), {P(X, 1)})}}),
    };
    // (x-1)^{3s+1} [ x^{3s} + x^{2s}/2 - 3x^s/2 + 11/24 ]
    const Sum line2 = {T(1, {P(X, 3)}), T(q(1, 2), {P(X, 2)}), T(q(-3, 2), {P(X, 1)}), T(q(11, 24))};
    // (x-1)^{3s} (x+1)^{2s} ( -x^{6s} + x^{2s}/2 )
    const Sum line3 = {T(-1, {P(X, 6)}), T(q(1, 2), {P(X, 2)})};
    // (x-1)^{3s} (x+1)^s x^{6s} [ (x^2+x+1)^s (x^3+x^2+x+1)^s - 2(x^2+x+1)^s + 3 ]
    const Sum line4 = {
        T(1, {P(X2PlusXPlus1, 1), P(X3PlusX2PlusXPlus1, 1)}),
        T(-2, {P(X2PlusXPlus1, 1)}),
        T(3),
    };
    // (x-1)^{3s} (x+1)^s [ x^{3s} ((x^2+x+1)^s - 2) - x^{2s} + x^s/2 ]
    const Sum line5 = {
        T(1, {P(X, 3)}, {{T(1, {P(X2PlusXPlus1, 1)}), T(-2)}}),
        T(-1, {P(X, 2)}),
        T(q(1, 2), {P(X, 1)}),
    };
    // (x-1)^{3s} ( -x^{6s} + x^{3s} + x^{2s}/2 - x^s/2 + 1/2 )
    const Sum line6 = {
        T(-1, {P(X, 6)}), T(1, {P(X, 3)}), T(q(1, 2), {P(X, 2)}), T(q(-1, 2), {P(X, 1)}), T(q(1, 2)),
    };
    // (x-1)^{2s+1} (x+1)^s / 2 ( -(x+1)^s x^s + x^s - 1/2 )
    const Sum line8 = {T(-1, {P(XPlus1, 1), P(X, 1)}), T(1, {P(X, 1)}), T(q(-1, 2))};
    // (x-1)^{s+1} [ (x+1) x/3 (x^2+x+1)^s + (x+1)^{2s}/8 (x^2+2x+2) ]
    const Sum line10 = {
        T(q(1, 3), {P(XPlus1, 0, 1), P(X, 0, 1), P(X2PlusXPlus1, 1)}),
        T(q(1, 8), {P(XPlus1, 2), P(X2Plus2XPlus2, 0, 1)}),
    };
    // (x-1)^s (x+1)^{2s} [ x^{2s+1}/2 ((x^2+1)^s - 1) + (x-1)/4 ]
    const Sum line11 = {
        T(q(1, 2), {P(X, 2, 1)}, {{T(1, {P(X2Plus1, 1)}), T(-1)}}),
        T(q(1, 4), {P(XMinus1, 0, 1)}),
    };

    return {
        T(1, {P(XMinus1, 3, 1)}, {line1}),
        T(1, {P(XMinus1, 3, 1)}, {line2}),
        T(q(1, 24), {P(XMinus1, 3, 3)}),
        T(1, {P(XMinus1, 3), P(XPlus1, 2)}, {line3}),
        T(1, {P(XMinus1, 3), P(XPlus1, 1), P(X, 6)}, {line4}),
        T(1, {P(XMinus1, 3), P(XPlus1, 1)}, {line5}),
        T(1, {P(XMinus1, 3)}, {line6}),
        // (x-1)^{2s+2} (x-1)^{s+1} / 4
        T(q(1, 4), {P(XMinus1, 2, 2), P(XMinus1, 1, 1)}),
        T(q(1, 2), {P(XMinus1, 2, 1), P(XPlus1, 1)}, {line8}),
        // (x-1)^{2s} (x+1)^s x^s / 2 (1 - (x+1)^s)
        T(q(1, 2), {P(XMinus1, 2), P(XPlus1, 1), P(X, 1)}, {one_minus_xp1_s()}),
        T(1, {P(XMinus1, 1, 1)}, {line10}),
        T(1, {P(XMinus1, 1), P(XPlus1, 2)}, {line11}),
        T(q(-1, 4), {P(XPlus1, 1, 1), P(X2Plus1, 1)}),
        T(q(1, 4), {P(X3PlusX2PlusXPlus1, 1, 1)}),
    };
}

}  // namespace

RatPoly factor_poly(Factor f) {
    switch (f) {
        case X: return RatPoly::from_ints({0, 1});
        case XMinus1: return RatPoly::from_ints({-1, 1});
        case XPlus1: return RatPoly::from_ints({1, 1});
        case X2Plus1: return RatPoly::from_ints({1, 0, 1});
        case X2PlusXPlus1: return RatPoly::from_ints({1, 1, 1});
        case X3PlusX2PlusXPlus1: return RatPoly::from_ints({1, 1, 1, 1});
        case X2Plus2XPlus2: return RatPoly::from_ints({2, 2, 1});
    }
    throw InvalidArgument("unknown factor");
}

RatPoly evaluate(const Sum& formula, int s) {
    RatPoly acc;
    for (const auto& term : formula) {
        RatPoly value = RatPoly::constant(term.coeff);
        for (const auto& p : term.powers) {
            const int e = p.per_s * s + p.offset;
            if (e < 0) throw InvalidArgument("negative exponent in reference formula at s=" + std::to_string(s));
            value *= pow(factor_poly(p.base), static_cast<unsigned>(e));
        }
        for (const auto& sub : term.factors) value *= evaluate(sub, s);
        acc += value;
    }
    return acc;
}

const Sum& irreducible_over_x_minus_1(unsigned n) {
    static const Sum b1 = build_b1();
    static const Sum b2 = build_b2();
    static const Sum b3 = build_b3();
    static const Sum b4 = build_b4();
    switch (n) {
        case 1: return b1;
        case 2: return b2;
        case 3: return b3;
        case 4: return b4;
        default: throw InvalidArgument("closed forms are tabulated for n = 1..4 only");
    }
}

RatPoly irreducible_closed_form(unsigned n, int s) {
    return RatPoly::from_ints({-1, 1}) * evaluate(irreducible_over_x_minus_1(n), s);
}

const Sum& sl3_formula() {
    static const Sum f = build_sl3();
    return f;
}

const Sum& sl4_formula() {
    static const Sum f = build_sl4();
    return f;
}

std::string CoefficientMismatch::describe() const {
    std::ostringstream os;
    os << "first differing coefficient at x^" << degree << ": reference " << expected.get_str() << ", pipeline "
       << actual.get_str();
    return os.str();
}

std::optional<CoefficientMismatch> first_difference(const RatPoly& expected, const RatPoly& actual) {
    const std::size_t n = std::max(expected.size(), actual.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (expected.coeff(i) != actual.coeff(i)) {
            return CoefficientMismatch{i, expected.coeff(i), actual.coeff(i)};
        }
    }
    return std::nullopt;
}

}  // namespace charvar::reference
