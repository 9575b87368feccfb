#include "charvar/epoly.hpp"
#include "charvar/errors.hpp"
#include "charvar/series.hpp"

#include <doctest.h>

#include <random>

using namespace charvar;

namespace {

TruncSeries from_rationals(std::size_t order, std::vector<Rational> cs) {
    std::vector<RatPoly> ps;
    for (auto& c : cs) ps.push_back(RatPoly::constant(c));
    return TruncSeries(order, std::move(ps));
}

TruncSeries random_series(std::mt19937& rng, std::size_t order, int constant) {
    std::uniform_int_distribution<int> deg(0, 4), coeff(-5, 5);
    std::vector<RatPoly> cs(order + 1);
    cs[0] = RatPoly::constant(constant);
    for (std::size_t k = 1; k <= order; ++k) {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coeff(rng);
        cs[k] = RatPoly(std::move(c));
    }
    return TruncSeries(order, std::move(cs));
}

TruncSeries f_series(unsigned r, std::size_t order) {
    std::vector<RatPoly> a(order + 1);
    a[0] = RatPoly::one();
    for (unsigned n = 1; n <= order; ++n) a[n] = gl_count_factor(n, r);
    return TruncSeries(order, std::move(a));
}

}  // namespace

TEST_CASE("construction") {
    CHECK(TruncSeries(3).is_zero());
    CHECK(TruncSeries::one(3)[0] == RatPoly::one());
    CHECK(TruncSeries::t(2)[1] == RatPoly::one());
    CHECK_THROWS_AS(TruncSeries(1, {RatPoly::one(), RatPoly::one(), RatPoly::one()}), InvalidArgument);
}

TEST_CASE("series_mul") {
    const auto a = from_rationals(3, {1, 1});
    const auto b = from_rationals(3, {1, -1});
    CHECK(a * b == from_rationals(3, {1, 0, -1}));
    CHECK(a * TruncSeries::one(3) == a);
    CHECK_THROWS_AS(series_mul(a, TruncSeries::one(4)), OrderMismatch);
    for (unsigned r : {2u, 3u}) {
        const auto f = f_series(r, 8);
        CHECK(f * series_invert(f) == TruncSeries::one(8));
    }
}

TEST_CASE("series_invert") {
    CHECK(series_invert(from_rationals(3, {1, 1})) == from_rationals(3, {1, -1, 1, -1}));
    CHECK_THROWS_AS(series_invert(from_rationals(3, {2, 1})), NonUnitConstantTerm);
    for (unsigned r = 1; r <= 4; ++r) {
        const auto inv = series_invert(f_series(r, 4));
        const RatPoly a1 = pow(RatPoly::from_ints({-1, 1}), r - 1);
        CHECK(inv[1] == -a1);
        // b_2 = a_1^2 - a_2 = (x-1)^{2r-2} (1 - (x+1)^{r-1})
        CHECK(inv[2] == a1 * a1 * (RatPoly::one() - pow(RatPoly::from_ints({1, 1}), r - 1)));
    }
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        const auto f = random_series(rng, 8, 1);
        CHECK(f * series_invert(f) == TruncSeries::one(8));
    }
}

TEST_CASE("series_log and series_exp") {
    CHECK(series_log(from_rationals(3, {1, 1})) == from_rationals(3, {0, 1, ratio(-1, 2), ratio(1, 3)}));
    CHECK(series_log(TruncSeries::one(3)).is_zero());
    CHECK(series_exp(TruncSeries::t(3)) == from_rationals(3, {1, 1, ratio(1, 2), ratio(1, 6)}));
    CHECK(series_exp(TruncSeries(3)) == TruncSeries::one(3));
    CHECK_THROWS_AS(series_log(TruncSeries(3)), NonUnitConstantTerm);
    CHECK_THROWS_AS(series_exp(TruncSeries::one(3)), NonZeroConstantTerm);

    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
        const auto u = random_series(rng, 8, 1);
        CHECK(series_exp(series_log(u)) == u);
        const auto z = random_series(rng, 8, 0);
        CHECK(series_log(series_exp(z)) == z);
    }
}

TEST_CASE("series_shift") {
    const auto f = from_rationals(2, {1, 1, 1});
    const auto s = series_shift(f, 2);
    CHECK(s[0] == RatPoly::one());
    CHECK(s[1] == RatPoly::one());
    CHECK(s[2] == RatPoly::x());
    CHECK(series_shift(f, 1) == f);
    CHECK_THROWS_AS(series_shift(f, 0), InvalidArgument);

    for (unsigned r = 2; r <= 4; ++r) {
        const auto inv = series_invert(f_series(r, 5));
        const auto shifted = series_shift(inv, r);
        for (unsigned n = 0; n <= 5; ++n) {
            CHECK(shifted[n] == poly_shift_degree(inv[n], (r - 1) * n * (n - 1) / 2));
            CHECK(shifted[n].is_zero() == inv[n].is_zero());
        }
    }
}
