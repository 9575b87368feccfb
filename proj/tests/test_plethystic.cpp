#include "charvar/errors.hpp"
#include "charvar/partitions.hpp"
#include "charvar/plethystic.hpp"

#include <doctest.h>

#include <random>

using namespace charvar;

namespace {

TruncSeries series_of(std::size_t order, std::vector<RatPoly> cs) { return TruncSeries(order, std::move(cs)); }

TruncSeries random_series(std::mt19937& rng, std::size_t order, bool unit) {
    std::uniform_int_distribution<int> deg(0, 3), coeff(-4, 4);
    std::vector<RatPoly> cs(order + 1);
    if (unit) cs[0] = RatPoly::one();
    for (std::size_t k = 1; k <= order; ++k) {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coeff(rng);
        cs[k] = RatPoly(std::move(c));
    }
    return TruncSeries(order, std::move(cs));
}

RatPoly q(long num, long den) { return RatPoly::constant(ratio(num, den)); }

}  // namespace

TEST_CASE("adams") {
    const RatPoly x = RatPoly::x();
    CHECK(adams(series_of(3, {{}, x})) ==
          series_of(3, {{}, x, RatPoly::monomial(ratio(1, 2), 2), RatPoly::monomial(ratio(1, 3), 3)}));
    CHECK(adams(TruncSeries::t(3)) == series_of(3, {{}, RatPoly::one(), q(1, 2), q(1, 3)}));
    CHECK_THROWS_AS(adams(TruncSeries::one(3)), NonZeroConstantTerm);
}

TEST_CASE("adams_inverse") {
    CHECK(adams_inverse(series_of(3, {{}, RatPoly::one(), q(1, 2), q(1, 3)})) == TruncSeries::t(3));
    // [t^2] of Psi^{-1}(c t) is mu(2)/2 c = -c/2
    const auto inv = adams_inverse(series_of(2, {{}, RatPoly::constant(5)}));
    CHECK(inv[2] == q(-5, 2));
    CHECK_THROWS_AS(adams_inverse(TruncSeries::one(3)), NonZeroConstantTerm);
}

TEST_CASE("pexp examples") {
    constexpr std::size_t N = 10;
    const auto geometric = pexp(TruncSeries::t(N));
    for (std::size_t k = 0; k <= N; ++k) CHECK(geometric[k] == RatPoly::one());

    std::vector<RatPoly> ones(N + 1, RatPoly::one());
    ones[0] = RatPoly();
    const auto parts = pexp(series_of(N, ones));
    CHECK(parts[0] == RatPoly::one());
    for (unsigned n = 1; n <= N; ++n) {
        CHECK(parts[n] == RatPoly::constant(Rational(static_cast<long>(enumerate_partitions(n).size()))));
    }
    CHECK(parts[7] == RatPoly::constant(15));

    const auto xt = pexp(series_of(N, {{}, RatPoly::x()}));
    for (std::size_t k = 0; k <= N; ++k) CHECK(xt[k] == RatPoly::monomial(1, k));
}

TEST_CASE("plog examples") {
    constexpr std::size_t N = 8;
    std::vector<RatPoly> ones(N + 1, RatPoly::one());
    CHECK(plog(series_of(N, ones)) == TruncSeries::t(N));
    CHECK(plog(series_of(N, {RatPoly::one(), RatPoly::constant(-1)})) == series_of(N, {{}, RatPoly::constant(-1)}));
    CHECK_THROWS_AS(plog(TruncSeries(N)), NonUnitConstantTerm);
    CHECK_THROWS_AS(plog_closed(TruncSeries(N)), NonUnitConstantTerm);
}

TEST_CASE("plethystic properties") {
    std::mt19937 rng(99);
    for (int i = 0; i < 40; ++i) {
        const auto f = random_series(rng, 8, false);
        const auto g = random_series(rng, 8, false);
        const auto u = random_series(rng, 8, true);
        CHECK(plog(pexp(f)) == f);
        CHECK(pexp(plog(u)) == u);
        CHECK(pexp(f + g) == pexp(f) * pexp(g));
        CHECK(adams_inverse(adams(f)) == f);
        CHECK(adams(adams_inverse(f)) == f);
        CHECK(plog(u) == plog_closed(u));
        // linearity over Q[x] scalars
        const RatPoly c = RatPoly::from_ints({i % 3 - 1, 2});
        CHECK(adams(series_scale(f, c) + g) == adams(series_scale(f, c)) + adams(g));
    }
}
