#include "charvar/epoly.hpp"
#include "charvar/errors.hpp"
#include "charvar/partitions.hpp"
#include "charvar/reference_formulas.hpp"

#include <doctest.h>

using namespace charvar;

namespace {

const RatPoly xm1 = RatPoly::from_ints({-1, 1});
const RatPoly xp1 = RatPoly::from_ints({1, 1});

StratumQuery query(GroupKind g, unsigned n, unsigned r, std::optional<Partition> m = std::nullopt) {
    StratumQuery q;
    q.group = g;
    q.n = n;
    q.r = r;
    q.stratum = std::move(m);
    return q;
}

Partition P(unsigned n, std::vector<unsigned> mult) {
    mult.resize(n, 0);
    return Partition(n, std::move(mult));
}

Integer ipow(long b, unsigned e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), Integer(b).get_mpz_t(), e);
    return out;
}

}  // namespace

TEST_CASE("b_poly_closed examples") {
    for (unsigned r = 1; r <= 5; ++r) CHECK(b_poly_closed(1, r) == pow(xm1, r));
    CHECK(b_poly_closed(2, 2) == xm1 * xm1 * RatPoly::from_ints({-1, 0, -1, 1}));
    for (unsigned n = 2; n <= 5; ++n) CHECK(b_poly_closed(n, 1).is_zero());
    CHECK_THROWS_AS(b_poly_closed(0, 2), InvalidArgument);
}

TEST_CASE("b_poly_series examples") {
    for (unsigned r = 1; r <= 5; ++r) CHECK(b_poly_series(3, r)[0] == pow(xm1, r));
    const auto r1 = b_poly_series(3, 1);
    CHECK(r1 == std::vector<RatPoly>{xm1, RatPoly(), RatPoly()});
    for (unsigned r = 2; r <= 4; ++r) {
        const auto bs = b_poly_series(6, r);
        for (unsigned n = 1; n <= 6; ++n) CHECK(bs[n - 1] == b_poly_closed(n, r));
    }
}

TEST_CASE("B_n^r against the tabulated closed forms") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (int s = 1; s <= 4; ++s) {
            CHECK(irreducible_epoly(n, static_cast<unsigned>(s) + 1) == reference::irreducible_closed_form(n, s));
        }
    }
    // The tabulated B_4 carries (x^2-1)^s x^s (1-(x+1)^s) where the
    // expansion gives -(x-1)^{2s} x^s (1-(x+1)^s); the difference is exactly that
    // term times the (x-1)^{2s+1} prefactor.
    for (int s = 1; s <= 4; ++s) {
        const auto u = static_cast<unsigned>(s);
        const RatPoly typo = pow(xm1, 2 * u + 1) * pow(RatPoly::x(), u) * (RatPoly::one() - pow(xp1, u)) *
                             (-pow(xm1, 2 * u) - pow(RatPoly::from_ints({-1, 0, 1}), u));
        CHECK(irreducible_epoly(4, u + 1) - reference::irreducible_closed_form(4, s) == typo);
    }
}

TEST_CASE("degree, leading coefficient and value at 1") {
    for (unsigned r = 2; r <= 4; ++r) {
        for (unsigned n = 1; n <= 8; ++n) {
            const RatPoly b = irreducible_epoly(n, r);
            CHECK(b.degree() == static_cast<long>(n * n * (r - 1) + 1));
            CHECK(b.leading() == 1);
            CHECK(poly_eval(b, 1) == 0);
        }
    }
}

TEST_CASE("strata") {
    for (unsigned r = 1; r <= 4; ++r) {
        for (unsigned n = 1; n <= 5; ++n) CHECK(e_gl_stratum(n, r, Partition::single(n)) == irreducible_epoly(n, r));
        const RatPoly b1 = irreducible_epoly(1, r);
        CHECK(e_gl_stratum(3, r, P(3, {1, 1})) == irreducible_epoly(2, r) * b1);
        CHECK(e_gl_stratum(3, r, P(3, {3})) == poly_substitute_power(b1, 3) * Rational(1, 3) +
                                                   poly_substitute_power(b1, 2) * b1 * Rational(1, 2) +
                                                   pow(b1, 3) * Rational(1, 6));
        CHECK(e_gl_total(1, r) == pow(xm1, r));
        for (unsigned n = 1; n <= 6; ++n) {
            RatPoly sum;
            for (const auto& m : enumerate_partitions(n)) {
                const RatPoly e = e_gl_stratum(n, r, m);
                CHECK(e.is_integral());
                CHECK(poly_exact_div(e, pow(xm1, r)).is_integral());
                sum += e;
            }
            CHECK(sum == e_gl_total(n, r));
        }
    }
    CHECK_THROWS_AS(e_gl_stratum(3, 2, Partition::single(4)), InvalidArgument);
}

TEST_CASE("SL and PGL") {
    CHECK(e_group(query(GroupKind::SL, 2, 2)) == RatPoly::monomial(1, 3));
    CHECK(e_group(query(GroupKind::SL, 2, 2, Partition::single(2))) == RatPoly::from_ints({-1, 0, -1, 1}));
    CHECK(e_group(query(GroupKind::SL, 2, 2, P(2, {2}))) == RatPoly::from_ints({1, 0, 1}));
    CHECK(e_group(query(GroupKind::SL, 1, 3)) == RatPoly::one());
    for (int s = 1; s <= 4; ++s) {
        CHECK(e_group(query(GroupKind::SL, 3, static_cast<unsigned>(s) + 1)) ==
              reference::evaluate(reference::sl3_formula(), s));
    }
    // e(X_2 SL_4), derived independently by symbolic expansion of the
    // rectangular-partition sum with the expanded B_1..B_4.
    CHECK(e_group(query(GroupKind::SL, 4, 2)) ==
          RatPoly::from_ints({0, 0, 0, 0, 2, -1, -2, 5, -2, -5, 8, 0, -3, -1, 0, 1}));
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned r = 1; r <= 3; ++r) {
            CHECK(e_group(query(GroupKind::PGL, n, r)) == e_group(query(GroupKind::SL, n, r)));
            for (const auto& m : enumerate_partitions(n)) {
                CHECK(e_group(query(GroupKind::PGL, n, r, m)) == e_group(query(GroupKind::SL, n, r, m)));
            }
        }
    }
}

TEST_CASE("Euler characteristics") {
    for (unsigned r = 2; r <= 5; ++r) {
        CHECK(euler_char(query(GroupKind::SL, 4, r)) == 2 * ipow(4, r - 2));
        CHECK(euler_char(query(GroupKind::PGL, 4, r)) == 2 * ipow(4, r - 2));
        CHECK(euler_char(query(GroupKind::SL, 4, r, P(4, {0, 2}))) == -2 * ipow(4, r - 2));
        CHECK(euler_char(query(GroupKind::SL, 4, r, P(4, {4}))) == ipow(4, r - 1));
        CHECK(euler_char(query(GroupKind::SL, 4, r, P(4, {2, 1}))) == 0);
        CHECK(euler_char(query(GroupKind::SL, 6, r)) == 2 * ipow(6, r - 2));
        for (const auto& m : enumerate_partitions(5)) CHECK(euler_char(query(GroupKind::GL, 5, r, m)) == 0);
    }
    CHECK(euler_char(query(GroupKind::SL, 4, 3)) == 8);
}

TEST_CASE("query validation") {
    CHECK(parse_group("SL") == GroupKind::SL);
    CHECK(parse_group("pgl") == GroupKind::PGL);
    CHECK_THROWS_AS(parse_group("so"), InvalidArgument);
    CHECK_THROWS_AS(e_group(query(GroupKind::GL, 0, 2)), InvalidArgument);
    CHECK_THROWS_AS(e_group(query(GroupKind::GL, 2, 0)), InvalidArgument);
    CHECK_THROWS_AS(e_group(query(GroupKind::GL, 3, 2, Partition::single(2))), InvalidArgument);
}
