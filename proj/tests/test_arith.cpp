#include "charvar/arith.hpp"
#include "charvar/errors.hpp"

#include <doctest.h>

#include <numeric>

using namespace charvar;

TEST_CASE("moebius") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(7) == -1);
    CHECK(moebius(30) == -1);
    CHECK_THROWS_AS(moebius(0), InvalidArgument);
}

TEST_CASE("totient") {
    CHECK(totient(1) == 1);
    CHECK(totient(4) == 2);
    CHECK(totient(9) == 6);
    // brute-force count of units
    for (std::uint64_t n = 1; n <= 60; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
        CHECK(totient(n) == count);
    }
}

TEST_CASE("divisors and moebius inversion") {
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    for (std::uint64_t n = 1; n <= 100; ++n) {
        long mu_sum = 0;
        std::uint64_t phi_sum = 0;
        for (auto d : divisors(n)) {
            mu_sum += moebius(d);
            phi_sum += totient(d);
        }
        CHECK(mu_sum == (n == 1 ? 1 : 0));
        CHECK(phi_sum == n);
    }
}

TEST_CASE("factorize") {
    const auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(f[1] == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(f[2] == std::pair<std::uint64_t, unsigned>{5, 1});
    CHECK(factorize(1).empty());
}
