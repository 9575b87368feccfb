#pragma once

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace charvar {

/// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Memoized Moebius function, totient and divisor lists. Lookups take a
/// shared lock; misses compute outside the lock and insert under a unique one.
class ArithCache {
public:
    int moebius(std::uint64_t n);
    std::uint64_t totient(std::uint64_t n);
    /// Ascending.
    std::vector<std::uint64_t> divisors(std::uint64_t n);

    /// Process-wide instance used by the free functions below.
    static ArithCache& global();

private:
    std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, int> moebius_;
    std::unordered_map<std::uint64_t, std::uint64_t> totient_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> divisors_;
};

/// mu(n) in {-1, 0, 1}; n >= 1.
int moebius(std::uint64_t n);
/// Euler's phi; n >= 1.
std::uint64_t totient(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace charvar
