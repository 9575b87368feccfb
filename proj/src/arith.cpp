#include "charvar/arith.hpp"

#include "charvar/errors.hpp"

#include <algorithm>

namespace charvar {

namespace {

void require_positive(std::uint64_t n, const char* what) {
    if (n == 0) throw InvalidArgument(std::string(what) + " requires n >= 1");
}

template <typename Map, typename Compute>
auto memoized(std::shared_mutex& mutex, Map& map, std::uint64_t n, Compute compute) {
    {
        std::shared_lock lock(mutex);
        if (auto it = map.find(n); it != map.end()) return it->second;
    }
    auto value = compute(n);
    std::unique_lock lock(mutex);
    return map.emplace(n, std::move(value)).first->second;
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    require_positive(n, "factorize");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int ArithCache::moebius(std::uint64_t n) {
    require_positive(n, "moebius");
    return memoized(mutex_, moebius_, n, [](std::uint64_t m) {
        int mu = 1;
        for (auto [p, e] : factorize(m)) {
            if (e > 1) return 0;
            mu = -mu;
        }
        return mu;
    });
}

std::uint64_t ArithCache::totient(std::uint64_t n) {
    require_positive(n, "totient");
    return memoized(mutex_, totient_, n, [](std::uint64_t m) {
        std::uint64_t phi = m;
        for (auto [p, e] : factorize(m)) phi = phi / p * (p - 1);
        return phi;
    });
}

std::vector<std::uint64_t> ArithCache::divisors(std::uint64_t n) {
    require_positive(n, "divisors");
    return memoized(mutex_, divisors_, n, [](std::uint64_t m) {
        std::vector<std::uint64_t> ds{1};
        for (auto [p, e] : factorize(m)) {
            const std::size_t count = ds.size();
            std::uint64_t pk = 1;
            for (unsigned k = 1; k <= e; ++k) {
                pk *= p;
                for (std::size_t i = 0; i < count; ++i) ds.push_back(ds[i] * pk);
            }
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    });
}

ArithCache& ArithCache::global() {
    static ArithCache cache;
    return cache;
}

int moebius(std::uint64_t n) { return ArithCache::global().moebius(n); }
std::uint64_t totient(std::uint64_t n) { return ArithCache::global().totient(n); }
std::vector<std::uint64_t> divisors(std::uint64_t n) { return ArithCache::global().divisors(n); }

}  // namespace charvar
