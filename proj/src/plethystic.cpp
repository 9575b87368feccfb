#include "charvar/plethystic.hpp"

#include "charvar/arith.hpp"
#include "charvar/errors.hpp"
#include "charvar/partitions.hpp"

#include <map>

namespace charvar {

namespace {

void require_zero_constant(const TruncSeries& f, const char* op) {
    if (!f[0].is_zero()) {
        throw NonZeroConstantTerm(std::string(op) + ": constant term is " + to_string(f[0]));
    }
}

// [t^n] of sum_k g_k(x) t^k under the monomial rule with weight w(l) / l:
// sum_{d | n} w(n/d)/(n/d) g_d(x^{n/d}).
template <typename Weight>
TruncSeries divisor_transform(const TruncSeries& g, Weight weight) {
    const std::size_t n_max = g.order();
    std::vector<RatPoly> out(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        RatPoly acc;
        for (auto d : divisors(n)) {
            const auto l = n / d;
            const int w = weight(l);
            if (w == 0 || g[d].is_zero()) continue;
            const Rational c(Integer(w), Integer(static_cast<unsigned long>(l)));
            acc += poly_substitute_power(g[d], static_cast<unsigned>(l)) * c;
        }
        out[n] = std::move(acc);
    }
    return TruncSeries(n_max, std::move(out));
}

}  // namespace

TruncSeries adams(const TruncSeries& f) {
    require_zero_constant(f, "adams");
    return divisor_transform(f, [](std::uint64_t) { return 1; });
}

TruncSeries adams_inverse(const TruncSeries& f) {
    require_zero_constant(f, "adams_inverse");
    return divisor_transform(f, [](std::uint64_t l) { return moebius(l); });
}

TruncSeries pexp(const TruncSeries& f) { return series_exp(adams(f)); }

TruncSeries plog(const TruncSeries& f) { return adams_inverse(series_log(f)); }

TruncSeries plog_closed(const TruncSeries& f) {
    if (!(f[0] == RatPoly::one())) {
        throw NonUnitConstantTerm("plog_closed: constant term is " + to_string(f[0]));
    }
    const std::size_t n_max = f.order();
    std::vector<RatPoly> out(n_max + 1);

    for (std::size_t n = 1; n <= n_max; ++n) {
        RatPoly acc;
        for (auto d : divisors(n)) {
            const auto h = static_cast<unsigned>(n / d);
            const int mu = moebius(h);
            if (mu == 0) continue;

            // f_j(x^h) and its powers, shared across partitions of d.
            std::map<std::pair<unsigned, unsigned>, RatPoly> powers;
            auto power_of = [&](unsigned j, unsigned k) -> const RatPoly& {
                auto key = std::make_pair(j, k);
                auto it = powers.find(key);
                if (it == powers.end()) {
                    it = powers.emplace(key, pow(poly_substitute_power(f[j], h), k)).first;
                }
                return it->second;
            };

            for (const auto& part : enumerate_partitions(static_cast<unsigned>(d))) {
                const unsigned len = part.length();
                RatPoly term = RatPoly::one();
                for (unsigned j = 1; j <= d; ++j) {
                    if (part.k(j) == 0) continue;
                    term *= power_of(j, part.k(j));
                    if (term.is_zero()) break;
                }
                if (term.is_zero()) continue;
                const Integer sign = (len % 2 == 1) ? 1 : -1;
                const Rational c = ratio(Integer(sign * mu * multinomial(part.mult)), Integer(static_cast<unsigned long>(h) * len));
                acc += term * c;
            }
        }
        out[n] = std::move(acc);
    }
    return TruncSeries(n_max, std::move(out));
}

}  // namespace charvar
