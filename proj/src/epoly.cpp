#include "charvar/epoly.hpp"

#include "charvar/arith.hpp"
#include "charvar/errors.hpp"
#include "charvar/plethystic.hpp"
#include "charvar/series.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace charvar {

namespace {

void require_positive(unsigned v, const char* what) {
    if (v == 0) throw InvalidArgument(std::string(what) + " must be >= 1");
}

RatPoly x_minus_one_pow(unsigned e) { return pow(RatPoly::from_ints({-1, 1}), e); }

// b_n = sum_{[k] in P_n} (-1)^{|k|} multinomial(|k|; k) prod_j a_j^{k_j}:
// every composition of n contributes (-1)^{#parts} prod a_{part}.
RatPoly inverse_coefficient(unsigned n, unsigned r) {
    RatPoly acc;
    for (const auto& part : enumerate_partitions(n)) {
        RatPoly term = RatPoly::one();
        for (unsigned j = 1; j <= n; ++j) {
            if (part.k(j) > 0) term *= pow(gl_count_factor(j, r), part.k(j));
        }
        const int sign = part.length() % 2 == 0 ? 1 : -1;
        acc += term * Rational(Integer(sign * multinomial(part.mult)));
    }
    return acc;
}

class IrreducibleCache {
public:
    RatPoly get(unsigned l, unsigned r, unsigned h) {
        const Key key{l, r, h};
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        RatPoly value;
        if (h == 1) {
            const auto bs = b_poly_series(l, r);
            std::unique_lock lock(mutex_);
            for (unsigned j = 1; j <= l; ++j) cache_.try_emplace(Key{j, r, 1}, bs[j - 1]);
            return bs[l - 1];
        }
        value = poly_substitute_power(get(l, r, 1), h);
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(key, std::move(value)).first->second;
    }

    static IrreducibleCache& global() {
        static IrreducibleCache cache;
        return cache;
    }

private:
    using Key = std::tuple<unsigned, unsigned, unsigned>;
    std::shared_mutex mutex_;
    std::map<Key, RatPoly> cache_;
};

}  // namespace

std::string_view to_string(GroupKind g) {
    switch (g) {
        case GroupKind::GL: return "gl";
        case GroupKind::SL: return "sl";
        case GroupKind::PGL: return "pgl";
    }
    return "?";
}

GroupKind parse_group(std::string_view s) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "gl") return GroupKind::GL;
    if (lower == "sl") return GroupKind::SL;
    if (lower == "pgl") return GroupKind::PGL;
    throw InvalidArgument("unknown group '" + std::string(s) + "' (expected gl, sl or pgl)");
}

void StratumQuery::validate() const {
    require_positive(n, "n");
    require_positive(r, "r");
    if (stratum && stratum->n != n) {
        throw InvalidArgument("stratum " + stratum->to_string() + " is not a partition of " + std::to_string(n));
    }
}

RatPoly gl_count_factor(unsigned n, unsigned r) {
    require_positive(r, "r");
    RatPoly prod = RatPoly::one();
    for (unsigned i = 1; i <= n; ++i) {
        prod *= RatPoly::monomial(1, i) - RatPoly::one();
    }
    return pow(prod, r - 1);
}

std::vector<RatPoly> b_poly_series(unsigned n_max, unsigned r) {
    require_positive(n_max, "n_max");
    require_positive(r, "r");
    std::vector<RatPoly> a(n_max + 1);
    a[0] = RatPoly::one();
    for (unsigned n = 1; n <= n_max; ++n) a[n] = gl_count_factor(n, r);

    const TruncSeries f(n_max, std::move(a));
    const TruncSeries log_part = plog(series_shift(series_invert(f), r));
    const RatPoly one_minus_x = RatPoly::from_ints({1, -1});

    std::vector<RatPoly> out;
    out.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) out.push_back(one_minus_x * log_part[n]);
    return out;
}

RatPoly b_poly_closed(unsigned n, unsigned r) {
    require_positive(n, "n");
    require_positive(r, "r");

    std::vector<RatPoly> b(n + 1);
    for (unsigned j = 1; j <= n; ++j) b[j] = inverse_coefficient(j, r);

    RatPoly acc;
    for (auto d64 : divisors(n)) {
        const auto d = static_cast<unsigned>(d64);
        const unsigned h = n / d;
        const int mu = moebius(h);
        if (mu == 0) continue;

        // f_j(x^h) = b_j(x^h) x^{h (r-1) C(j,2)}
        std::vector<RatPoly> f(d + 1);
        for (unsigned j = 1; j <= d; ++j) {
            const std::size_t shift = static_cast<std::size_t>(h) * (r - 1) * j * (j - 1) / 2;
            f[j] = poly_shift_degree(poly_substitute_power(b[j], h), shift);
        }

        for (const auto& part : enumerate_partitions(d)) {
            RatPoly term = RatPoly::one();
            for (unsigned j = 1; j <= d && !term.is_zero(); ++j) {
                if (part.k(j) > 0) term *= pow(f[j], part.k(j));
            }
            if (term.is_zero()) continue;
            const unsigned len = part.length();
            const Integer sign = len % 2 == 0 ? 1 : -1;
            acc += term * ratio(Integer(sign * mu * multinomial(part.mult)), Integer(h * len));
        }
    }
    return RatPoly::from_ints({-1, 1}) * acc;
}

RatPoly irreducible_epoly(unsigned l, unsigned r, unsigned h) {
    require_positive(l, "l");
    require_positive(r, "r");
    require_positive(h, "h");
    return IrreducibleCache::global().get(l, r, h);
}

RatPoly rect_term(const RectPartition& rp, unsigned r) {
    RatPoly term = RatPoly::one();
    Integer den = 1;
    for (const auto& [key, k] : rp.blocks) {
        const auto [l, h] = key;
        term *= pow(irreducible_epoly(l, r, h), k);
        Integer hk;
        mpz_ui_pow_ui(hk.get_mpz_t(), h, k);
        den *= factorial(k) * hk;
    }
    return term * ratio(1, den);
}

RatPoly e_gl_stratum(unsigned n, unsigned r, const Partition& m) {
    require_positive(n, "n");
    require_positive(r, "r");
    if (m.n != n) throw InvalidArgument("stratum " + m.to_string() + " is not a partition of " + std::to_string(n));
    RatPoly acc;
    for (const auto& rp : fiber(m)) acc += rect_term(rp, r);
    return acc;
}

RatPoly e_gl_total(unsigned n, unsigned r) {
    require_positive(n, "n");
    require_positive(r, "r");
    RatPoly acc;
    for (const auto& rp : enumerate_rect_partitions(n)) acc += rect_term(rp, r);
    return acc;
}

RatPoly e_group(const StratumQuery& q) {
    q.validate();
    RatPoly gl = q.stratum ? e_gl_stratum(q.n, q.r, *q.stratum) : e_gl_total(q.n, q.r);
    if (q.group == GroupKind::GL) return gl;
    return poly_exact_div(gl, x_minus_one_pow(q.r));
}

Integer euler_char(const StratumQuery& q) {
    const Rational v = poly_eval(e_group(q), 1);
    if (v.get_den() != 1) throw NonIntegerResult("Euler characteristic evaluates to " + v.get_str());
    return v.get_num();
}

}  // namespace charvar
