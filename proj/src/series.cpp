#include "charvar/series.hpp"

#include "charvar/errors.hpp"

#include <string>

namespace charvar {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) {
        throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
    }
}

void require_unit_constant(const TruncSeries& f, const char* op) {
    if (!(f[0] == RatPoly::one())) {
        throw NonUnitConstantTerm(std::string(op) + ": constant term is " + to_string(f[0]) + ", expected 1");
    }
}

}  // namespace

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::size_t order, std::vector<RatPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1) {
        throw InvalidArgument("series of order " + std::to_string(order) + " given " +
                              std::to_string(coeffs_.size()) + " coefficients");
    }
    coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::one(std::size_t order) { return TruncSeries(order, {RatPoly::one()}); }

TruncSeries TruncSeries::t(std::size_t order) {
    if (order == 0) return TruncSeries(0);
    return TruncSeries(order, {RatPoly{}, RatPoly::one()});
}

bool TruncSeries::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    std::vector<RatPoly> out(a.coeffs());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return TruncSeries(a.order(), std::move(out));
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    std::vector<RatPoly> out(a.coeffs());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
    return TruncSeries(a.order(), std::move(out));
}

TruncSeries series_scale(const TruncSeries& a, const RatPoly& c) {
    std::vector<RatPoly> out(a.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = poly_mul(a[k], c);
    return TruncSeries(a.order(), std::move(out));
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    const std::size_t n = a.order();
    std::vector<RatPoly> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += poly_mul(a[i], b[j]);
        }
    }
    return TruncSeries(n, std::move(out));
}

TruncSeries series_invert(const TruncSeries& f) {
    require_unit_constant(f, "series_invert");
    const std::size_t n = f.order();
    std::vector<RatPoly> b(n + 1);
    b[0] = RatPoly::one();
    for (std::size_t m = 1; m <= n; ++m) {
        RatPoly acc;
        for (std::size_t k = 1; k <= m; ++k) {
            if (f[k].is_zero() || b[m - k].is_zero()) continue;
            acc += poly_mul(f[k], b[m - k]);
        }
        b[m] = -acc;
    }
    return TruncSeries(n, std::move(b));
}

TruncSeries series_log(const TruncSeries& f) {
    require_unit_constant(f, "series_log");
    const std::size_t n = f.order();
    const TruncSeries z = f - TruncSeries::one(n);

    // z^k vanishes below t^k, so k <= n terms are exact at order n.
    TruncSeries result(n);
    TruncSeries power = z;
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational c(Integer(k % 2 == 1 ? 1 : -1), Integer(static_cast<unsigned long>(k)));
        result = result + series_scale(power, RatPoly::constant(c));
        if (k < n) power = power * z;
    }
    return result;
}

TruncSeries series_exp(const TruncSeries& f) {
    if (!f[0].is_zero()) {
        throw NonZeroConstantTerm("series_exp: constant term is " + to_string(f[0]));
    }
    const std::size_t n = f.order();
    TruncSeries result = TruncSeries::one(n);
    TruncSeries power = TruncSeries::one(n);
    Integer factorial = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * f;
        factorial *= static_cast<unsigned long>(k);
        result = result + series_scale(power, RatPoly::constant(Rational(Integer(1), factorial)));
    }
    return result;
}

TruncSeries series_shift(const TruncSeries& f, unsigned r) {
    if (r == 0) throw InvalidArgument("series_shift requires r >= 1");
    std::vector<RatPoly> out(f.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const std::size_t e = static_cast<std::size_t>(r - 1) * k * (k == 0 ? 0 : k - 1) / 2;
        out[k] = poly_shift_degree(f[k], e);
    }
    return TruncSeries(f.order(), std::move(out));
}

}  // namespace charvar
