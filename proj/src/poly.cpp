#include "charvar/poly.hpp"

#include "charvar/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace charvar {

namespace {

Integer common_denominator(const std::vector<Rational>& cs) {
    Integer d = 1;
    for (const auto& c : cs) {
        if (c.get_den() != 1) {
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    return d;
}

std::vector<Integer> scaled_numerators(const std::vector<Rational>& cs, const Integer& den) {
    std::vector<Integer> out(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (den == 1) {
            out[i] = cs[i].get_num();
        } else {
            Integer f = den / cs[i].get_den();
            out[i] = cs[i].get_num() * f;
        }
    }
    return out;
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly RatPoly::from_ints(std::initializer_list<long> ascending) {
    std::vector<Rational> cs;
    cs.reserve(ascending.size());
    for (long v : ascending) cs.emplace_back(v);
    return RatPoly(std::move(cs));
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> cs(degree + 1);
    cs[degree] = c;
    return RatPoly(std::move(cs));
}

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RatPoly::leading() const {
    if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool RatPoly::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<Integer> RatPoly::integer_coeffs() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].get_den() != 1) {
            throw NonIntegerResult("coefficient of x^" + std::to_string(i) + " is " + coeffs_[i].get_str());
        }
        out.push_back(coeffs_[i].get_num());
    }
    return out;
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    *this = poly_mul(*this, o);
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
RatPoly operator-(RatPoly a) { return a *= Rational(-1); }
RatPoly operator*(const RatPoly& a, const RatPoly& b) { return poly_mul(a, b); }
RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Integer da = common_denominator(a.coeffs());
    const Integer db = common_denominator(b.coeffs());
    const auto ia = scaled_numerators(a.coeffs(), da);
    const auto ib = scaled_numerators(b.coeffs(), db);

    std::vector<Integer> acc(ia.size() + ib.size() - 1);
    for (std::size_t i = 0; i < ia.size(); ++i) {
        if (ia[i] == 0) continue;
        for (std::size_t j = 0; j < ib.size(); ++j) {
            mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
        }
    }

    const Integer den = da * db;
    std::vector<Rational> out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        out[k] = Rational(acc[k], den);
    }
    return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (num.degree() < den.degree()) return {RatPoly{}, num};

    std::vector<Rational> rem = num.coeffs();
    const std::size_t dd = static_cast<std::size_t>(den.degree());
    const std::size_t qd = rem.size() - 1 - dd;
    std::vector<Rational> quot(qd + 1);
    const Rational inv_lead = 1 / den.leading();

    for (std::size_t k = qd + 1; k-- > 0;) {
        const Rational c = rem[k + dd] * inv_lead;
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[k + j] -= c * den.coeffs()[j];
        }
    }
    rem.resize(dd);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly poly_exact_div(const RatPoly& num, const RatPoly& den) {
    auto [q, r] = poly_divmod(num, den);
    if (!r.is_zero()) {
        throw NotDivisible("(" + to_string(num) + ") / (" + to_string(den) + ") leaves remainder " + to_string(r));
    }
    return q;
}

RatPoly poly_substitute_power(const RatPoly& p, unsigned h) {
    if (h == 0) throw InvalidArgument("substitute_power requires h >= 1");
    if (h == 1 || p.is_zero()) return p;
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()) * h + 1);
    for (std::size_t i = 0; i < p.size(); ++i) out[i * h] = p.coeffs()[i];
    return RatPoly(std::move(out));
}

Rational poly_eval(const RatPoly& p, const Rational& v) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * v + p.coeffs()[i];
    }
    return acc;
}

RatPoly poly_shift_degree(const RatPoly& p, std::size_t k) {
    if (k == 0 || p.is_zero()) return p;
    std::vector<Rational> out(p.size() + k);
    std::copy(p.coeffs().begin(), p.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return RatPoly(std::move(out));
}

RatPoly pow(const RatPoly& p, unsigned e) {
    RatPoly result = RatPoly::one();
    RatPoly base = p;
    while (e > 0) {
        if (e & 1u) result = poly_mul(result, base);
        e >>= 1;
        if (e > 0) base = poly_mul(base, base);
    }
    return result;
}

RatPoly poly_taylor_shift(const RatPoly& p, const Rational& c) {
    // Repeated synthetic division by (x - c).
    std::vector<Rational> a = p.coeffs();
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) {
            a[j - 1] += c * a[j];
        }
    }
    return RatPoly(std::move(a));
}

std::string to_string(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const Rational& c = p.coeffs()[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        const bool unit = mag == 1;
        if (i == 0 || !unit) {
            if (mag.get_den() != 1 && i > 0) {
                os << "(" << mag.get_str() << ")";
            } else {
                os << mag.get_str();
            }
        }
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << to_string(p); }

}  // namespace charvar
