#include "charvar/acceptance.hpp"

#include "charvar/arith.hpp"
#include "charvar/epoly.hpp"
#include "charvar/errors.hpp"
#include "charvar/fforacle.hpp"
#include "charvar/partitions.hpp"
#include "charvar/plethystic.hpp"
#include "charvar/reference_formulas.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

namespace charvar {

namespace {

// Collects failures; the detail keeps the first few and a count.
class Tally {
public:
    void check(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (ok) return;
        if (failures_.size() < 4) failures_.push_back(what());
        ++failed_;
    }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream os;
        if (failed_ == 0) {
            os << checks_ << " checks";
            return os.str();
        }
        os << failed_ << "/" << checks_ << " checks failed";
        for (const auto& f : failures_) os << "; " << f;
        return os.str();
    }

private:
    std::size_t checks_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

using Detail = std::pair<bool, std::string>;

Integer ipow(long b, unsigned e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), Integer(b).get_mpz_t(), e);
    return out;
}

StratumQuery query(GroupKind g, unsigned n, unsigned r, std::optional<Partition> m = std::nullopt) {
    StratumQuery q;
    q.group = g;
    q.n = n;
    q.r = r;
    q.stratum = std::move(m);
    return q;
}

Partition rectangle(unsigned n, unsigned d) {
    std::vector<unsigned> mult(n, 0);
    mult[d - 1] = n / d;
    return Partition(n, std::move(mult));
}

std::string where(unsigned n, unsigned r) { return "n=" + std::to_string(n) + " r=" + std::to_string(r); }

Detail cross_path() {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    for (unsigned r = 2; r <= 4; ++r) {
        const auto series = b_poly_series(6, r);
        for (unsigned n = 1; n <= 6; ++n) {
            const RatPoly closed = b_poly_closed(n, r);
            t.check(closed == series[n - 1], [&] {
                const auto d = reference::first_difference(closed, series[n - 1]);
                return where(n, r) + " " + (d ? d->describe() : std::string("?"));
            });
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(secs < 60, [&] { return "took " + std::to_string(secs) + " s"; });
    return {t.ok(), t.summary()};
}

Detail golden_irreducible() {
    Tally t;
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned r = 2; r <= 5; ++r) {
            const RatPoly ref = reference::irreducible_closed_form(n, static_cast<int>(r) - 1);
            const RatPoly got = irreducible_epoly(n, r);
            t.check(ref == got, [&] {
                return "B_" + std::to_string(n) + " " + where(n, r) + " " +
                       reference::first_difference(ref, got)->describe();
            });
        }
    }
    return {t.ok(), t.summary()};
}

Detail golden_sl(unsigned n, const reference::Sum& formula, int s_max) {
    Tally t;
    for (int s = 1; s <= s_max; ++s) {
        const RatPoly ref = reference::evaluate(formula, s);
        const RatPoly got = e_group(query(GroupKind::SL, n, static_cast<unsigned>(s) + 1));
        t.check(ref == got, [&] {
            return "s=" + std::to_string(s) + " " + reference::first_difference(ref, got)->describe();
        });
    }
    return {t.ok(), t.summary()};
}

Detail degree_normalization() {
    Tally t;
    for (unsigned r = 2; r <= 4; ++r) {
        for (unsigned n = 1; n <= 8; ++n) {
            const RatPoly b = irreducible_epoly(n, r);
            const long want = static_cast<long>(n * n * (r - 1) + 1);
            t.check(b.degree() == want, [&] {
                return where(n, r) + " degree " + std::to_string(b.degree()) + " != " + std::to_string(want);
            });
            t.check(!b.is_zero() && b.leading() == 1, [&] { return where(n, r) + " leading coefficient != 1"; });
            t.check(poly_eval(b, 1) == 0, [&] { return where(n, r) + " B(1) != 0"; });
        }
    }
    return {t.ok(), t.summary()};
}

Detail divisibility() {
    Tally t;
    const RatPoly x_minus_1 = RatPoly::from_ints({-1, 1});
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned r = 1; r <= 4; ++r) {
            for (const auto& m : enumerate_partitions(n)) {
                const RatPoly gl = e_gl_stratum(n, r, m);
                const auto [quot, rem] = poly_divmod(gl, pow(x_minus_1, r));
                const std::string tag = where(n, r) + " [" + m.to_string() + "]";
                t.check(rem.is_zero(), [&] { return tag + " not divisible by (x-1)^r"; });
                t.check(gl.is_integral(), [&] { return tag + " dividend not integral"; });
                t.check(quot.is_integral(), [&] { return tag + " quotient not integral"; });
            }
        }
    }
    return {t.ok(), t.summary()};
}

Detail pexp_identity() {
    Tally t;
    constexpr unsigned N = 6;
    for (unsigned r = 1; r <= 4; ++r) {
        std::vector<RatPoly> b(N + 1), e(N + 1);
        e[0] = RatPoly::one();
        const auto bs = b_poly_series(N, r);
        for (unsigned n = 1; n <= N; ++n) {
            b[n] = bs[n - 1];
            e[n] = e_gl_total(n, r);
        }
        const TruncSeries lhs(N, std::move(e));
        const TruncSeries rhs = pexp(TruncSeries(N, std::move(b)));
        for (unsigned n = 0; n <= N; ++n) {
            t.check(lhs[n] == rhs[n], [&] {
                return "r=" + std::to_string(r) + " t^" + std::to_string(n) + " " +
                       reference::first_difference(rhs[n], lhs[n])->describe();
            });
        }
    }
    return {t.ok(), t.summary()};
}

Detail euler_characteristics() {
    Tally t;
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned r = 2; r <= 5; ++r) {
            const Integer total = euler_char(query(GroupKind::SL, n, r));
            const Integer want_total = Integer(static_cast<unsigned long>(totient(n))) * ipow(n, r - 2);
            t.check(total == want_total, [&] {
                return where(n, r) + " chi(SL) = " + total.get_str() + ", expected " + want_total.get_str();
            });

            for (const auto& m : enumerate_partitions(n)) {
                const std::string tag = where(n, r) + " [" + m.to_string() + "]";
                Rational want = 0;
                for (auto d64 : divisors(n)) {
                    const auto d = static_cast<unsigned>(d64);
                    if (m == rectangle(n, d)) want = ratio(Integer(moebius(d)) * ipow(n, r - 1), Integer(d));
                }
                const Integer sl = euler_char(query(GroupKind::SL, n, r, m));
                t.check(sl == want, [&] {
                    return tag + " chi(SL) = " + sl.get_str() + ", expected " + want.get_str();
                });
                const Integer gl = euler_char(query(GroupKind::GL, n, r, m));
                t.check(gl == 0, [&] { return tag + " chi(GL) = " + gl.get_str(); });
            }
        }
    }
    return {t.ok(), t.summary()};
}

Detail examples_n4_and_primes() {
    Tally t;
    auto expect = [&](unsigned n, unsigned r, std::optional<Partition> m, const Integer& want) {
        const std::string tag = where(n, r) + (m ? " [" + m->to_string() + "]" : std::string(" total"));
        const Integer got = euler_char(query(GroupKind::SL, n, r, std::move(m)));
        t.check(got == want, [&] { return tag + " chi = " + got.get_str() + ", expected " + want.get_str(); });
    };
    for (unsigned r = 2; r <= 5; ++r) {
        expect(4, r, rectangle(4, 1), ipow(4, r - 1));
        expect(4, r, rectangle(4, 2), -2 * ipow(4, r - 2));
        expect(4, r, std::nullopt, 2 * ipow(4, r - 2));
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            expect(p, r, rectangle(p, 1), ipow(p, r - 1));
            expect(p, r, rectangle(p, p), -ipow(p, r - 2));
        }
    }
    return {t.ok(), t.summary()};
}

Detail finite_field_oracle(unsigned threads) {
    struct Case {
        unsigned n, r;
        std::vector<unsigned> qs;
    };
    const std::vector<Case> cases = {
        {1, 2, {2, 3, 4, 5, 7}},
        {2, 2, {2, 3, 4, 5}},
        {2, 3, {2, 3}},
        {3, 2, {2}},
    };
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::vector<std::string> warnings;
    for (const auto& c : cases) {
        const auto report = ff::verify(c.n, c.r, c.qs, threads);
        for (const auto& row : report.rows) {
            if (row.match) continue;
            const std::string msg = where(c.n, c.r) + " q=" + std::to_string(row.q) + " count " +
                                    std::to_string(row.classes) + " vs B(q) " + row.symbolic.get_str();
            if (report.status == ff::OracleStatus::Warning) warnings.push_back("warning: " + msg);
        }
        t.check(report.status != ff::OracleStatus::Fail, [&] {
            std::string msg = where(c.n, c.r) + " mismatches at characteristics";
            for (unsigned p : report.mismatched_primes) msg += " " + std::to_string(p);
            return msg;
        });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(secs < 600, [&] { return "took " + std::to_string(secs) + " s"; });
    std::string detail = t.summary();
    for (const auto& w : warnings) detail += "; " + w;
    return {t.ok(), detail};
}

TruncSeries random_series(std::mt19937& rng, unsigned order, bool unit) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, 3);
    std::vector<RatPoly> cs(order + 1);
    cs[0] = unit ? RatPoly::one() : RatPoly();
    for (unsigned k = 1; k <= order; ++k) {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = coeff(rng);
        cs[k] = RatPoly(std::move(c));
    }
    return TruncSeries(order, std::move(cs));
}

Detail plethystic_properties() {
    constexpr unsigned N = 8;
    constexpr int cases = 200;
    std::mt19937 rng(20240611u);
    Tally t;
    for (int i = 0; i < cases; ++i) {
        const TruncSeries f = random_series(rng, N, false);
        const TruncSeries g = random_series(rng, N, false);
        const TruncSeries u = random_series(rng, N, true);
        const std::string tag = "case " + std::to_string(i);
        t.check(plog(pexp(f)) == f, [&] { return tag + " plog(pexp f) != f"; });
        t.check(pexp(plog(u)) == u, [&] { return tag + " pexp(plog u) != u"; });
        t.check(pexp(f + g) == pexp(f) * pexp(g), [&] { return tag + " pexp(f+g) != pexp f * pexp g"; });
        t.check(adams_inverse(adams(f)) == f, [&] { return tag + " adams_inverse(adams f) != f"; });
        t.check(adams(adams_inverse(f)) == f, [&] { return tag + " adams(adams_inverse f) != f"; });
        t.check(plog(u) == plog_closed(u), [&] { return tag + " plog u != plog_closed u"; });
    }
    return {t.ok(), t.summary()};
}

struct Criterion {
    const char* name;
    std::function<Detail(unsigned)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {"cross-path B_n^r, n<=6, r in 2..4", [](unsigned) { return cross_path(); }},
        {"golden B_1..B_4, r in 2..5", [](unsigned) { return golden_irreducible(); }},
        {"golden SL_3, s in 1..4", [](unsigned) { return golden_sl(3, reference::sl3_formula(), 4); }},
        {"golden SL_4, s in 1..2", [](unsigned) { return golden_sl(4, reference::sl4_formula(), 2); }},
        {"degree and normalization, n<=8, r in 2..4", [](unsigned) { return degree_normalization(); }},
        {"divisibility and integrality, n<=6, r<=4", [](unsigned) { return divisibility(); }},
        {"PExp identity to t^6, r<=4", [](unsigned) { return pexp_identity(); }},
        {"Euler characteristics, n<=8, r in 2..5", [](unsigned) { return euler_characteristics(); }},
        {"n=4 and prime-n strata", [](unsigned) { return examples_n4_and_primes(); }},
        {"finite-field oracle", [](unsigned threads) { return finite_field_oracle(threads); }},
        {"plethystic properties, 200 cases, order 8", [](unsigned) { return plethystic_properties(); }},
    };
    return all;
}

}  // namespace

CriterionResult run_criterion(int id, unsigned threads) {
    if (id < 1 || id > kCriterionCount) throw InvalidArgument("no criterion " + std::to_string(id));
    const Criterion& crit = criteria()[static_cast<std::size_t>(id - 1)];
    CriterionResult out;
    out.id = id;
    out.name = crit.name;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto [pass, detail] = crit.run(threads);
        out.pass = pass;
        out.detail = std::move(detail);
    } catch (const Error& e) {
        out.pass = false;
        out.detail = e.name() + ": " + e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<CriterionResult> run_acceptance(unsigned threads) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, threads));
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << std::fixed << std::setprecision(2)
       << r.seconds << " s): " << r.detail;
    return os.str();
}

}  // namespace charvar
