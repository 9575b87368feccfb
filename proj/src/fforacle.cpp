#include "charvar/fforacle.hpp"

#include "charvar/arith.hpp"
#include "charvar/epoly.hpp"
#include "charvar/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

namespace charvar::ff {

namespace {

using Elem = FiniteField::Elem;

struct Modulus {
    unsigned q, p, k;
    std::vector<unsigned> low;  // y^k = -sum low[i] y^i
};

const Modulus* find_modulus(unsigned q) {
    static const std::array<Modulus, 3> table{{
        {4, 2, 2, {1, 1}},     // y^2 + y + 1
        {8, 2, 3, {1, 1, 0}},  // y^3 + y + 1
        {9, 3, 2, {1, 0}},     // y^2 + 1
    }};
    for (const auto& m : table) {
        if (m.q == q) return &m;
    }
    return nullptr;
}

bool is_prime(unsigned v) {
    if (v < 2) return false;
    for (unsigned d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

std::vector<unsigned> digits(unsigned e, unsigned p, unsigned k) {
    std::vector<unsigned> out(k);
    for (unsigned i = 0; i < k; ++i) {
        out[i] = e % p;
        e /= p;
    }
    return out;
}

unsigned encode(const std::vector<unsigned>& ds, unsigned p) {
    unsigned e = 0;
    for (std::size_t i = ds.size(); i-- > 0;) e = e * p + ds[i];
    return e;
}

unsigned poly_mul_mod(unsigned a, unsigned b, const Modulus& m) {
    const auto da = digits(a, m.p, m.k);
    const auto db = digits(b, m.p, m.k);
    std::vector<unsigned> prod(2 * m.k - 1, 0);
    for (unsigned i = 0; i < m.k; ++i) {
        for (unsigned j = 0; j < m.k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % m.p;
    }
    for (std::size_t d = prod.size(); d-- > m.k;) {
        const unsigned c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < m.k; ++i) {
            const std::size_t idx = d - m.k + i;
            prod[idx] = (prod[idx] + (m.p - c) * m.low[i]) % m.p;
        }
    }
    prod.resize(m.k);
    return encode(prod, m.p);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
    const Modulus* modulus = find_modulus(q);
    if (!modulus && !(is_prime(q) && q < 64)) {
        throw UnsupportedField("F_" + std::to_string(q) + " is not supported (primes below 64, or 4, 8, 9)");
    }
    p_ = modulus ? modulus->p : q;

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            unsigned s, m;
            if (modulus) {
                auto da = digits(a, p_, modulus->k);
                const auto db = digits(b, p_, modulus->k);
                for (unsigned i = 0; i < modulus->k; ++i) da[i] = (da[i] + db[i]) % p_;
                s = encode(da, p_);
                m = poly_mul_mod(a, b, *modulus);
            } else {
                s = (a + b) % q;
                m = (a * b) % q;
            }
            add_[a * q + b] = static_cast<Elem>(s);
            mul_[a * q + b] = static_cast<Elem>(m);
        }
    }
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            if (add_[a * q + b] == 0) neg_[a] = static_cast<Elem>(b);
            if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
        }
    }
    if (q <= 9) verify_axioms();
}

Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(q_));
    return inv_[a];
}

void FiniteField::verify_axioms() const {
    auto fail = [this](const char* what) {
        throw std::logic_error("F_" + std::to_string(q_) + " violates " + what);
    };
    for (unsigned a = 0; a < q_; ++a) {
        const auto ea = static_cast<Elem>(a);
        if (add(ea, 0) != ea || mul(ea, 1) != ea) fail("identity");
        if (add(ea, neg(ea)) != 0) fail("additive inverse");
        if (a != 0 && mul(ea, inv_[a]) != 1) fail("multiplicative inverse");
        for (unsigned b = 0; b < q_; ++b) {
            const auto eb = static_cast<Elem>(b);
            if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea)) fail("commutativity");
            for (unsigned c = 0; c < q_; ++c) {
                const auto ec = static_cast<Elem>(c);
                if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) fail("additive associativity");
                if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) fail("multiplicative associativity");
                if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) fail("distributivity");
            }
        }
    }
}

Matrix Matrix::identity(unsigned n) {
    Matrix m;
    m.n = n;
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix mat_mul(const FiniteField& f, const Matrix& a, const Matrix& b) {
    Matrix c;
    c.n = a.n;
    for (unsigned i = 0; i < a.n; ++i) {
        for (unsigned j = 0; j < a.n; ++j) {
            Elem s = 0;
            for (unsigned k = 0; k < a.n; ++k) s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
            c.at(i, j) = s;
        }
    }
    return c;
}

Elem det(const FiniteField& f, const Matrix& m) {
    Matrix a = m;
    const unsigned n = a.n;
    Elem d = 1;
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (unsigned j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            d = f.neg(d);
        }
        const Elem pv = a.at(col, col);
        d = f.mul(d, pv);
        const Elem pinv = f.inv(pv);
        for (unsigned i = col + 1; i < n; ++i) {
            const Elem factor = f.mul(a.at(i, col), pinv);
            if (factor == 0) continue;
            for (unsigned j = col; j < n; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(col, j)));
        }
    }
    return d;
}

Matrix inverse(const FiniteField& f, const Matrix& m) {
    const unsigned n = m.n;
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw DivisionByZero("singular matrix has no inverse");
        for (unsigned j = 0; j < n; ++j) {
            std::swap(a.at(pivot, j), a.at(col, j));
            std::swap(inv.at(pivot, j), inv.at(col, j));
        }
        const Elem pinv = f.inv(a.at(col, col));
        for (unsigned j = 0; j < n; ++j) {
            a.at(col, j) = f.mul(a.at(col, j), pinv);
            inv.at(col, j) = f.mul(inv.at(col, j), pinv);
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == col) continue;
            const Elem factor = a.at(i, col);
            if (factor == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(col, j)));
                inv.at(i, j) = f.sub(inv.at(i, j), f.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

Integer gl_order(unsigned n, unsigned q) {
    Integer qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
    Integer order = 1;
    Integer qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

std::vector<Matrix> enumerate_gl(unsigned n, const FiniteField& f) {
    if (n == 0) throw InvalidArgument("enumerate_gl requires n >= 1");
    const unsigned q = f.order();
    const unsigned entries = n * n;
    // q^{n^2} <= 10^7 also bounds n by 4 for every q >= 2.
    if (n > kMaxDim || static_cast<double>(entries) * std::log10(static_cast<double>(q)) > 7.0 + 1e-12) {
        throw TooLarge("GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ") enumeration exceeds 10^7 matrices");
    }
    const std::uint64_t total = ipow(q, entries);

    std::vector<Matrix> out;
    Matrix m;
    m.n = n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (unsigned k = entries; k-- > 0;) {
            m.e[k] = static_cast<Elem>(v % q);
            v /= q;
        }
        if (det(f, m) != 0) out.push_back(m);
    }
    return out;
}

bool is_abs_irreducible(const FiniteField& f, std::span<const Matrix> tuple) {
    if (tuple.empty()) throw InvalidArgument("empty matrix tuple");
    const unsigned n = tuple[0].n;
    const unsigned dim = n * n;

    // Row-echelon basis of the span; each row is normalized at its pivot and
    // zero at the pivots of all earlier rows.
    std::vector<Matrix> basis;
    std::vector<unsigned> pivots;
    std::vector<Matrix> queue;

    auto insert = [&](Matrix v) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Elem c = v.e[pivots[i]];
            if (c == 0) continue;
            for (unsigned k = 0; k < dim; ++k) v.e[k] = f.sub(v.e[k], f.mul(c, basis[i].e[k]));
        }
        unsigned p = 0;
        while (p < dim && v.e[p] == 0) ++p;
        if (p == dim) return;
        const Elem inv = f.inv(v.e[p]);
        for (unsigned k = 0; k < dim; ++k) v.e[k] = f.mul(v.e[k], inv);
        basis.push_back(v);
        pivots.push_back(p);
        queue.push_back(v);
    };

    insert(Matrix::identity(n));
    for (std::size_t head = 0; head < queue.size() && basis.size() < dim; ++head) {
        const Matrix current = queue[head];
        for (const auto& g : tuple) {
            insert(mat_mul(f, current, g));
            if (basis.size() == dim) break;
        }
    }
    return basis.size() == dim;
}

IrrCount count_irr_classes(unsigned n, unsigned r, const FiniteField& f, unsigned threads) {
    if (r == 0) throw InvalidArgument("count_irr_classes requires r >= 1");
    const auto gl = enumerate_gl(n, f);
    const std::uint64_t size = gl.size();

    long double tuples = 1;
    for (unsigned i = 0; i < r; ++i) tuples *= static_cast<long double>(size);
    if (tuples > 1e9L) {
        throw TooLarge(std::to_string(r) + "-tuples in GL_" + std::to_string(n) + "(F_" + std::to_string(f.order()) +
                       ") exceed 10^9");
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, size));

    std::vector<std::uint64_t> partial(threads, 0);
    auto worker = [&](unsigned tid) {
        std::vector<Matrix> tuple(r);
        std::vector<std::uint64_t> idx(r, 0);
        std::uint64_t count = 0;
        for (std::uint64_t first = tid; first < size; first += threads) {
            tuple[0] = gl[first];
            std::fill(idx.begin() + 1, idx.end(), 0);
            for (unsigned i = 1; i < r; ++i) tuple[i] = gl[0];
            while (true) {
                if (is_abs_irreducible(f, tuple)) ++count;
                unsigned pos = r;
                while (pos-- > 1) {
                    if (++idx[pos] < size) {
                        tuple[pos] = gl[idx[pos]];
                        break;
                    }
                    idx[pos] = 0;
                    tuple[pos] = gl[0];
                }
                if (pos == 0 || r == 1) break;
            }
        }
        partial[tid] = count;
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    IrrCount out;
    for (auto c : partial) out.raw += c;
    out.pgl_order = gl_order(n, f.order()) / (f.order() - 1);
    const Integer raw(static_cast<unsigned long>(out.raw));
    if (raw % out.pgl_order != 0) {
        throw NonIntegerOrbitCount(std::to_string(out.raw) + " irreducible tuples is not a multiple of |PGL_" +
                                   std::to_string(n) + "(F_" + std::to_string(f.order()) + ")| = " +
                                   out.pgl_order.get_str());
    }
    out.classes = Integer(raw / out.pgl_order).get_ui();
    return out;
}

OracleReport verify(unsigned n, unsigned r, std::span<const unsigned> qs, unsigned threads) {
    OracleReport report;
    const RatPoly b = irreducible_epoly(n, r);
    std::map<unsigned, bool> mismatch_by_prime;
    for (unsigned q : qs) {
        const FiniteField field(q);
        const IrrCount count = count_irr_classes(n, r, field, threads);
        OracleRow row;
        row.n = n;
        row.r = r;
        row.q = q;
        row.raw = count.raw;
        row.classes = count.classes;
        const Rational value = poly_eval(b, Rational(q));
        if (value.get_den() != 1) throw NonIntegerResult("B_n^r(q) is not an integer: " + value.get_str());
        row.symbolic = value.get_num();
        row.match = row.symbolic == Integer(static_cast<unsigned long>(row.classes));
        if (!row.match) mismatch_by_prime[field.characteristic()] = true;
        report.rows.push_back(std::move(row));
    }
    for (const auto& [p, bad] : mismatch_by_prime) report.mismatched_primes.push_back(p);
    if (report.mismatched_primes.size() == 1) report.status = OracleStatus::Warning;
    if (report.mismatched_primes.size() >= 2) report.status = OracleStatus::Fail;
    return report;
}

std::string to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::Pass: return "pass";
        case OracleStatus::Warning: return "warning";
        case OracleStatus::Fail: return "fail";
    }
    return "?";
}

}  // namespace charvar::ff
