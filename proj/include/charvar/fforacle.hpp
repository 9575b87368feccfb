#pragma once

/**
 * @file fforacle.hpp
 * @brief Brute-force point counts of irreducible GL_n-character varieties over F_q.
 *
 * An r-tuple of invertible n x n matrices over F_q is absolutely irreducible
 * iff the unital algebra it generates is all of M_n(F_q). Such tuples have
 * scalar stabilizers, so PGL_n(F_q) acts freely on them and the number of
 * isomorphism classes is the raw count divided by |PGL_n(F_q)|. That number
 * must agree with B_n^r(q), which is what verify() checks.
 */

#include "charvar/poly.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charvar::ff {

/// F_q for q prime (< 64) or q in {4, 8, 9}. Prime powers use
///   F_4 = F_2[y]/(y^2 + y + 1), F_8 = F_2[y]/(y^3 + y + 1), F_9 = F_3[y]/(y^2 + 1)
/// with elements encoded as base-p digit strings of their coefficients.
class FiniteField {
public:
    using Elem = std::uint8_t;

    /// Throws UnsupportedField. For q <= 9 the field axioms are checked
    /// exhaustively on construction.
    explicit FiniteField(unsigned q);

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    /// Throws DivisionByZero for 0.
    Elem inv(Elem a) const;

private:
    void verify_axioms() const;

    unsigned q_;
    unsigned p_;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

constexpr unsigned kMaxDim = 4;

struct Matrix {
    unsigned n = 0;
    std::array<FiniteField::Elem, kMaxDim * kMaxDim> e{};

    FiniteField::Elem& at(unsigned i, unsigned j) { return e[i * n + j]; }
    FiniteField::Elem at(unsigned i, unsigned j) const { return e[i * n + j]; }

    static Matrix identity(unsigned n);
    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix mat_mul(const FiniteField& f, const Matrix& a, const Matrix& b);
FiniteField::Elem det(const FiniteField& f, const Matrix& m);
/// Throws DivisionByZero for a singular matrix.
Matrix inverse(const FiniteField& f, const Matrix& m);

/// prod_{i<n} (q^n - q^i)
Integer gl_order(unsigned n, unsigned q);

/// All invertible n x n matrices in lexicographic order of their entries.
/// Throws TooLarge unless q^{n^2} <= 10^7 (which also forces n <= 4).
std::vector<Matrix> enumerate_gl(unsigned n, const FiniteField& f);

/// Burnside closure: true iff the tuple's words span all n^2 dimensions.
bool is_abs_irreducible(const FiniteField& f, std::span<const Matrix> tuple);

struct IrrCount {
    std::uint64_t raw = 0;     ///< absolutely irreducible r-tuples
    Integer pgl_order;         ///< |GL_n(F_q)| / (q - 1)
    std::uint64_t classes = 0; ///< raw / pgl_order
};

/// Enumerates GL_n(F_q)^r. threads == 0 means hardware concurrency; the
/// result does not depend on the thread count. Throws TooLarge when the
/// tuple space exceeds 10^9, NonIntegerOrbitCount if raw is not divisible.
IrrCount count_irr_classes(unsigned n, unsigned r, const FiniteField& f, unsigned threads = 1);

struct OracleRow {
    unsigned n = 0, r = 0, q = 0;
    std::uint64_t raw = 0;
    std::uint64_t classes = 0;
    Integer symbolic;  ///< B_n^r(q)
    bool match = false;
};

enum class OracleStatus { Pass, Warning, Fail };

struct OracleReport {
    std::vector<OracleRow> rows;
    OracleStatus status = OracleStatus::Pass;
    /// Characteristics at which some row mismatched.
    std::vector<unsigned> mismatched_primes;
};

/// Counts for every q and compares against B_n^r(q). A mismatch at a single
/// characteristic is a warning; two or more is a failure.
OracleReport verify(unsigned n, unsigned r, std::span<const unsigned> qs, unsigned threads = 1);

std::string to_string(OracleStatus s);

}  // namespace charvar::ff
