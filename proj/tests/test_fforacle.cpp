#include "charvar/epoly.hpp"
#include "charvar/errors.hpp"
#include "charvar/fforacle.hpp"

#include <doctest.h>

#include <random>

using namespace charvar;
using namespace charvar::ff;

namespace {

Matrix mat(unsigned n, std::initializer_list<unsigned> entries) {
    Matrix m;
    m.n = n;
    std::size_t i = 0;
    for (unsigned e : entries) m.e[i++] = static_cast<FiniteField::Elem>(e);
    return m;
}

}  // namespace

TEST_CASE("fields") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 61u}) {
        const FiniteField f(q);
        CHECK(f.order() == q);
        for (unsigned a = 1; a < q; ++a) {
            const auto e = static_cast<FiniteField::Elem>(a);
            CHECK(f.mul(e, f.inv(e)) == 1);
        }
    }
    CHECK(FiniteField(9).characteristic() == 3);
    CHECK(FiniteField(8).characteristic() == 2);
    // y is a root of y^2 + y + 1 in F_4
    const FiniteField f4(4);
    CHECK(f4.add(f4.add(f4.mul(2, 2), 2), 1) == 0);
    CHECK_THROWS_AS(FiniteField(6), UnsupportedField);
    CHECK_THROWS_AS(FiniteField(16), UnsupportedField);
    CHECK_THROWS_AS(FiniteField(67), UnsupportedField);
    CHECK_THROWS_AS(f4.inv(0), DivisionByZero);
}

TEST_CASE("matrices") {
    const FiniteField f(3);
    const Matrix a = mat(2, {1, 2, 0, 1});
    CHECK(det(f, a) == 1);
    CHECK(mat_mul(f, a, inverse(f, a)) == Matrix::identity(2));
    CHECK(det(f, mat(2, {1, 2, 2, 1})) == 0);
    CHECK_THROWS_AS(inverse(f, mat(2, {1, 2, 2, 1})), DivisionByZero);
}

TEST_CASE("enumerate_gl") {
    CHECK(enumerate_gl(1, FiniteField(3)).size() == 2);
    CHECK(enumerate_gl(2, FiniteField(2)).size() == 6);
    CHECK(enumerate_gl(2, FiniteField(3)).size() == 48);
    CHECK(enumerate_gl(2, FiniteField(4)).size() == 180);
    CHECK(enumerate_gl(3, FiniteField(2)).size() == 168);
    CHECK(gl_order(3, 2) == 168);
    CHECK(gl_order(2, 9) == 5760);
    CHECK_THROWS_AS(enumerate_gl(3, FiniteField(7)), TooLarge);
    CHECK_THROWS_AS(enumerate_gl(5, FiniteField(2)), TooLarge);
}

TEST_CASE("is_abs_irreducible") {
    const FiniteField f2(2);
    std::vector<Matrix> one = {mat(1, {1}), mat(1, {1})};
    CHECK(is_abs_irreducible(f2, one));
    std::vector<Matrix> diag = {mat(2, {1, 0, 0, 1}), mat(2, {2, 0, 0, 1})};
    CHECK_FALSE(is_abs_irreducible(FiniteField(3), diag));
    std::vector<Matrix> perm_unip = {mat(2, {0, 1, 1, 0}), mat(2, {1, 1, 0, 1})};
    CHECK(is_abs_irreducible(f2, perm_unip));
    // single upper-triangular unipotent fixes a line
    std::vector<Matrix> unip = {mat(2, {1, 1, 0, 1}), mat(2, {1, 1, 0, 1})};
    CHECK_FALSE(is_abs_irreducible(f2, unip));
    // companion matrix of y^2 + y + 1: irreducible over F_2, not absolutely
    std::vector<Matrix> companion = {mat(2, {0, 1, 1, 1}), mat(2, {1, 0, 0, 1})};
    CHECK_FALSE(is_abs_irreducible(f2, companion));
}

TEST_CASE("is_abs_irreducible is conjugation invariant") {
    const FiniteField f(3);
    const auto gl = enumerate_gl(2, f);
    std::mt19937 rng(1);
    std::uniform_int_distribution<std::size_t> pick(0, gl.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const std::vector<Matrix> t = {gl[pick(rng)], gl[pick(rng)]};
        const Matrix g = gl[pick(rng)];
        const Matrix gi = inverse(f, g);
        const std::vector<Matrix> c = {mat_mul(f, mat_mul(f, g, t[0]), gi), mat_mul(f, mat_mul(f, g, t[1]), gi)};
        CHECK(is_abs_irreducible(f, t) == is_abs_irreducible(f, c));
    }
}

TEST_CASE("count_irr_classes") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const auto c = count_irr_classes(1, 3, FiniteField(q));
        CHECK(c.classes == (q - 1) * (q - 1) * (q - 1));
    }
    const auto c3 = count_irr_classes(2, 2, FiniteField(3));
    CHECK(c3.classes == 68);
    CHECK(c3.raw == 68 * 24);
    const auto c5 = count_irr_classes(2, 2, FiniteField(5), 4);
    CHECK(c5.classes == 1584);
    CHECK(count_irr_classes(2, 2, FiniteField(4), 1).raw == count_irr_classes(2, 2, FiniteField(4), 3).raw);
    CHECK_THROWS_AS(count_irr_classes(2, 4, FiniteField(5)), TooLarge);
}

TEST_CASE("verify") {
    const std::vector<unsigned> qs = {2, 3, 4};
    const auto report = verify(2, 2, qs);
    CHECK(report.status == OracleStatus::Pass);
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows) {
        CHECK(row.match);
        CHECK(row.symbolic == Integer(static_cast<unsigned long>(row.classes)));
    }
    CHECK(to_string(OracleStatus::Warning) == "warning");
}
