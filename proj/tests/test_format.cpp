#include "charvar/errors.hpp"
#include "charvar/format.hpp"
#include "charvar/partitions.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace charvar;

namespace {

StratumQuery query(GroupKind g, unsigned n, unsigned r, std::optional<Partition> m = std::nullopt) {
    StratumQuery q;
    q.group = g;
    q.n = n;
    q.r = r;
    q.stratum = std::move(m);
    return q;
}

}  // namespace

TEST_CASE("json schema") {
    const auto rec = compute_record(query(GroupKind::SL, 2, 2, Partition::single(2)));
    const auto j = nlohmann::json::parse(to_json(rec));
    CHECK(j["group"] == "sl");
    CHECK(j["n"] == 2);
    CHECK(j["r"] == 2);
    CHECK(j["stratum"] == "2");
    CHECK(j["variable"] == "x");
    CHECK(j["coefficients"] == nlohmann::json::array({-1, 0, -1, 1}));
    CHECK(j["degree"] == 3);
    CHECK(j["euler_char"] == -1);
    CHECK(j.size() == 8);

    const auto whole = nlohmann::json::parse(to_json(compute_record(query(GroupKind::GL, 1, 3))));
    CHECK_FALSE(whole.contains("stratum"));
    CHECK(whole["coefficients"] == nlohmann::json::array({-1, 3, -3, 1}));
    CHECK(whole["euler_char"] == 0);
}

TEST_CASE("csv") {
    const auto rec = compute_record(query(GroupKind::SL, 4, 3, Partition(4, {2, 1, 0, 0})));
    const std::string row = to_csv_row(rec);
    CHECK(row.rfind("sl,4,3,1^2 2,", 0) == 0);
    CHECK(coefficients_from_csv_row(row) == rec.coefficients);
    CHECK(csv_header() == "group,n,r,stratum,degree,euler_char,coefficients");
    CHECK_THROWS_AS(coefficients_from_csv_row("gl,1,1"), SyntaxError);
}

TEST_CASE("latex") {
    CHECK(to_latex(RatPoly::from_ints({-1, 3, -3, 1})) == "(x-1)^{3}");
    CHECK(to_latex(RatPoly::from_ints({-1, 0, 1})) == "(x-1)^{2} + 2(x-1)");
    CHECK(to_latex(RatPoly::from_ints({1})) == "1");
    CHECK(to_latex(RatPoly()) == "0");
    CHECK(to_latex(RatPoly::from_ints({0, -1})) == "-(x-1) - 1");
    CHECK(poly_from_latex("(x-1)^{2} + 2(x-1)") == RatPoly::from_ints({-1, 0, 1}));
    CHECK(poly_from_latex("\\frac{1}{2}(x-1) - 3") == RatPoly({ratio(-7, 2), ratio(1, 2)}));
    CHECK_THROWS_AS(poly_from_latex("(x-1)^{"), SyntaxError);
    CHECK_THROWS_AS(poly_from_latex(""), SyntaxError);
}

TEST_CASE("lossless formats round-trip") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> deg(0, 30), coeff(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        EpolyRecord rec;
        rec.group = GroupKind::PGL;
        rec.n = 3;
        rec.r = 2;
        rec.coefficients.resize(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& c : rec.coefficients) c = Integer(coeff(rng)) * Integer("123456789012345678901234567890");
        if (rec.coefficients.back() == 0) rec.coefficients.back() = 1;
        CHECK(coefficients_from_json(to_json(rec)) == rec.coefficients);
        CHECK(coefficients_from_csv_row(to_csv_row(rec)) == rec.coefficients);
        CHECK(poly_from_latex(to_latex(rec.poly())).integer_coeffs() == rec.coefficients);
    }
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned r = 1; r <= 3; ++r) {
            const auto rec = compute_record(query(GroupKind::GL, n, r));
            CHECK(poly_from_latex(to_latex(rec.poly())) == rec.poly());
        }
    }
}

TEST_CASE("render") {
    const std::vector<EpolyRecord> one{compute_record(query(GroupKind::SL, 2, 2))};
    CHECK(render(one, OutputFormat::Human) == "x^3\n");
    CHECK(render_euler(one, OutputFormat::Human) == "1\n");
    const std::vector<EpolyRecord> two{compute_record(query(GroupKind::GL, 1, 1)),
                                       compute_record(query(GroupKind::GL, 1, 2))};
    CHECK(render(two, OutputFormat::Human) == "gl n=1 r=1: x - 1\ngl n=1 r=2: x^2 - 2x + 1\n");
    const auto arr = nlohmann::json::parse(render(two, OutputFormat::Json));
    CHECK(arr.size() == 2);
    CHECK(render(two, OutputFormat::Csv).find("gl,1,2,,2,0,1;-2;1\n") != std::string::npos);
    CHECK(parse_format("latex") == OutputFormat::Latex);
    CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}
