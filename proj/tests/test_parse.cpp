#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "birkit/families.hpp"
#include "birkit/parse.hpp"

using namespace birkit;

namespace {
const FieldSpec QQf{FieldTag::QQ, 0, 0};
const FieldSpec RRf{FieldTag::RR, 0, 0};
const FieldSpec CCf{FieldTag::CC, 0, 0};
const FieldSpec Q3f{FieldTag::Qp, 3, 12};
}  // namespace

TEST_CASE("the standard involution literal") {
    auto lit = parse_map("[x1*x2 : x0*x2 : x0*x1]", QQf);
    CHECK(lit.n() == 2);
    CHECK(lit.degree() == 2);
    CHECK(std::get<RatMapTuple>(lit.tuple) == sigma_involution().tuple());
}

TEST_CASE("family member with fractional coefficient") {
    auto lit = parse_map("[x0^2 : x0*x1 + 1/3*x2^2 : x0*x2]", QQf);
    CHECK(std::get<RatMapTuple>(lit.tuple) == pointwise_failure_map(Rat(1, 3)).tuple());
}

TEST_CASE("arity errors carry the variable") {
    CHECK_THROWS_AS(parse_map("[x0 : x1 + x2]", QQf), UnknownVariable);
    CHECK_THROWS_AS(parse_map("[x0]", QQf), SyntaxError);
}

TEST_CASE("homogeneity and degree mismatches are rejected") {
    CHECK_THROWS_AS(parse_map("[x0 + x0*x1 : x1]", QQf), NonHomogeneous);
    CHECK_THROWS_AS(parse_map("[x0*x0 : x1]", QQf), MixedDegrees);
    CHECK_THROWS_AS(parse_map("[0 : 0]", QQf), ZeroTuple);
}

TEST_CASE("syntax errors report the offset") {
    try {
        parse_map("[x0 : x1 + ]", QQf);
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.position == 11);
    }
    CHECK_THROWS_AS(parse_map("x0 : x1", QQf), SyntaxError);
    CHECK_THROWS_AS(parse_map("[x0 : x1", QQf), SyntaxError);
    CHECK_THROWS_AS(parse_map("[x0 : x1] extra", QQf), SyntaxError);
}

TEST_CASE("decimals parse exactly over the rationals") {
    auto lit = parse_map("[0.25*x0 : x1]", QQf);
    const auto& t = std::get<RatMapTuple>(lit.tuple);
    CHECK(t.component(0).terms().begin()->second == Rat(1, 4));

    auto lit2 = parse_map("[2.5e-1*x0 : x1]", QQf);
    CHECK(std::get<RatMapTuple>(lit2.tuple).component(0).terms().begin()->second == Rat(1, 4));
}

TEST_CASE("complex literals") {
    auto lit = parse_map("[(1+2i)*x0 : x1]", CCf);
    const auto& t = std::get<CxMapTuple>(lit.tuple);
    CHECK(std::abs(t.component(0).terms().begin()->second - Cx{1, 2}) < 1e-15);
    CHECK_THROWS_AS(parse_map("[(1+2i)*x0 : x1]", RRf), SyntaxError);
    auto lit2 = parse_map("[i*x0 : x1]", CCf);
    CHECK(std::abs(std::get<CxMapTuple>(lit2.tuple).component(0).terms().begin()->second -
                   Cx{0, 1}) < 1e-15);
}

TEST_CASE("p-adic literals are plain arithmetic") {
    auto lit = parse_map("[3^2*(1 + 2*3)*x0 : x1]", Q3f);
    const auto& t = std::get<MapTuple<PadicDomain>>(lit.tuple);
    const Padic& c = t.component(0).terms().begin()->second;
    CHECK(c.valuation() == 2);
    CHECK(c.digits()[0] == 1);
    CHECK(c.digits()[1] == 2);

    auto lit2 = parse_map("[3^-1*(2)*x0 : x1]", Q3f);
    CHECK(std::get<MapTuple<PadicDomain>>(lit2.tuple)
              .component(0)
              .terms()
              .begin()
              ->second.valuation() == -1);
}

TEST_CASE("round trips on the corpus of scenario maps") {
    std::vector<std::string> corpus{
        "[x1*x2 : x0*x2 : x0*x1]",
        "[x0^2 : x0*x1 + 1/3*x2^2 : x0*x2]",
        "[x0^2 : x0*x1 : x0*x2 + 1/4*x1^2]",
        "[x0 + 1/5*x1 : x1 : x2]",
        "[2/5*x0^2 + x0*x1 : 2/5*x0*x1 + x1^2 : 2/5*x0*x2 + x1*x2 + 1/7*x0*x1]",
    };
    for (const auto& text : corpus) {
        auto lit = parse_map(text, QQf);
        auto printed = print_map(lit.tuple);
        auto reparsed = parse_map(printed, QQf);
        CHECK(std::get<RatMapTuple>(lit.tuple) == std::get<RatMapTuple>(reparsed.tuple));
        // printing is a fixed point
        CHECK(print_map(reparsed.tuple) == printed);
    }
}

TEST_CASE("round trips over the float and p-adic fields") {
    for (auto field : {RRf, CCf}) {
        auto lit = parse_map("[0.5*x0^2 : x0*x1 - 0.125*x2^2 : x0*x2]", field);
        auto printed = print_map(lit.tuple);
        auto reparsed = parse_map(printed, field);
        CHECK(print_map(reparsed.tuple) == printed);
    }
    auto lit = parse_map("[x0 + 9*x1 : x1]", Q3f);
    auto printed = print_map(lit.tuple);
    auto reparsed = parse_map(printed, Q3f);
    CHECK(print_map(reparsed.tuple) == printed);
}

TEST_CASE("field specs parse and print") {
    CHECK(FieldSpec::parse("QQ").tag == FieldTag::QQ);
    CHECK(FieldSpec::parse("Qp:5:8").p == 5);
    CHECK(FieldSpec::parse("Qp:5:8").str() == "Qp:5:8");
    CHECK_THROWS_AS(FieldSpec::parse("ZZ"), BadParams);
    CHECK_THROWS_AS(FieldSpec::parse("Qp:4:8"), BadParams);
}

TEST_CASE("points parse in every field") {
    auto p = parse_point("[0 : 1 : 1]", QQf);
    CHECK(std::get<PointVec<RationalDomain>>(p)[2] == Rat(1));
    auto pc = parse_point("[1+1i : 0 : -2]", CCf);
    CHECK(std::abs(std::get<PointVec<ComplexDomain>>(pc)[0] - Cx{1, 1}) < 1e-15);
}
