#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "birkit/cartan.hpp"
#include "test_support.hpp"

using namespace birkit;
using namespace birkit::testing;

namespace {
ComplexDomain CCd;

ChartMap identity_chart() {
    auto Z1 = CxPoly::variable(CCd, 2, 0);
    auto Z2 = CxPoly::variable(CCd, 2, 1);
    return ChartMap::from_polynomials({Z1, Z2}, {Cx{0, 0}, Cx{0, 0}}, 1.0);
}

ChartMap linear_involution_chart() {
    auto Z1 = CxPoly::variable(CCd, 2, 0);
    auto Z2 = CxPoly::variable(CCd, 2, 1);
    return ChartMap::from_polynomials({-Z1, Z2}, {Cx{0, 0}, Cx{0, 0}}, 1.0);
}

// (z1 + z2^2/m, z2): the chart of the shrinking-coefficient family.
ChartMap parabolic_chart(int m) {
    auto Z1 = CxPoly::variable(CCd, 2, 0);
    auto Z2 = CxPoly::variable(CCd, 2, 1);
    return ChartMap::from_polynomials({Z1 + (Z2 * Z2).scalar_mul(Cx{1.0 / m, 0}), Z2},
                                      {Cx{0, 0}, Cx{0, 0}}, 1.0);
}
}  // namespace

TEST_CASE("invariant body of the identity is the full sampled ball") {
    auto body = build_body(identity_chart(), 1, 0.5, 1.0);
    REQUIRE(std::holds_alternative<InvariantBody>(body));
    const auto& b = std::get<InvariantBody>(body);
    CHECK(b.invariance_residual == 0.0);
    CHECK(b.order_residual == 0.0);
    CHECK(!b.members.empty());
}

TEST_CASE("the linear involution is an isometry with a clean body") {
    auto body = build_body(linear_involution_chart(), 2, 0.5, 1.0);
    REQUIRE(std::holds_alternative<InvariantBody>(body));
    const auto& b = std::get<InvariantBody>(body);
    CHECK(b.invariance_residual == 0.0);
    CHECK(b.order_residual < 1e-14);
}

TEST_CASE("the parabolic chart is refused: it is not of order 2") {
    auto body = build_body(parabolic_chart(4), 2, 0.5, 1.0);
    REQUIRE(std::holds_alternative<BodyRefusal>(body));
    CHECK(std::get<BodyRefusal>(body).reason == BodyRefusalReason::NotOrderD);
}

TEST_CASE("fixed points are located inside the body") {
    auto idc = identity_chart();
    auto body = std::get<InvariantBody>(build_body(idc, 1, 0.5, 1.0));
    auto fp = find_fixed_point(idc, body);
    REQUIRE(fp.found);
    CHECK(fp.residual < 1e-10);

    auto inv = linear_involution_chart();
    auto body2 = std::get<InvariantBody>(build_body(inv, 2, 0.5, 1.0));
    auto fp2 = find_fixed_point(inv, body2);
    REQUIRE(fp2.found);
    // fixed locus is {z1 = 0}
    CHECK(std::abs(fp2.point[0]) < 1e-9);

    // (z1 + z2^2/m, z2) fixes exactly {z2 = 0}.
    auto par = parabolic_chart(4);
    auto body3 = std::get<InvariantBody>(build_body(par, 64, 0.5, 1.0,
                                                    BodyOptions{{5}, 1e9, 1e9}));
    auto fp3 = find_fixed_point(par, body3);
    REQUIRE(fp3.found);
    CHECK(std::abs(fp3.point[1]) < 1e-9);
}

TEST_CASE("gate forces the identity for the identity chart at every order bound") {
    for (int D = 1; D <= 6; ++D) {
        auto v = cartan_gate(identity_chart(), D);
        CHECK(v.kind == GateKind::ForcedIdentity);
    }
}

TEST_CASE("gate reports eigenvalues for a genuine involution instead of forcing") {
    auto v = cartan_gate(linear_involution_chart(), 2);
    REQUIRE(v.kind == GateKind::NotForced);
    REQUIRE(v.eigenvalues.size() == 2);
    CHECK(std::abs(v.eigenvalues.front() - Cx{-1, 0}) < 1e-6);
    CHECK(std::abs(v.eigenvalues.back() - Cx{1, 0}) < 1e-6);
}

TEST_CASE("gate declares the parabolic chart out of scope") {
    auto v = cartan_gate(parabolic_chart(4), 2);
    CHECK(v.kind == GateKind::NotApplicable);
    CHECK(v.reason == "NotOrderD");
}

TEST_CASE("conjugated involutions never get forced to the identity") {
    std::mt19937 rng(41);
    for (int i = 0; i < 6; ++i) {
        auto f = conjugated_involution(rng);
        auto v = cartan_gate(f, 2);
        REQUIRE(v.kind == GateKind::NotForced);
        bool has_minus_one = false;
        for (const auto& e : v.eigenvalues) {
            has_minus_one = has_minus_one || std::abs(e - Cx{-1, 0}) < 1e-6;
            // eigenvalues of a differential with f^2 = id are square roots of 1
            CHECK(std::abs(e * e - Cx{1, 0}) < 1e-6);
        }
        CHECK(has_minus_one);
    }
}

TEST_CASE("symbolic differentials agree with central finite differences") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (int i = 0; i < 5; ++i) {
        auto f = random_chart_map(rng);
        for (int k = 0; k < 20; ++k) {
            std::vector<Cx> z{Cx{u(rng), u(rng)}, Cx{u(rng), u(rng)}};
            auto sym = f.jacobian(z);
            auto fd = finite_difference_jacobian(f, z);
            CHECK((sym - fd).norm() < 1e-6);
        }
    }
}

TEST_CASE("hessian of the squared-norm pullback is positive definite near the identity") {
    auto h1 = hessian_convexity_check(identity_chart(), 1, 0.8);
    CHECK(h1.positive_definite);
    CHECK(h1.min_eigenvalue == doctest::Approx(2.0).epsilon(1e-4));

    auto h2 = hessian_convexity_check(linear_involution_chart(), 1, 0.8);
    CHECK(h2.positive_definite);
    CHECK(h2.min_eigenvalue == doctest::Approx(2.0).epsilon(1e-4));

    // A small perturbation keeps the minimum eigenvalue near 2.
    auto Z1 = CxPoly::variable(CCd, 2, 0);
    auto Z2 = CxPoly::variable(CCd, 2, 1);
    auto f = ChartMap::from_polynomials({Z1 + (Z2 * Z2).scalar_mul(Cx{1e-3, 0}), Z2},
                                        {Cx{0, 0}, Cx{0, 0}}, 1.0);
    auto h3 = hessian_convexity_check(f, 1, 1.0);
    CHECK(h3.positive_definite);
    CHECK(h3.min_eigenvalue >= 1.9);
}

TEST_CASE("chart maps refuse vanishing denominators on the stated ball") {
    auto Z1 = CxPoly::variable(CCd, 2, 0);
    auto Z2 = CxPoly::variable(CCd, 2, 1);
    // denominator z1 vanishes at the center
    std::vector<RationalFnC> comps{RationalFnC{Z2, Z1}, RationalFnC{Z1, Z1}};
    CHECK_THROWS_AS(ChartMap(std::move(comps), {Cx{0, 0}, Cx{0, 0}}, 1.0),
                    IterateEscapesDomain);
}

TEST_CASE("dehomogenized tuples round through chart maps") {
    // sigma in the x0-chart: (z1, z2) -> (z2/(z1 z2), z1/(z1 z2)) = (1/z1, 1/z2)
    ComplexDomain dom;
    auto x = [&](int i) { return CxHomogPoly::variable(dom, 3, i); };
    CxMapTuple sig({x(1) * x(2), x(0) * x(2), x(0) * x(1)});
    auto chart = ChartMap::from_tuple(sig, 0, {Cx{2, 0}, Cx{2, 0}}, 0.5);
    auto y = chart.eval({Cx{2, 0}, Cx{4, 0}});
    CHECK(std::abs(y[0] - Cx{0.5, 0}) < 1e-12);
    CHECK(std::abs(y[1] - Cx{0.25, 0}) < 1e-12);
}
