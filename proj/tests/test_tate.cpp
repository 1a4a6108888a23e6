#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "birkit/families.hpp"
#include "birkit/tate.hpp"

using namespace birkit;

namespace {
RationalDomain QQ;
PadicDomain Q3{3, 12};

RatBirationalMap translation_p1(const Rat& q) {
    auto x0 = RatHomogPoly::variable(QQ, 2, 0);
    auto x1 = RatHomogPoly::variable(QQ, 2, 1);
    return RatBirationalMap::from_tuple(RatMapTuple({x0, x1 + x0.scalar_mul(q)}), true);
}
}  // namespace

TEST_CASE("gauss norm takes the sup of coefficient norms") {
    TateSeries f(Q3, 2, 8);
    f.add_term(ExpVec{1, 0}, Q3.from_rat(Rat(1)));
    f.add_term(ExpVec{0, 1}, Q3.from_rat(Rat(3)));
    auto n = f.gauss_norm();
    CHECK(!n.zero);
    CHECK(n.exponent == 0);  // sup(1, 1/3) = 1

    TateSeries g(Q3, 2, 8);
    g.add_term(ExpVec{2, 0}, Q3.from_rat(Rat(9)));
    auto n2 = g.gauss_norm();
    CHECK(n2.exponent == 2);
    CHECK(n2.value(3) == doctest::Approx(1.0 / 9.0));

    CHECK(TateSeries(Q3, 2, 8).gauss_norm().zero);
}

TEST_CASE("chart translation by q sits at distance |q| from the identity") {
    for (int m : {1, 2, 3}) {
        Rat q = rat_pow(Rat(3), m) * 2;
        auto chart = chart_normalize(translation_p1(q), RatBirationalMap::identity(QQ, 1), Q3);
        auto d = chart.distance_to_identity();
        CHECK(!d.zero);
        CHECK(d.exponent == m);
    }
}

TEST_CASE("chart normalization of the identity is exactly the identity") {
    auto id2 = RatBirationalMap::identity(QQ, 2);
    auto chart = chart_normalize(id2, id2, Q3);
    CHECK(chart.distance_to_identity().zero);
    for (int i = 0; i < 2; ++i) {
        TateSeries xi = TateSeries::variable(Q3, 2, 16, i);
        CHECK((chart.components()[i] - xi).is_zero());
    }
}

TEST_CASE("translation conjugate lands at the expected chart components") {
    // [x0 : x1 + 9 x0 : x2] in the x0-chart: (x1 + 9, x2)
    auto x = [&](int i) { return RatHomogPoly::variable(QQ, 3, i); };
    auto f = RatBirationalMap::from_tuple(
        RatMapTuple({x(0), x(1) + x(0).scalar_mul(Rat(9)), x(2)}), true);
    auto chart = chart_normalize(f, RatBirationalMap::identity(QQ, 2), Q3);
    auto d = chart.distance_to_identity();
    CHECK(d.exponent == 2);

    // degree-2 member with coefficient p^m: components (x1 + p^m x2^2, x2)
    int m = 3;
    auto fm = pointwise_failure_map(rat_pow(Rat(3), m));
    auto chart2 = chart_normalize(fm, RatBirationalMap::identity(QQ, 2), Q3);
    CHECK(chart2.distance_to_identity().exponent == m);
}

TEST_CASE("geometric series inversion is exact up to the truncation order") {
    // den = 1 + 3 x1 + 9 x2
    TateSeries den(Q3, 2, 10);
    den.add_term(ExpVec{0, 0}, Q3.one());
    den.add_term(ExpVec{1, 0}, Q3.from_rat(Rat(3)));
    den.add_term(ExpVec{0, 1}, Q3.from_rat(Rat(9)));
    auto inv = den.geometric_inverse();
    auto prod = den * inv;
    TateSeries one = TateSeries::constant(Q3, 2, 10, Q3.one());
    CHECK((prod - one).is_zero());
    CHECK(inv.in_unit_ball());
}

TEST_CASE("non-unit and non-congruent denominators are rejected") {
    TateSeries d1(Q3, 2, 8);
    d1.add_term(ExpVec{0, 0}, Q3.from_rat(Rat(3)));  // constant term 3: not a unit
    CHECK_THROWS_AS(d1.geometric_inverse(), DenominatorNotUnit);

    TateSeries d2(Q3, 2, 8);
    d2.add_term(ExpVec{0, 0}, Q3.one());
    d2.add_term(ExpVec{1, 0}, Q3.one());  // unit coefficient off the constant
    CHECK_THROWS_AS(d2.geometric_inverse(), DenominatorNotUnit);
}

TEST_CASE("coefficients outside the unit ball are rejected") {
    RatPoly p(QQ, 2);
    p.add_term(ExpVec{1, 0}, Rat(1, 3));
    CHECK_THROWS_AS(TateSeries::from_rational(p, Q3, 8), CoefficientEscapesR);
}

TEST_CASE("gate trichotomy") {
    auto id1 = RatBirationalMap::identity(QQ, 1);

    auto v1 = identity_gate_padic(chart_normalize(id1, id1, Q3), 6, id1);
    CHECK(v1.kind == PadicGateKind::ForcedIdentity);
    CHECK(v1.verified_order == 1);

    auto x0 = RatHomogPoly::variable(QQ, 2, 0);
    auto x1 = RatHomogPoly::variable(QQ, 2, 1);
    auto neg = RatBirationalMap::from_tuple(RatMapTuple({x0, x1.scalar_mul(Rat(-1))}), true);
    auto v2 = identity_gate_padic(chart_normalize(neg, id1, Q3), 6, neg);
    CHECK(v2.kind == PadicGateKind::BoundViolated);
    CHECK(v2.distance.exponent == 0);  // |-2|_3 = 1

    auto trans = translation_p1(Rat(9));
    auto v3 = identity_gate_padic(chart_normalize(trans, id1, Q3), 6, trans);
    CHECK(v3.kind == PadicGateKind::NotApplicable);
    CHECK(v3.reason == "OrderUnverified");
    CHECK(v3.distance.exponent == 2);
}

TEST_CASE("sampled unipotent subgroups sit inside the p^-m ball") {
    auto s = small_subgroup_sample(3, 2, 5, 7);
    CHECK(s.all_in_ball);
    CHECK(s.closure_ok);
    CHECK(s.gate_outcomes.size() == 5);
    for (const auto& o : s.gate_outcomes) CHECK(o == "NotApplicable:OrderUnverified");

    auto finer = small_subgroup_sample(3, 3, 5, 8);
    for (long long e : finer.distance_exponents) CHECK(e >= 3);
}

TEST_CASE("finite-order conjugates keep their distance from the identity") {
    auto stats = finite_order_conjugate_sweep(3, 12, 25, 11);
    CHECK(stats.count == 25);
    CHECK(stats.violations == 0);
    for (long long e : stats.distance_exponents) CHECK(e <= 1);
    for (int o : stats.orders) CHECK((o == 2 || o == 3));
}

TEST_CASE("ultrametric inequality for series sums") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> val(0, 3);
    std::uniform_int_distribution<int> unit(1, 40);
    std::uniform_int_distribution<int> expo(0, 2);
    auto random_series = [&]() {
        TateSeries f(Q3, 2, 8);
        for (int i = 0; i < 3; ++i) {
            int u = unit(rng);
            while (u % 3 == 0) u = unit(rng);
            f.add_term(ExpVec{expo(rng), expo(rng)},
                       Q3.from_rat(Rat(u) * rat_pow(Rat(3), val(rng))));
        }
        return f;
    };
    for (int i = 0; i < 200; ++i) {
        auto f = random_series();
        auto g = random_series();
        if (f.is_zero() || g.is_zero()) continue;
        auto nf = f.gauss_norm(), ng = g.gauss_norm();
        auto sum = f + g;
        if (sum.is_zero()) continue;
        auto ns = sum.gauss_norm();
        CHECK(ns.exponent >= std::min(nf.exponent, ng.exponent));
        if (nf.exponent != ng.exponent) CHECK(ns.exponent == std::min(nf.exponent, ng.exponent));

        auto prod = (f * g).gauss_norm();
        CHECK(prod.exponent == nf.exponent + ng.exponent);
    }
}
