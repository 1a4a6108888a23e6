#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "birkit/poly.hpp"
#include "test_support.hpp"

using namespace birkit;
using namespace birkit::testing;

namespace {
RationalDomain QQ;

RatHomogPoly hp(const char* desc, std::initializer_list<std::pair<ExpVec, Rat>> terms) {
    (void)desc;
    RatPoly p(QQ, static_cast<int>(terms.begin()->first.size()));
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return RatHomogPoly::from_poly(p);
}

RatHomogPoly x(int nvars, int i) { return RatHomogPoly::variable(QQ, nvars, i); }
}  // namespace

TEST_CASE("additive inverse cancels to the zero polynomial") {
    auto a = hp("x0^2", {{{2, 0, 0}, Rat(1)}});
    auto b = hp("-x0^2", {{{2, 0, 0}, Rat(-1)}});
    CHECK((a + b).is_zero());
    CHECK((a + b).degree() == 2);
}

TEST_CASE("monomial product") {
    auto p = x(3, 0) * (x(3, 1) * x(3, 2));
    CHECK(p == hp("x0x1x2", {{{1, 1, 1}, Rat(1)}}));
}

TEST_CASE("product of sum and difference expands to difference of squares") {
    auto s = x(3, 0) + x(3, 1);
    auto d = x(3, 0) - x(3, 1);
    auto expect = hp("x0^2-x1^2", {{{2, 0, 0}, Rat(1)}, {{0, 2, 0}, Rat(-1)}});
    CHECK(s * d == expect);
}

TEST_CASE("degree mismatch on addition is rejected") {
    auto a = x(3, 0);
    auto b = x(3, 0) * x(3, 1);
    CHECK_THROWS_AS(a + b, DegreeMismatch);
}

TEST_CASE("substitution composes maps") {
    auto f = x(3, 0) * x(3, 1);
    std::vector<RatHomogPoly> sigma{x(3, 1) * x(3, 2), x(3, 0) * x(3, 2), x(3, 0) * x(3, 1)};
    CHECK(f.substitute(sigma) == hp("x0x1x2^2", {{{1, 1, 2}, Rat(1)}}));

    std::vector<RatHomogPoly> id{x(3, 0), x(3, 1), x(3, 2)};
    std::mt19937 rng(3);
    auto g = random_homog(rng, 3, 4);
    CHECK(g.substitute(id) == g);

    // Third component of the degree-2 family with coefficient 1/m, m = 2.
    std::vector<RatHomogPoly> fm{
        x(3, 0) * x(3, 0),
        x(3, 0) * x(3, 1) + hp("x2^2/2", {{{0, 0, 2}, Rat(1, 2)}}),
        x(3, 0) * x(3, 2)};
    CHECK(x(3, 2).substitute(fm) == x(3, 0) * x(3, 2));
}

TEST_CASE("substitution arity errors") {
    auto f = x(3, 0);
    std::vector<RatHomogPoly> too_few{x(3, 0), x(3, 1)};
    CHECK_THROWS_AS(f.substitute(too_few), ArityMismatch);
    std::vector<RatHomogPoly> mixed{x(3, 0), x(3, 1), x(3, 0) * x(3, 1)};
    CHECK_THROWS_AS(f.substitute(mixed), DegreeMismatch);
}

TEST_CASE("gcd of visible common factors") {
    auto g1 = poly_gcd(x(3, 0) * x(3, 1), x(3, 0) * x(3, 2));
    CHECK(g1 == x(3, 0));

    auto a = hp("x0^2x1x2", {{{2, 1, 1}, Rat(1)}});
    auto b = hp("x0x1^2x2", {{{1, 2, 1}, Rat(1)}});
    CHECK(poly_gcd(a, b) == x(3, 0) * x(3, 1) * x(3, 2));

    auto c = hp("x0^2+x1^2", {{{2, 0, 0}, Rat(1)}, {{0, 2, 0}, Rat(1)}});
    auto d = x(3, 0) * x(3, 2);
    auto g = poly_gcd(c, d);
    CHECK(g.degree() == 0);
    CHECK(!g.is_zero());
}

TEST_CASE("gcd with zero normalizes the other argument") {
    auto a = hp("2x0x1", {{{1, 1, 0}, Rat(2)}});
    auto z = RatHomogPoly::zero(QQ, 3, 2);
    CHECK(poly_gcd(a, z) == x(3, 0) * x(3, 1));
}

TEST_CASE("evaluation") {
    auto f = hp("x0^2+x1^2", {{{2, 0, 0}, Rat(1)}, {{0, 2, 0}, Rat(1)}});
    CHECK(f.eval({Rat(1), Rat(0), Rat(0)}) == Rat(1));
    CHECK((x(3, 0) * x(3, 2)).eval({Rat(0), Rat(1), Rat(1)}) == Rat(0));

    // The line c*x0 + x1 = 0 is in the kernel of P(x0,x1) = c*x0 + x1.
    for (Rat c : {Rat(2, 5), Rat(-1, 3), Rat(7)}) {
        RatPoly p(QQ, 2);
        p.add_term({1, 0}, c);
        p.add_term({0, 1}, Rat(1));
        auto P = RatHomogPoly::from_poly(p, 1);
        CHECK(P.eval({Rat(1), -c}) == Rat(0));
    }
}

TEST_CASE("partial derivatives") {
    CHECK((x(3, 0) * x(3, 1)).derivative(1) == x(3, 0));
    CHECK((x(3, 0) * x(3, 0)).derivative(2).is_zero());

    // d/dx2 of x0x2 + t(1-t)x1^2 at t = 1/2
    auto f = x(3, 0) * x(3, 2) + hp("x1^2/4", {{{0, 2, 0}, Rat(1, 4)}});
    CHECK(f.derivative(2) == x(3, 0));
    CHECK_THROWS_AS(f.derivative(5), IndexOutOfRange);
}

TEST_CASE("ring axioms on random instances") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        RatPoly a = random_poly(rng, 3, 3);
        RatPoly b = random_poly(rng, 3, 3);
        RatPoly c = random_poly(rng, 3, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("homogeneity under scaling") {
    std::mt19937 rng(12);
    for (int i = 0; i < 40; ++i) {
        int d = 1 + (i % 4);
        RatHomogPoly f = random_homog(rng, 3, d);
        Rat lambda = random_rat(rng);
        auto pt = random_rat_point(rng, 3);
        std::vector<Rat> scaled;
        for (const auto& v : pt) scaled.push_back(lambda * v);
        CHECK(f.eval(scaled) == rat_pow(lambda, d) * f.eval(pt));
    }
}

TEST_CASE("float homogeneity stays within tolerance") {
    RealDomain RR;
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        Poly<RealDomain> p(RR, 3);
        for (int t = 0; t < 3; ++t) {
            ExpVec e(3, 0);
            for (int k = 0; k < 3; ++k) e[k] = 1;
            p.add_term(e, u(rng));
        }
        auto f = HomogPoly<RealDomain>::from_poly(p, 3);
        double lambda = u(rng);
        std::vector<double> pt{u(rng), u(rng), u(rng)};
        std::vector<double> scaled{lambda * pt[0], lambda * pt[1], lambda * pt[2]};
        double lhs = f.eval(scaled);
        double rhs = lambda * lambda * lambda * f.eval(pt);
        CHECK(std::abs(lhs - rhs) <= 10 * RR.tol);
    }
}

TEST_CASE("gcd contract on engineered common factors") {
    std::mt19937 rng(14);
    int done = 0;
    while (done < 25) {
        RatPoly g = random_poly(rng, 3, 2);
        if (g.is_zero()) continue;
        // a, b: monomial-plus-one-term shapes with trivial mutual gcd
        RatPoly a = random_poly(rng, 3, 2, 2);
        RatPoly b = random_poly(rng, 3, 2, 2);
        if (a.is_zero() || b.is_zero()) continue;
        if (!poly_gcd(a, b).is_constant()) continue;
        RatPoly ga = g * a, gb = g * b;
        RatPoly h = poly_gcd(ga, gb);
        CHECK(poly_divides(h, ga));
        CHECK(poly_divides(h, gb));
        RatPoly qa = *poly_divide_exact(ga, h);
        RatPoly qb = *poly_divide_exact(gb, h);
        CHECK(poly_gcd(qa, qb).is_constant());
        ++done;
    }
}

TEST_CASE("derivative linearity, Leibniz rule and the Euler identity") {
    std::mt19937 rng(15);
    for (int i = 0; i < 40; ++i) {
        RatPoly f = random_poly(rng, 3, 3);
        RatPoly g = random_poly(rng, 3, 3);
        for (int v = 0; v < 3; ++v) {
            CHECK((f + g).derivative(v) == f.derivative(v) + g.derivative(v));
            CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
        }
        int d = 1 + (i % 5);
        RatHomogPoly h = random_homog(rng, 3, d);
        RatPoly euler(QQ, 3);
        for (int v = 0; v < 3; ++v) euler = euler + RatPoly::variable(QQ, 3, v) * h.poly().derivative(v);
        CHECK(euler == h.poly().scalar_mul(Rat(d)));
    }
}

TEST_CASE("p-adic polynomial arithmetic matches the rational embedding") {
    const long long p = 5;
    const int N = 10;
    PadicDomain Qp{p, N};
    std::mt19937 rng(16);
    auto embed = [&](const RatPoly& f) {
        Poly<PadicDomain> out(Qp, f.nvars());
        for (const auto& [e, c] : f.terms()) out.add_term(e, Qp.from_rat(c));
        return out;
    };
    int done = 0;
    while (done < 50) {
        RatPoly a = random_poly(rng, 2, 2);
        RatPoly b = random_poly(rng, 2, 2);
        bool clean = true;
        for (const auto& [e, c] : a.terms()) clean = clean && rat_den(c) % p != 0;
        for (const auto& [e, c] : b.terms()) clean = clean && rat_den(c) % p != 0;
        if (!clean) continue;
        CHECK(embed(a * b) == embed(a) * embed(b));
        CHECK(embed(a + b) == embed(a) + embed(b));
        ++done;
    }
}
