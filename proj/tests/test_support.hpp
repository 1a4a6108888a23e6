#pragma once

#include <random>

#include "birkit/cartan.hpp"
#include "birkit/maps.hpp"
#include "birkit/poly.hpp"

// Shared generators for the property-style tests.
namespace birkit::testing {

inline Rat random_rat(std::mt19937& rng, int max_abs = 9) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_abs);
    return Rat(num(rng), den(rng));
}

inline ExpVec random_expvec(std::mt19937& rng, int nvars, int max_deg) {
    std::uniform_int_distribution<int> d(0, max_deg);
    ExpVec e(nvars, 0);
    int total = d(rng);
    std::uniform_int_distribution<int> pick(0, nvars - 1);
    for (int i = 0; i < total; ++i) e[pick(rng)] += 1;
    return e;
}

inline RatPoly random_poly(std::mt19937& rng, int nvars, int max_deg, int max_terms = 4) {
    RationalDomain dom;
    RatPoly p(dom, nvars);
    std::uniform_int_distribution<int> nt(0, max_terms);
    int terms = nt(rng);
    for (int i = 0; i < terms; ++i) p.add_term(random_expvec(rng, nvars, max_deg), random_rat(rng));
    return p;
}

inline RatHomogPoly random_homog(std::mt19937& rng, int nvars, int degree, int max_terms = 4) {
    RationalDomain dom;
    RatPoly p(dom, nvars);
    std::uniform_int_distribution<int> nt(1, max_terms);
    std::uniform_int_distribution<int> pick(0, nvars - 1);
    int terms = nt(rng);
    for (int i = 0; i < terms; ++i) {
        ExpVec e(nvars, 0);
        for (int k = 0; k < degree; ++k) e[pick(rng)] += 1;
        p.add_term(std::move(e), random_rat(rng));
    }
    return RatHomogPoly::from_poly(p, degree);
}

inline std::vector<Rat> random_rat_point(std::mt19937& rng, int len) {
    std::vector<Rat> x;
    for (int i = 0; i < len; ++i) x.push_back(random_rat(rng));
    return x;
}

// A random composition of de Jonquieres and linear maps, certified invertible.
inline RatBirationalMap random_certified_map(std::mt19937& rng, int pieces = 2) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto rnd_dejonq = [&]() {
        std::vector<Rat> a{Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
        std::vector<Rat> b{Rat(1)};
        return de_jonquieres(a, b);
    };
    auto rnd_linear = [&]() {
        while (true) {
            std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3));
            for (auto& row : m)
                for (auto& c : row) c = Rat(coeff(rng));
            try {
                return linear_map_certified(m);
            } catch (const ZeroTuple&) {
            }
        }
    };
    RatBirationalMap f = coin(rng) ? rnd_dejonq() : rnd_linear();
    for (int i = 1; i < pieces; ++i) {
        RatBirationalMap g = coin(rng) ? rnd_dejonq() : rnd_linear();
        RatBirationalMap fg = compose(f, g);
        RatBirationalMap gi = *g.certified_inverse();
        RatBirationalMap fi = *f.certified_inverse();
        auto cert = certify_inverse(fg, compose(gi, fi));
        f = *cert;
    }
    return f;
}

// --- complex chart-map generators -------------------------------------------

// z1 + a2 z2 + a3 z2^2 style shear polynomial in one of the two variables.
inline CxPoly random_shear_poly(std::mt19937& rng, int var, double scale) {
    ComplexDomain dom;
    std::uniform_real_distribution<double> u(-scale, scale);
    CxPoly p(dom, 2);
    for (int k = 1; k <= 2; ++k) {
        ExpVec e(2, 0);
        e[var] = k;
        p.add_term(std::move(e), Cx{u(rng), u(rng)});
    }
    return p;
}

// Exact-order-2 chart map: a small triangular automorphism conjugating the
// linear involution (z1, z2) -> (-z1, z2).
inline ChartMap conjugated_involution(std::mt19937& rng, double eps = 0.05) {
    ComplexDomain dom;
    auto Z1 = CxPoly::variable(dom, 2, 0);
    auto Z2 = CxPoly::variable(dom, 2, 1);
    CxPoly q1 = random_shear_poly(rng, 1, eps);
    CxPoly q2 = random_shear_poly(rng, 0, eps);
    auto comp = [](const std::vector<CxPoly>& f, const std::vector<CxPoly>& h) {
        return std::vector<CxPoly>{f[0].substitute(h), f[1].substitute(h)};
    };
    std::vector<CxPoly> s1{Z1 + q1, Z2};
    std::vector<CxPoly> s1inv{Z1 - q1, Z2};
    std::vector<CxPoly> s2{Z1, Z2 + q2};
    std::vector<CxPoly> s2inv{Z1, Z2 - q2};
    std::vector<CxPoly> a{-Z1, Z2};
    auto g = comp(s2, s1);
    auto ginv = comp(s1inv, s2inv);
    auto f = comp(g, comp(a, ginv));
    return ChartMap::from_polynomials(std::move(f), {Cx{0, 0}, Cx{0, 0}}, 1.2);
}

// Rational-function chart map with denominators bounded away from zero on the
// unit ball: components (z_i + p_i)/(1 + q_i).
inline ChartMap random_chart_map(std::mt19937& rng, int n = 2) {
    ComplexDomain dom;
    std::uniform_real_distribution<double> up(-0.2, 0.2);
    std::uniform_real_distribution<double> uq(-0.05, 0.05);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<RationalFnC> comps;
    for (int i = 0; i < n; ++i) {
        CxPoly num = CxPoly::variable(dom, n, i);
        CxPoly den = CxPoly::constant(dom, n, dom.one());
        for (int t = 0; t < 3; ++t) {
            ExpVec e(n, 0);
            e[pick(rng)] += 1;
            e[pick(rng)] += 1;
            num.add_term(e, Cx{up(rng), up(rng)});
            ExpVec e2(n, 0);
            e2[pick(rng)] += 1;
            den.add_term(std::move(e2), Cx{uq(rng), uq(rng)});
        }
        comps.push_back(RationalFnC{std::move(num), std::move(den)});
    }
    return ChartMap(std::move(comps), std::vector<Cx>(n, Cx{0, 0}), 1.0);
}

}  // namespace birkit::testing
