#include "birkit/tate.hpp"

#include <random>

namespace birkit {

TateSeries TateSeries::geometric_inverse() const {
    ExpVec zero(nvars_, 0);
    auto it = terms_.find(zero);
    if (it == terms_.end() || it->second.is_zero() || it->second.valuation() != 0)
        throw DenominatorNotUnit("constant term is not a p-adic unit");
    Padic c0 = it->second;

    // u = 1 - f/c0 must land in the maximal ideal for the series to converge.
    TateSeries u(dom_, nvars_, trunc_);
    for (const auto& [e, c] : terms_) {
        if (e == zero) continue;
        u.add_term(e, -(c / c0));
    }
    for (const auto& [e, c] : u.terms_) {
        if (!c.is_zero() && c.valuation() < 1)
            throw DenominatorNotUnit("denominator is not congruent to a unit mod the maximal ideal");
    }

    // 1/f = (1/c0) * sum u^k; u has no constant term, so powers beyond the
    // truncation order contribute nothing and the partial sum is exact there.
    TateSeries acc = TateSeries::constant(dom_, nvars_, trunc_, dom_.one());
    TateSeries power = acc;
    int rounds = trunc_;
    for (int k = 1; k <= rounds; ++k) {
        power = power * u;
        if (power.is_zero()) break;
        acc = acc + power;
    }
    TateSeries inv(dom_, nvars_, trunc_);
    Padic inv_c0 = dom_.one() / c0;
    for (const auto& [e, c] : acc.terms_) inv.add_term(e, c * inv_c0);
    return inv;
}

std::string TateSeries::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.to_string() + ")";
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            s += "*x" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

TateChartMap::TateChartMap(std::vector<TateSeries> comps, std::string provenance)
    : comps_(std::move(comps)), provenance_(std::move(provenance)) {
    if (comps_.empty()) throw DimensionMismatch("chart map needs components");
    for (const auto& c : comps_) {
        if (!c.in_unit_ball())
            throw CoefficientEscapesR("series coefficient escapes the unit ball");
    }
}

TateChartMap TateChartMap::from_rational_polys(const std::vector<RatPoly>& comps, PadicDomain dom,
                                               int trunc, std::string provenance) {
    std::vector<TateSeries> out;
    out.reserve(comps.size());
    for (const auto& c : comps) out.push_back(TateSeries::from_rational(c, dom, trunc));
    return TateChartMap(std::move(out), std::move(provenance));
}

GaussNorm TateChartMap::distance_to_identity() const {
    const PadicDomain& dom = domain();
    GaussNorm worst;  // zero norm
    for (int i = 0; i < n(); ++i) {
        TateSeries xi = TateSeries::variable(dom, comps_[i].nvars(), comps_[i].truncation(), i);
        GaussNorm g = (comps_[i] - xi).gauss_norm();
        if (g.zero) continue;
        if (worst.zero || g.exponent < worst.exponent) worst = g;
    }
    return worst;
}

TateChartMap chart_normalize(const RatBirationalMap& f, const RatBirationalMap& alpha,
                             PadicDomain dom, const ChartNormalizeOptions& opt) {
    if (alpha.degree() != 1) throw ParamOutOfRange("conjugation must be linear/affine");
    RatBirationalMap g = f;
    if (!alpha.is_identity()) {
        auto inv = alpha.certified_inverse();
        if (!inv) throw ParamOutOfRange("conjugation must carry a certified inverse");
        g = compose(alpha, compose(f, *inv));
    }

    const int nv = g.tuple().nvars();
    const int n = nv - 1;
    RatPoly den = dehomogenize(g.tuple().component(0), 0);
    std::vector<RatPoly> nums;
    for (int i = 1; i < nv; ++i) nums.push_back(dehomogenize(g.tuple().component(i), 0));

    // The spec'd precondition: the denominator must be a unit at the base
    // point of the chart.
    std::vector<Rat> base = opt.base_point;
    if (base.empty()) base.assign(n, Rat(1));
    if (static_cast<int>(base.size()) != n) throw DimensionMismatch("base point dimension");
    Rat den_at_base = den.eval(base);
    if (den_at_base == 0 || rat_valuation(den_at_base, dom.p) != 0)
        throw DenominatorNotUnit("denominator is not a unit at the base point");

    TateSeries den_series = TateSeries::from_rational(den, dom, opt.truncation);
    TateSeries inv_den = den_series.geometric_inverse();

    std::vector<TateSeries> comps;
    for (const auto& num : nums)
        comps.push_back(TateSeries::from_rational(num, dom, opt.truncation) * inv_den);
    return TateChartMap(std::move(comps), "chart x0=1");
}

const char* gate_kind_name(PadicGateKind k) {
    switch (k) {
        case PadicGateKind::ForcedIdentity: return "ForcedIdentity";
        case PadicGateKind::BoundViolated: return "BoundViolated";
        case PadicGateKind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

PadicGateVerdict identity_gate_padic(const TateChartMap& f, int order_bound,
                                     const RatBirationalMap& exact_oracle) {
    PadicGateVerdict v;
    v.distance = f.distance_to_identity();
    if (!v.distance.zero && v.distance.exponent < 2) {
        v.kind = PadicGateKind::BoundViolated;
        return v;
    }
    // Within the p^{-2} ball; the order hypothesis is verified by exact
    // iteration, never trusted.
    OrderResult ord = order(exact_oracle, order_bound);
    if (!ord.finite) {
        v.kind = PadicGateKind::NotApplicable;
        v.reason = "OrderUnverified";
        return v;
    }
    // Finite order within the ball: the map itself must already be the
    // identity; anything else would contradict the bounded-order theorem in
    // characteristic zero.
    if (!exact_oracle.is_identity() && !reduce(exact_oracle.tuple()).map.is_identity())
        throw Error("finite-order map inside the p^-2 ball is not the identity");
    v.kind = PadicGateKind::ForcedIdentity;
    v.verified_order = ord.order;
    return v;
}

SmallSubgroupSample small_subgroup_sample(long long p, int m, int count, unsigned seed, int prec,
                                          int order_bound) {
    if (m < 1 || count < 1) throw ParamOutOfRange("need m >= 1 and count >= 1");
    RationalDomain QQ;
    PadicDomain dom{p, prec};
    std::mt19937 rng(seed);
    Int pm = int_pow(p, static_cast<unsigned long>(m));
    Int unit_range = int_pow(p, static_cast<unsigned long>(std::max(1, prec - m)));

    SmallSubgroupSample out;
    out.p = p;
    out.m = m;

    auto unipotent = [&](const Rat& q) {
        auto x0 = RatHomogPoly::variable(QQ, 2, 0);
        auto x1 = RatHomogPoly::variable(QQ, 2, 1);
        RatMapTuple t({x0 + x1.scalar_mul(q), x1});
        return RatBirationalMap::from_tuple(t, true);
    };

    for (int i = 0; i < count; ++i) {
        // q = p^m * u with a random nonzero unit-part u
        std::uniform_int_distribution<long long> d(1, 1000000);
        Int u = Int(d(rng)) % unit_range;
        if (u == 0) u = 1;
        Rat q = Rat(pm * u);
        out.qs.push_back(q);
        out.elements.push_back(unipotent(q));
        out.distance_exponents.push_back(rat_valuation(q, p));
    }

    out.all_in_ball = true;
    for (long long e : out.distance_exponents) out.all_in_ball = out.all_in_ball && e >= m;

    // Closure: products of sampled elements stay unipotent with entries of
    // valuation >= m (the entries add).
    out.closure_ok = true;
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            auto prod = compose(out.elements[i], out.elements[j]);
            auto expect = unipotent(out.qs[i] + out.qs[j]);
            bool same = prod.tuple() == expect.tuple();
            Rat s = out.qs[i] + out.qs[j];
            bool in_family = s == 0 || rat_valuation(s, p) >= m;
            out.closure_ok = out.closure_ok && same && in_family;
        }
    }

    for (int i = 0; i < count; ++i) {
        auto chart = chart_normalize(out.elements[i], RatBirationalMap::identity(QQ, 1), dom,
                                     ChartNormalizeOptions{});
        auto verdict = identity_gate_padic(chart, order_bound, out.elements[i]);
        std::string o = gate_kind_name(verdict.kind);
        if (!verdict.reason.empty()) o += ":" + verdict.reason;
        out.gate_outcomes.push_back(std::move(o));
    }
    return out;
}

namespace {

// Affine-plane polynomial automorphism with integer coefficients and an
// exact inverse, built from triangular and unimodular pieces.
struct AffineAuto {
    std::vector<RatPoly> fwd;  // 2 components in 2 variables
    std::vector<RatPoly> inv;
};

std::vector<RatPoly> compose_affine(const std::vector<RatPoly>& f, const std::vector<RatPoly>& g) {
    std::vector<RatPoly> out;
    out.reserve(f.size());
    for (const auto& c : f) out.push_back(c.substitute(g));
    return out;
}

AffineAuto random_integer_auto(std::mt19937& rng) {
    RationalDomain QQ;
    auto X = RatPoly::variable(QQ, 2, 0);
    auto Y = RatPoly::variable(QQ, 2, 1);
    std::uniform_int_distribution<int> small(-2, 2);
    std::uniform_int_distribution<int> deg(1, 2);
    std::uniform_int_distribution<int> which(0, 1);

    auto shear_poly = [&](const RatPoly& v) {
        RatPoly a(QQ, 2);
        int d = deg(rng);
        for (int k = 1; k <= d; ++k) {
            int c = small(rng);
            if (c == 0) continue;
            RatPoly pw = RatPoly::constant(QQ, 2, Rat(c));
            for (int t = 0; t < k; ++t) pw = pw * v;
            a = a + pw;
        }
        return a;
    };

    AffineAuto g{{X, Y}, {X, Y}};
    for (int round = 0; round < 2; ++round) {
        if (which(rng) == 0) {
            RatPoly a = shear_poly(Y);
            std::vector<RatPoly> fwd{X + a, Y};
            std::vector<RatPoly> inv{X - a, Y};
            g.fwd = compose_affine(fwd, g.fwd);
            g.inv = compose_affine(g.inv, inv);
        } else {
            RatPoly b = shear_poly(X);
            std::vector<RatPoly> fwd{X, Y + b};
            std::vector<RatPoly> inv{X, Y - b};
            g.fwd = compose_affine(fwd, g.fwd);
            g.inv = compose_affine(g.inv, inv);
        }
    }
    return g;
}

}  // namespace

SweepStats finite_order_conjugate_sweep(long long p, int prec, int count, unsigned seed) {
    RationalDomain QQ;
    PadicDomain dom{p, prec};
    std::mt19937 rng(seed);
    auto X = RatPoly::variable(QQ, 2, 0);
    auto Y = RatPoly::variable(QQ, 2, 1);

    // Finite-order linear seeds: a swap, a sign involution, an order-3 map.
    struct Seed {
        std::vector<RatPoly> map;
        int ord;
    };
    std::vector<Seed> seeds{
        {{Y, X}, 2},
        {{-X, Y}, 2},
        {{-Y, X - Y}, 3},  // companion matrix of t^2 + t + 1
    };
    std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);

    SweepStats stats;
    while (stats.count < count) {
        const Seed& a = seeds[pick(rng)];
        AffineAuto g = random_integer_auto(rng);
        std::vector<RatPoly> h = compose_affine(g.fwd, compose_affine(a.map, g.inv));
        bool is_id = h[0] == X && h[1] == Y;
        if (is_id) continue;  // conjugator commuted with the seed

        // The conjugate has the seed's order by construction; verify h^ord = id
        // by exact evaluation at integer sample points (symbolic iteration of
        // degree-16 maps would blow up the expression sizes for nothing).
        const std::vector<std::vector<Rat>> sample_pts{
            {Rat(2), Rat(3)}, {Rat(-1), Rat(2)}, {Rat(3), Rat(-2)}, {Rat(1), Rat(1)},
            {Rat(-2), Rat(-3)}};
        for (const auto& pt : sample_pts) {
            std::vector<Rat> v = pt;
            for (int k = 0; k < a.ord; ++k) v = {h[0].eval(v), h[1].eval(v)};
            if (v != pt) throw Error("conjugate lost the seed order");
        }

        auto chart = TateChartMap::from_rational_polys(h, dom, 24, "conjugate sweep");
        std::vector<RatPoly> dev{h[0] - X, h[1] - Y};
        GaussNorm worst;
        for (const auto& c : dev) {
            auto series = TateSeries::from_rational(c, dom, 24);
            GaussNorm gnorm = series.gauss_norm();
            if (gnorm.zero) continue;
            if (worst.zero || gnorm.exponent < worst.exponent) worst = gnorm;
        }
        (void)chart;
        if (worst.zero || worst.exponent >= 2) {
            ++stats.violations;
            throw Error("finite-order conjugate landed inside the p^-2 identity ball");
        }
        stats.orders.push_back(a.ord);  // exact by conjugacy, spot-verified above
        stats.distance_exponents.push_back(worst.exponent);
        ++stats.count;
    }
    return stats;
}

}  // namespace birkit
