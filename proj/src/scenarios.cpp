#include "birkit/scenarios.hpp"

#include <random>

#include "birkit/families.hpp"
#include "birkit/spacefill.hpp"
#include "birkit/tate.hpp"

namespace birkit {

namespace {

struct ScenarioBuilder {
    Json report;
    bool pass = true;

    ScenarioBuilder(const std::string& name, const std::string& desc, unsigned seed) {
        report["schema"] = 1;
        report["scenario"] = name;
        report["description"] = desc;
        report["seed"] = seed;
        report["assertions"] = Json::array();
    }

    void check(const std::string& name, bool ok, double tolerance, Json details = Json()) {
        Json a;
        a["name"] = name;
        a["kind"] = tolerance == 0.0 ? "exact" : "tolerance";
        a["tolerance"] = tolerance;
        a["pass"] = ok;
        if (!details.is_null()) a["details"] = details;
        report["assertions"].push_back(std::move(a));
        pass = pass && ok;
    }

    ScenarioResult finish() {
        report["pass"] = pass;
        return ScenarioResult{report, pass};
    }
};

RationalDomain QQ;

// --- individual scenarios ----------------------------------------------------

ScenarioResult scn_unbounded_degree(unsigned seed) {
    ScenarioBuilder s("unbounded-degree",
                      "Reduced degrees of the factorial-coefficient automorphism family grow "
                      "without bound, so the sequence cannot converge at any fixed degree.",
                      seed);
    std::vector<RatBirationalMap> fam;
    for (int m = 2; m <= 6; ++m) fam.push_back(factorial_coefficient_map(m));
    auto res = degree_bounded_check(fam, 4);
    s.check("degree trace is (2,3,4,5,6)", res.trace == std::vector<int>{2, 3, 4, 5, 6}, 0,
            Json(res.trace));
    s.check("trace is declared unbounded", !res.bounded, 0);

    auto sigma = sigma_involution();
    std::vector<RatBirationalMap> constant{sigma, sigma, sigma};
    auto cres = degree_bounded_check(constant, 10);
    s.check("constant sequence stays bounded", cres.bounded && cres.max_degree == 2, 0);

    s.report["convergence_report"] = to_json(degree_unbounded_report(res));
    return s.finish();
}

ScenarioResult scn_pointwise_failure(unsigned seed) {
    ScenarioBuilder s("pointwise-failure",
                      "The degree-2 family with shrinking x2^2 coefficient converges to the "
                      "identity yet evaluates to [0:1:0] at every [0:1:*] point; locally "
                      "uniform convergence holds on a ball in the x0-chart and fails near "
                      "[0:1:1].",
                      seed);

    bool eval_ok = true;
    for (int m = 1; m <= 20; ++m) {
        auto f = pointwise_failure_map(Rat(1, m));
        auto out = eval_point(f, {Rat(0), Rat(1), Rat(1)});
        eval_ok = eval_ok && !out.indeterminate &&
                  points_equal(QQ, out.point, {Rat(0), Rat(1), Rat(0)});
    }
    s.check("evaluation sticks at [0:1:0] for m = 1..20", eval_ok, 0);

    // Locally uniform convergence certificate on the half-radius ball.
    std::vector<std::pair<int, CxMapTuple>> family;
    for (int m : {5, 10, 20, 50, 100})
        family.emplace_back(m, to_complex(pointwise_failure_map(Rat(1, m)).tuple()));
    CxMapTuple target = CxMapTuple::identity(ComplexDomain{}, 2);
    ChartBall ball{0, {Cx{0, 0}, Cx{0, 0}}, 0.5, 21, true};
    UniformCertOptions copt;
    copt.tol_final = 1e-2;
    auto cert = uniform_certificate(family, target, ball, copt);
    bool got_cert = std::holds_alternative<RegionCertificate>(cert);
    s.check("certificate on the chart-0 ball of radius 1/2", got_cert, copt.tol_final);
    if (got_cert) {
        const auto& c = std::get<RegionCertificate>(cert);
        bool rate_ok = true;
        for (const auto& [m, sup] : c.sup_errors) rate_ok = rate_ok && sup <= 3.0 / m;
        s.check("sup-errors bounded by 3/m", rate_ok, 0, to_json(c)["sup_errors"]);
        s.report["certificate"] = to_json(c);
    }

    // Around [0:1:1] (chart x1 = 1, coordinates (x0, x2)) the family is stuck
    // a fixed distance away from the identity.
    ChartBall bad_ball{1, {Cx{0, 0}, Cx{1, 0}}, 0.3, 11, true};
    auto refuted = uniform_certificate(family, target, bad_ball, copt);
    bool got_ref = std::holds_alternative<Refutation>(refuted);
    double expect_floor = 0.9 * chordal_distance({Cx{0, 0}, Cx{1, 0}, Cx{1, 0}},
                                                 {Cx{0, 0}, Cx{1, 0}, Cx{0, 0}});
    if (got_ref) {
        const auto& r = std::get<Refutation>(refuted);
        s.check("refuted near [0:1:1] with a persistent witness",
                r.reason == RefutationReason::PersistentError && r.floor >= expect_floor,
                expect_floor, to_json(r));
        s.report["refutation"] = to_json(r);
    } else {
        s.check("refuted near [0:1:1] with a persistent witness", false, expect_floor);
    }

    // Sequence limit with cofactor extraction.
    std::vector<CxMapTuple> seq;
    for (int m = 1; m <= 50; ++m) seq.push_back(to_complex(pointwise_failure_map(Rat(1, m)).tuple()));
    auto conv = sequence_limit(seq);
    s.check("sequence of normalized representatives converges to the identity",
            conv.verdict == ConvergenceVerdict::ConvergesToId && conv.reduced_limit_is_identity,
            1e-6);
    bool cof_ok = false;
    if (conv.cofactor) {
        // The extracted near-common factor is x0 (up to phase).
        const auto& terms = conv.cofactor->terms();
        auto it = terms.find(ExpVec{1, 0, 0});
        cof_ok = it != terms.end() && std::abs(it->second) > 0.999;
    }
    s.check("extracted cofactor is x0 up to phase", cof_ok, 1e-3);
    s.report["convergence_report"] = to_json(conv);

    // Coefficient-space distance to the embedded identity decays like 1/m.
    auto id_emb = WdPoint::from_tuple(to_complex(identity_embedded(2, 2)));
    double lo = 10, hi = 0;
    for (int m = 10; m <= 1000; ++m) {
        auto w = WdPoint::from_tuple(to_complex(pointwise_failure_map(Rat(1, m)).tuple()));
        double ratio = wd_distance(w, id_emb) * m;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    s.check("m * distance stays within [0.3, 3] for m = 10..1000", lo >= 0.3 && hi <= 3.0, 0,
            Json{{"min_ratio", lo}, {"max_ratio", hi}});
    return s.finish();
}

ScenarioResult scn_moving_lines(unsigned seed) {
    ScenarioBuilder s("moving-lines",
                      "Composing the pointwise-failure maps with sliding linear shifts "
                      "contracts the moving lines x0 + (1/m) x1 = 0 to [0:1:0]; the lines are "
                      "pairwise distinct, so no Zariski-open set avoids them all.",
                      seed);
    bool contract_ok = true, distinct_ok = true;
    std::vector<std::pair<Rat, Rat>> duals;
    for (int m = 1; m <= 10; ++m) {
        auto psi = compose(pointwise_failure_map(Rat(1, m)), moving_lines_shift(Rat(1, m)));
        PointVec<RationalDomain> a{Rat(1), Rat(-m), Rat(0)};
        PointVec<RationalDomain> b{Rat(0), Rat(0), Rat(1)};
        auto out = contract_image(psi, a, b);
        contract_ok = contract_ok && out.contracts &&
                      points_equal(QQ, out.image, {Rat(0), Rat(1), Rat(0)});
        duals.emplace_back(Rat(1), Rat(1, m));
    }
    for (std::size_t i = 0; i < duals.size(); ++i)
        for (std::size_t j = i + 1; j < duals.size(); ++j)
            distinct_ok = distinct_ok &&
                          duals[i].first * duals[j].second != duals[i].second * duals[j].first;
    s.check("each composition contracts its line to [0:1:0]", contract_ok, 0);
    s.check("the ten contracted lines are pairwise distinct", distinct_ok, 0);

    auto id = RatBirationalMap::identity(QQ, 2);
    auto not_contracted = contract_image(id, {Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(0), Rat(1)});
    s.check("the identity contracts nothing", !not_contracted.contracts, 0);
    return s.finish();
}

ScenarioResult scn_sigma_involution(unsigned seed) {
    ScenarioBuilder s("sigma-involution",
                      "The standard quadratic involution composes with itself to the identity "
                      "with cubic cofactor x0x1x2, certifying its own inverse and order 2.",
                      seed);
    auto sigma = sigma_involution();
    auto raw = sigma.tuple().substitute(sigma.tuple());
    auto red = reduce(raw);
    auto x = [&](int i) { return RatHomogPoly::variable(QQ, 3, i); };
    s.check("sigma o sigma reduces to the identity", red.map.is_identity(), 0);
    s.check("cofactor is x0x1x2", red.cofactor == x(0) * x(1) * x(2), 0);
    s.check("degree accounting 2*2 = 1 + 3",
            raw.degree() == 4 && red.map.degree() == 1 && red.cofactor.degree() == 3, 0);
    auto ord = order(sigma, 5);
    s.check("order is exactly 2", ord.finite && ord.order == 2, 0);
    s.check("inverse certification succeeds", certify_inverse(sigma, sigma).has_value(), 0);
    return s.finish();
}

ScenarioResult scn_oscillating_rho(unsigned seed) {
    const int depth = 6;
    ScenarioBuilder s("oscillating-rho",
                      "Conjugating the parabolic family by wildly oscillating unitaries from a "
                      "space-filling curve keeps the maps converging to the identity while the "
                      "single indeterminacy point visits a dense cloud.",
                      seed);

    auto rho1 = rho_oscillating(1.0, depth);
    auto fib1 = project_to_identity_fiber(WdPoint::from_tuple(rho1));
    s.check("the t = 1 member lies on the identity fibre", fib1.residual < 1e-12, 1e-12,
            Json{{"residual", fib1.residual}});

    Json decay = Json::array();
    bool small_ok = true;
    for (int m : {100, 125, 150, 200}) {
        auto w = WdPoint::from_tuple(rho_oscillating(1.0 / m, depth));
        double r = project_to_identity_fiber(w).residual;
        decay.push_back(Json::array({m, r}));
        small_ok = small_ok && r <= 1e-2;
    }
    s.check("identity-fibre distance of rho(1/m) is at most 1e-2 for m >= 100", small_ok, 1e-2,
            decay);

    bool indet_ok = true;
    Json indet = Json::array();
    for (double t : {0.3, 0.07, 0.013}) {
        Eigen::Vector3cd q = sigma_hat(t, depth).col(2);
        auto vals = rho_oscillating(t, depth).eval_raw({q(0), q(1), q(2)});
        double nm = 0;
        for (const auto& v : vals) nm += std::norm(v);
        nm = std::sqrt(nm);
        indet.push_back(Json::array({t, nm}));
        indet_ok = indet_ok && nm < 1e-10;
    }
    s.check("all components vanish at the transported indeterminacy point", indet_ok, 1e-10,
            indet);

    double r100 = indeterminacy_cloud(0.1, 100, depth).covering_radius;
    double r1k = indeterminacy_cloud(0.1, 1000, depth).covering_radius;
    double r10k = indeterminacy_cloud(0.1, 10000, depth).covering_radius;
    s.check("cloud covering radius strictly decreases over N = 100, 1000, 10000",
            r100 > r1k && r1k > r10k, 0, Json::array({r100, r1k, r10k}));
    return s.finish();
}

ScenarioResult scn_homotopy(unsigned seed) {
    const int depth = 6;
    ScenarioBuilder s("homotopy-H",
                      "The piecewise homotopy between the conjugated family and the parabolic "
                      "family is the parabolic family at s = 1, the conjugated family at "
                      "s = 0, and glues continuously along the diagonal.",
                      seed);

    bool endpoint_ok = true;
    for (double t : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
        auto H1 = homotopy_H(1.0, t, depth);
        endpoint_ok = endpoint_ok && (H1 == f_t_tuple(t));
    }
    s.check("H(1, t) equals f_t exactly as tuples", endpoint_ok, 0);

    auto H00 = homotopy_H(0.0, 0.0, depth);
    s.check("H(0, 0) is the identity", H00.is_identity_tuple(), 0);

    // Distances across the diagonal shrink with delta. The conjugating curve
    // is only Hoelder-continuous of exponent 1/8, so the decay is slow and
    // the deltas must be spaced by decades; the gap is averaged over s.
    std::vector<double> deltas{1e-2, 1e-5, 1e-8, 1e-11, 1e-14};
    std::vector<double> means;
    Json diag = Json::array();
    for (double d : deltas) {
        double acc = 0;
        int cnt = 0;
        for (double sv = 0.15; sv < 0.96; sv += 0.1) {
            auto above = WdPoint::from_tuple(homotopy_H(sv, sv + d, depth));
            auto below = WdPoint::from_tuple(homotopy_H(sv, sv - d, depth));
            acc += wd_distance(above, below);
            ++cnt;
        }
        means.push_back(acc / cnt);
        diag.push_back(Json::array({d, means.back()}));
    }
    bool shrink = true;
    for (std::size_t i = 0; i + 1 < means.size(); ++i) shrink = shrink && means[i + 1] <= means[i];
    shrink = shrink && means.back() < 0.1;
    s.check("mean diagonal gap decreases to below 0.1 as delta -> 0", shrink, 0.1, diag);
    return s.finish();
}

ScenarioResult scn_nonlift(unsigned seed) {
    ScenarioBuilder s("nonlift",
                      "The cosine-coefficient family admits no continuous lift through t = 0: "
                      "its exact members certify inverses, fix [1:0:0] and contract their "
                      "line, while the canonical lift accumulates distinct scaled-identity "
                      "tuples of positive diameter.",
                      seed);

    Rat t(1, 7), c(2, 5);
    auto rho = nonlift_family_exact(t, c);
    s.check("inverse certification against the t -> -t member",
            rho.certified_inverse() != nullptr, 0);

    auto fixed = eval_point(rho, {Rat(1), Rat(0), Rat(0)});
    s.check("the family fixes [1:0:0]",
            !fixed.indeterminate && points_equal(QQ, fixed.point, {Rat(1), Rat(0), Rat(0)}), 0);

    PointVec<RationalDomain> a{Rat(5), Rat(-2), Rat(0)};  // on {(2/5) x0 + x1 = 0}
    PointVec<RationalDomain> b{Rat(0), Rat(0), Rat(1)};
    auto contract = contract_image(rho, a, b);
    s.check("the coefficient line contracts to [0:0:1]",
            contract.contracts && points_equal(QQ, contract.image, {Rat(0), Rat(0), Rat(1)}), 0);

    auto demo = nonlift_obstruction_demo({0.0, 0.5});
    s.check("first two lift components vanish on the line, symbolically",
            demo.symbolic_vanishing, 0);
    bool match_ok = true, fib_ok = true;
    for (const auto& l : demo.limits) {
        match_ok = match_ok && l.match_residual <= 1e-6;
        fib_ok = fib_ok && l.fiber_residual <= 1e-6;
    }
    s.check("lift limits match the scaled identity tuples to 1e-6", match_ok, 1e-6);
    s.check("every lift limit projects to the identity", fib_ok, 1e-6);
    s.check("the limit set has diameter at least 0.1", demo.diameter >= 0.1, 0.1,
            Json{{"diameter", demo.diameter}});
    s.report["obstruction"] = to_json(demo);
    return s.finish();
}

ScenarioResult scn_padic_gate(unsigned seed) {
    ScenarioBuilder s("padic-gate",
                      "The p-adic identity gate trichotomy at p = 3: the identity is forced, "
                      "the sign involution violates the 1/p^2 bound, and a translation by 9 "
                      "meets the bound but cannot verify finite order.",
                      seed);
    PadicDomain dom{3, 12};
    auto id1 = RatBirationalMap::identity(QQ, 1);

    auto chart_id = chart_normalize(id1, id1, dom);
    auto v1 = identity_gate_padic(chart_id, 6, id1);
    s.check("exact identity is forced", v1.kind == PadicGateKind::ForcedIdentity, 0,
            to_json(v1, dom.p));

    auto x0 = RatHomogPoly::variable(QQ, 2, 0);
    auto x1 = RatHomogPoly::variable(QQ, 2, 1);
    auto neg = RatBirationalMap::from_tuple(RatMapTuple({x0, x1.scalar_mul(Rat(-1))}), true);
    auto v2 = identity_gate_padic(chart_normalize(neg, id1, dom), 6, neg);
    s.check("x -> -x violates the bound with norm 1",
            v2.kind == PadicGateKind::BoundViolated && !v2.distance.zero &&
                v2.distance.exponent == 0,
            0, to_json(v2, dom.p));

    auto trans = RatBirationalMap::from_tuple(RatMapTuple({x0, x1 + x0.scalar_mul(Rat(9))}), true);
    auto v3 = identity_gate_padic(chart_normalize(trans, id1, dom), 6, trans);
    s.check("x -> x + 9 meets the bound with norm exactly 3^-2 but order is unverified",
            v3.kind == PadicGateKind::NotApplicable && v3.reason == "OrderUnverified" &&
                !v3.distance.zero && v3.distance.exponent == 2,
            0, to_json(v3, dom.p));
    return s.finish();
}

ScenarioResult scn_small_subgroups(unsigned seed) {
    ScenarioBuilder s("padic-small-subgroups",
                      "Unipotent translations with entries of valuation at least m form "
                      "nontrivial subgroups inside every p^-m ball around the identity; none "
                      "of their elements has verifiable finite order.",
                      seed);
    auto sample = small_subgroup_sample(3, 2, 5, seed);
    s.check("all five elements lie in the 3^-2 ball", sample.all_in_ball, 0,
            Json(sample.distance_exponents));
    s.check("all 25 pairwise products stay in the family", sample.closure_ok, 0);
    bool none_forced = true;
    for (const auto& o : sample.gate_outcomes)
        none_forced = none_forced && o.rfind("ForcedIdentity", 0) != 0;
    s.check("the gate never forces an element to the identity", none_forced, 0,
            Json(sample.gate_outcomes));

    auto finer = small_subgroup_sample(3, 3, 5, seed + 1);
    s.check("raising m shrinks the certified ball by a factor 1/p", finer.all_in_ball, 0,
            Json(finer.distance_exponents));
    s.report["sample"] = to_json(sample);
    return s.finish();
}

ScenarioResult scn_theorem1_sweep(unsigned seed) {
    ScenarioBuilder s("theorem1-consistency-sweep",
                      "One hundred finite-order conjugates by integer polynomial automorphisms "
                      "all stay Gauss-distance > p^-2 from the identity, consistent with the "
                      "bounded-order forcing over the p-adics; the Gauss norm is exactly "
                      "multiplicative on random pairs.",
                      seed);
    PadicDomain dom{3, 12};
    bool sweep_ok = true;
    Json stats_json;
    try {
        auto stats = finite_order_conjugate_sweep(dom.p, dom.prec, 100, seed);
        stats_json = to_json(stats);
        sweep_ok = stats.count == 100 && stats.violations == 0;
        for (long long e : stats.distance_exponents) sweep_ok = sweep_ok && e <= 1;
    } catch (const Error& e) {
        sweep_ok = false;
        stats_json = Json{{"error", e.what()}};
    }
    s.check("100 finite-order conjugates, none within Gauss distance 3^-2 of the identity",
            sweep_ok, 0, stats_json);

    // Exact multiplicativity of the Gauss norm on random pairs over R.
    std::mt19937 rng(seed + 17);
    std::uniform_int_distribution<int> val(0, 3);
    std::uniform_int_distribution<int> unit(1, 80);
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> expo(0, 3);
    auto random_series = [&]() {
        TateSeries f(dom, 2, 12);
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            int u = unit(rng);
            while (u % dom.p == 0) u = unit(rng);
            Rat cval = Rat(u) * rat_pow(Rat(dom.p), val(rng));
            f.add_term(ExpVec{expo(rng), expo(rng)}, dom.from_rat(cval));
        }
        return f;
    };
    bool mult_ok = true;
    int done = 0;
    while (done < 500) {
        TateSeries f = random_series();
        TateSeries g = random_series();
        if (f.is_zero() || g.is_zero()) continue;
        auto nf = f.gauss_norm(), ng = g.gauss_norm(), nfg = (f * g).gauss_norm();
        mult_ok = mult_ok && !nfg.zero && nfg.exponent == nf.exponent + ng.exponent;
        ++done;
    }
    s.check("Gauss norm multiplicative on 500 random pairs", mult_ok, 0);
    return s.finish();
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_registry() {
    static const std::vector<ScenarioInfo> registry{
        {"unbounded-degree",
         "Factorial-coefficient family: reduced degrees (2,3,4,5,6) grow without bound."},
        {"pointwise-failure",
         "Shrinking-coefficient family: converges to the identity, fails pointwise at [0:1:*], "
         "certified locally uniform on a chart ball."},
        {"moving-lines",
         "Compositions contracting the pairwise-distinct lines x0 + (1/m) x1 = 0 to [0:1:0]."},
        {"sigma-involution", "The standard quadratic involution squares to the identity."},
        {"oscillating-rho",
         "Space-filling-curve conjugates converging to the identity with a dense indeterminacy "
         "cloud."},
        {"homotopy-H", "Piecewise homotopy between the conjugated and parabolic families."},
        {"nonlift",
         "Cosine-coefficient family: exact inverse/fixed-point/contraction identities and the "
         "positive-diameter limit set of its canonical lift."},
        {"padic-gate", "The p-adic 1/p^2 identity gate trichotomy at p = 3."},
        {"padic-small-subgroups",
         "Unipotent subgroups inside arbitrarily small identity neighbourhoods over Q_p."},
        {"theorem1-consistency-sweep",
         "Finite-order conjugates never enter the p^-2 identity ball; Gauss norm "
         "multiplicativity."},
    };
    return registry;
}

ScenarioResult run_scenario(const std::string& name, unsigned seed) {
    if (name == "unbounded-degree") return scn_unbounded_degree(seed);
    if (name == "pointwise-failure") return scn_pointwise_failure(seed);
    if (name == "moving-lines") return scn_moving_lines(seed);
    if (name == "sigma-involution") return scn_sigma_involution(seed);
    if (name == "oscillating-rho") return scn_oscillating_rho(seed);
    if (name == "homotopy-H") return scn_homotopy(seed);
    if (name == "nonlift") return scn_nonlift(seed);
    if (name == "padic-gate") return scn_padic_gate(seed);
    if (name == "padic-small-subgroups") return scn_small_subgroups(seed);
    if (name == "theorem1-consistency-sweep") return scn_theorem1_sweep(seed);
    throw UnknownScenario("no scenario named '" + name + "'");
}

}  // namespace birkit
