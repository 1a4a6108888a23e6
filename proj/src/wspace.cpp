#include "birkit/wspace.hpp"

#include <algorithm>
#include <cmath>

namespace birkit {

namespace {

void gen_monomials(int nvars, int degree, int pos, ExpVec& cur, std::vector<ExpVec>& out) {
    if (pos == nvars - 1) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int k = degree; k >= 0; --k) {
        cur[pos] = k;
        gen_monomials(nvars, degree - k, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

double vec_norm(const std::vector<Cx>& v) {
    double s = 0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

Cx vec_dot(const std::vector<Cx>& a, const std::vector<Cx>& b) {
    Cx s{0, 0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

}  // namespace

std::vector<ExpVec> monomial_basis(int nvars, int degree) {
    std::vector<ExpVec> out;
    ExpVec cur(nvars, 0);
    gen_monomials(nvars, degree, 0, cur, out);
    std::sort(out.begin(), out.end(), GrlexDesc{});
    return out;
}

CxHomogPoly to_complex(const RatHomogPoly& f, double tol) {
    ComplexDomain dom{tol};
    Poly<ComplexDomain> p(dom, f.nvars());
    for (const auto& [e, c] : f.terms()) p.add_term(e, Cx(static_cast<double>(c), 0.0));
    return CxHomogPoly::from_poly(p, f.degree());
}

CxMapTuple to_complex(const RatMapTuple& t, double tol) {
    std::vector<CxHomogPoly> comps;
    for (const auto& c : t.components()) comps.push_back(to_complex(c, tol));
    return CxMapTuple(std::move(comps));
}

CxMapTuple to_complex(const MapTuple<RealDomain>& t, double tol) {
    ComplexDomain dom{tol};
    std::vector<CxHomogPoly> comps;
    for (const auto& c : t.components()) {
        Poly<ComplexDomain> p(dom, c.nvars());
        for (const auto& [e, v] : c.terms()) p.add_term(e, Cx(v, 0.0));
        comps.push_back(CxHomogPoly::from_poly(p, c.degree()));
    }
    return CxMapTuple(std::move(comps));
}

WdPoint WdPoint::from_tuple(const CxMapTuple& t) {
    auto basis = monomial_basis(t.nvars(), t.degree());
    std::vector<Cx> coeff;
    coeff.reserve(basis.size() * t.nvars());
    for (int i = 0; i < t.nvars(); ++i) {
        const auto& terms = t.component(i).terms();
        for (const auto& m : basis) {
            auto it = terms.find(m);
            coeff.push_back(it == terms.end() ? Cx{0, 0} : it->second);
        }
    }
    double norm = vec_norm(coeff);
    if (norm == 0) throw ZeroTuple("cannot normalize the zero tuple");
    for (auto& c : coeff) c /= norm;
    ComplexDomain dom = t.domain();
    std::vector<CxHomogPoly> comps;
    for (const auto& c : t.components())
        comps.push_back(c.scalar_mul(Cx{1.0 / norm, 0.0}));
    return WdPoint(CxMapTuple(std::move(comps)), std::move(coeff));
}

WdPoint WdPoint::scaled(Cx s) const {
    std::vector<CxHomogPoly> comps;
    for (const auto& c : tuple_.components()) comps.push_back(c.scalar_mul(s));
    std::vector<Cx> coeff = coeff_;
    for (auto& c : coeff) c *= s;
    return WdPoint(CxMapTuple(std::move(comps)), std::move(coeff));
}

double wd_distance(const WdPoint& a, const WdPoint& b) {
    if (a.n() != b.n()) throw DimensionMismatch("points live in different spaces");
    if (a.degree() != b.degree()) throw DegreeMismatch("points live at different degrees");
    // Optimal unit scalar in closed form, then the difference vector directly;
    // the inner-product route loses half the digits near zero distance. The
    // arguments are ordered canonically first, so symmetry is bit-exact.
    const std::vector<Cx>* x = &a.coeff();
    const std::vector<Cx>* y = &b.coeff();
    for (std::size_t i = 0; i < x->size(); ++i) {
        double xr = (*x)[i].real(), yr = (*y)[i].real();
        if (xr != yr) {
            if (xr > yr) std::swap(x, y);
            break;
        }
        double xi = (*x)[i].imag(), yi = (*y)[i].imag();
        if (xi != yi) {
            if (xi > yi) std::swap(x, y);
            break;
        }
    }
    Cx c = vec_dot(*x, *y);
    Cx lambda = std::abs(c) > 0 ? std::conj(c) / std::abs(c) : Cx{1, 0};
    double s = 0;
    for (std::size_t i = 0; i < x->size(); ++i) s += std::norm((*x)[i] - lambda * (*y)[i]);
    return std::sqrt(s);
}

IdFiberProjection project_to_identity_fiber(const WdPoint& p) {
    const int nv = p.tuple().nvars();
    const int d = p.degree();
    if (d < 1) throw DegreeMismatch("identity fibre needs degree >= 1");
    auto basis = monomial_basis(nv, d);
    auto cof_basis = monomial_basis(nv, d - 1);
    // index of a degree-d monomial inside the flattened component block
    auto index_of = [&](const ExpVec& e) {
        auto it = std::lower_bound(basis.begin(), basis.end(), e, GrlexDesc{});
        return static_cast<std::size_t>(it - basis.begin());
    };
    const auto& F = p.coeff();
    const std::size_t block = basis.size();

    // The fibre {H*(x0,...,xn)} is spanned by orthogonal vectors indexed by
    // the cofactor monomials; project componentwise.
    double proj2 = 0;
    std::vector<Cx> h(cof_basis.size());
    for (std::size_t k = 0; k < cof_basis.size(); ++k) {
        Cx s{0, 0};
        for (int j = 0; j < nv; ++j) {
            ExpVec e = cof_basis[k];
            e[j] += 1;
            s += F[j * block + index_of(e)];
        }
        h[k] = s / static_cast<double>(nv);
        proj2 += std::norm(h[k]) * nv;
    }
    double pn = std::sqrt(proj2);

    // Residual measured on the actual difference F - P(F); the distance to the
    // projectivized fibre rescales it by sqrt(2/(1+||P(F)||)).
    std::vector<Cx> pf(F.size(), Cx{0, 0});
    for (std::size_t k = 0; k < cof_basis.size(); ++k) {
        for (int j = 0; j < nv; ++j) {
            ExpVec e = cof_basis[k];
            e[j] += 1;
            pf[j * block + index_of(e)] += h[k];
        }
    }
    double perp2 = 0;
    for (std::size_t i = 0; i < F.size(); ++i) perp2 += std::norm(F[i] - pf[i]);
    double residual = pn >= 1.0 ? std::sqrt(perp2)
                                : std::sqrt(2.0 * perp2 / (1.0 + pn));

    IdFiberProjection out{residual, pn, std::nullopt};
    double hn = 0;
    for (const auto& c : h) hn += std::norm(c);
    hn = std::sqrt(hn);
    if (hn > 0) {
        ComplexDomain dom = p.tuple().domain();
        Poly<ComplexDomain> hp(dom, nv);
        for (std::size_t k = 0; k < cof_basis.size(); ++k) {
            Cx c = h[k] / hn;
            if (std::abs(c) > 1e-15) hp.add_term(cof_basis[k], c);
        }
        if (!hp.is_zero()) out.cofactor = CxHomogPoly::from_poly(hp, d - 1);
    }
    return out;
}

const char* verdict_name(ConvergenceVerdict v) {
    switch (v) {
        case ConvergenceVerdict::ConvergesToId: return "ConvergesToId";
        case ConvergenceVerdict::ConvergesToOther: return "ConvergesToOther";
        case ConvergenceVerdict::Diverges: return "Diverges";
        case ConvergenceVerdict::DegreeUnbounded: return "DegreeUnbounded";
    }
    return "?";
}

ConvergenceReport sequence_limit(const std::vector<CxMapTuple>& seq,
                                 const SequenceLimitOptions& opt) {
    if (seq.size() < 3) throw TooShort("sequence_limit needs at least three elements");
    const int d = seq.front().degree();
    const int n = seq.front().n();
    for (const auto& t : seq) {
        if (t.degree() != d) throw MixedDegrees("sequence elements have mixed degrees");
        if (t.n() != n) throw DimensionMismatch("sequence elements have mixed dimensions");
    }

    // Normalize and align the sign/phase of consecutive representatives.
    std::vector<WdPoint> pts;
    pts.reserve(seq.size());
    for (const auto& t : seq) {
        WdPoint w = WdPoint::from_tuple(t);
        if (!pts.empty()) {
            Cx c = vec_dot(pts.back().coeff(), w.coeff());
            if (std::abs(c) > 0) w = w.scaled(std::conj(c) / std::abs(c));
        }
        pts.push_back(std::move(w));
    }

    ConvergenceReport rep;
    rep.d = d;

    const std::size_t N = pts.size();
    std::vector<double> consecutive;
    for (std::size_t k = 0; k + 1 < N; ++k) consecutive.push_back(wd_distance(pts[k], pts[k + 1]));
    double settle = 0;
    for (std::size_t k = N > 4 ? N - 4 : 0; k + 1 < N; ++k)
        settle = std::max(settle, consecutive[k]);

    // Extrapolate the limit at 1/k -> 0 through geometrically spaced tail
    // nodes; for settled sequences this collapses to the last element.
    std::vector<std::size_t> nodes;
    for (std::size_t k = N; k >= 1; k = k / 2) {
        nodes.push_back(k);
        if (nodes.size() == 5 || k == 1) break;
    }
    std::vector<Cx> limit(pts.front().coeff().size(), Cx{0, 0});
    if (consecutive.back() < 1e-13) {
        limit = pts.back().coeff();
    } else {
        std::vector<double> eps;
        for (auto k : nodes) eps.push_back(1.0 / static_cast<double>(k));
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            double w = 1.0;
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                if (i == j) continue;
                w *= (0.0 - eps[j]) / (eps[i] - eps[j]);
            }
            const auto& v = pts[nodes[i] - 1].coeff();
            for (std::size_t t = 0; t < v.size(); ++t) limit[t] += w * v[t];
        }
        double nm = vec_norm(limit);
        if (nm < 0.1) {
            // Extrapolation collapsed; fall back to the last representative.
            limit = pts.back().coeff();
        } else {
            for (auto& c : limit) c /= nm;
        }
    }

    // Rebuild the limit as a tuple.
    auto basis = monomial_basis(n + 1, d);
    const std::size_t block = basis.size();
    ComplexDomain dom = seq.front().domain();
    std::vector<CxHomogPoly> comps;
    bool limit_ok = true;
    {
        double nm2 = 0;
        for (const auto& c : limit) nm2 += std::norm(c);
        if (nm2 == 0) limit_ok = false;
    }
    if (limit_ok) {
        for (int j = 0; j <= n; ++j) {
            Poly<ComplexDomain> p(dom, n + 1);
            for (std::size_t k = 0; k < block; ++k) {
                Cx c = limit[j * block + k];
                if (std::abs(c) > 1e-15) p.add_term(basis[k], c);
            }
            comps.push_back(CxHomogPoly::from_poly(p, d));
        }
    }
    std::optional<WdPoint> limit_pt;
    if (limit_ok) {
        bool all_zero = true;
        for (const auto& c : comps) all_zero = all_zero && c.is_zero();
        if (!all_zero) limit_pt = WdPoint::from_tuple(CxMapTuple(comps));
    }

    if (limit_pt) {
        for (std::size_t k = 0; k < N; ++k)
            rep.distance_trace.emplace_back(static_cast<int>(k + 1), wd_distance(pts[k], *limit_pt));
    } else {
        for (std::size_t k = 0; k < N; ++k)
            rep.distance_trace.emplace_back(static_cast<int>(k + 1), wd_distance(pts[k], pts.back()));
    }

    if (!limit_pt || settle > opt.settle_tol) {
        rep.verdict = ConvergenceVerdict::Diverges;
        return rep;
    }

    rep.limit = limit_pt;
    auto proj = project_to_identity_fiber(*limit_pt);
    if (proj.residual < opt.fiber_tol) {
        rep.verdict = ConvergenceVerdict::ConvergesToId;
        rep.reduced_limit_is_identity = true;
        rep.cofactor = proj.cofactor;
    } else {
        rep.verdict = ConvergenceVerdict::ConvergesToOther;
        rep.reduced_limit_is_identity = false;
    }
    return rep;
}

DegreeBoundResult degree_bounded_check(const std::vector<RatBirationalMap>& seq, int threshold) {
    DegreeBoundResult r;
    int dmax = 0;
    for (const auto& f : seq) {
        int d = reduce(f.tuple()).map.degree();
        r.trace.push_back(d);
        dmax = std::max(dmax, d);
    }
    r.max_degree = dmax;
    // Unbounded evidence: strictly increasing trace crossing the threshold.
    bool increasing = r.trace.size() >= 2;
    for (std::size_t i = 0; i + 1 < r.trace.size(); ++i)
        increasing = increasing && r.trace[i] < r.trace[i + 1];
    r.bounded = !(increasing && dmax > threshold);
    return r;
}

ConvergenceReport degree_unbounded_report(const DegreeBoundResult& r) {
    ConvergenceReport rep;
    rep.d = r.max_degree;
    rep.verdict = ConvergenceVerdict::DegreeUnbounded;
    rep.degree_trace = r.trace;
    return rep;
}

std::vector<std::vector<Cx>> chart_ball_grid(const ChartBall& ball, int n) {
    if (ball.per_axis < 1 || ball.radius <= 0) throw EmptyGrid("empty chart grid");
    if (static_cast<int>(ball.center.size()) != n)
        throw DimensionMismatch("chart center has wrong dimension");
    int axes = ball.real_grid ? n : 2 * n;
    std::vector<double> ticks;
    for (int i = 0; i < ball.per_axis; ++i) {
        double t = ball.per_axis == 1
                       ? 0.0
                       : -ball.radius + 2.0 * ball.radius * i / (ball.per_axis - 1);
        ticks.push_back(t);
    }
    std::vector<std::vector<Cx>> out;
    std::vector<int> idx(axes, 0);
    while (true) {
        std::vector<double> off(axes);
        double norm2 = 0;
        for (int a = 0; a < axes; ++a) {
            off[a] = ticks[idx[a]];
            norm2 += off[a] * off[a];
        }
        if (norm2 <= ball.radius * ball.radius + 1e-12) {
            std::vector<Cx> pt(ball.center);
            for (int a = 0; a < axes; ++a) {
                if (ball.real_grid)
                    pt[a] += off[a];
                else
                    pt[a / 2] += (a % 2 == 0) ? Cx{off[a], 0} : Cx{0, off[a]};
            }
            out.push_back(std::move(pt));
        }
        int a = 0;
        while (a < axes && ++idx[a] == ball.per_axis) idx[a++] = 0;
        if (a == axes) break;
    }
    if (out.empty()) throw EmptyGrid("no grid points inside the ball");
    return out;
}

std::vector<Cx> lift_chart_point(const std::vector<Cx>& x, int chart) {
    std::vector<Cx> lift;
    lift.reserve(x.size() + 1);
    for (int i = 0, j = 0; i <= static_cast<int>(x.size()); ++i) {
        if (i == chart)
            lift.push_back(Cx{1, 0});
        else
            lift.push_back(x[j++]);
    }
    double nm = vec_norm(lift);
    for (auto& c : lift) c /= nm;
    return lift;
}

std::variant<RegionCertificate, Refutation> uniform_certificate(
    const std::vector<std::pair<int, CxMapTuple>>& family, const CxMapTuple& target,
    const ChartBall& ball, const UniformCertOptions& opt) {
    if (family.empty()) throw TooShort("empty family");
    const int n = target.n();
    auto grid = chart_ball_grid(ball, n);

    // Evaluate the target once; any regularity failure refutes outright.
    std::vector<std::vector<Cx>> target_vals;
    for (const auto& x : grid) {
        auto lift = lift_chart_point(x, ball.chart);
        auto y = target.eval_raw(lift);
        if (vec_norm(y) < opt.denominator_floor_tol)
            return Refutation{RefutationReason::RegularityFailure, x, 0.0};
        target_vals.push_back(std::move(y));
    }

    RegionCertificate cert;
    cert.chart = ball.chart;
    cert.center = ball.center;
    cert.radius = ball.radius;
    cert.sample_grid = grid;
    cert.denominator_floor = std::numeric_limits<double>::infinity();

    std::vector<std::vector<double>> errors(family.size(), std::vector<double>(grid.size()));
    for (std::size_t fi = 0; fi < family.size(); ++fi) {
        const auto& [m, tup] = family[fi];
        double sup = 0;
        for (std::size_t gi = 0; gi < grid.size(); ++gi) {
            auto lift = lift_chart_point(grid[gi], ball.chart);
            auto y = tup.eval_raw(lift);
            double nm = vec_norm(y);
            if (nm < opt.denominator_floor_tol)
                return Refutation{RefutationReason::RegularityFailure, grid[gi], 0.0};
            cert.denominator_floor = std::min(cert.denominator_floor, nm);
            double err = chordal_distance(y, target_vals[gi]);
            errors[fi][gi] = err;
            sup = std::max(sup, err);
        }
        cert.sup_errors.emplace_back(m, sup);
    }

    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < cert.sup_errors.size(); ++i)
        decreasing = decreasing && cert.sup_errors[i + 1].second <= cert.sup_errors[i].second + 1e-12;
    bool small_final = cert.sup_errors.back().second < opt.tol_final;
    if (decreasing && small_final) return cert;

    // Not certified: look for a persistent pointwise failure.
    double worst = -1;
    std::size_t worst_gi = 0;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        double floor = std::numeric_limits<double>::infinity();
        for (std::size_t fi = 0; fi < family.size(); ++fi) floor = std::min(floor, errors[fi][gi]);
        if (floor > worst) {
            worst = floor;
            worst_gi = gi;
        }
    }
    if (worst >= opt.refute_floor)
        return Refutation{RefutationReason::PersistentError, grid[worst_gi], worst};
    return Refutation{RefutationReason::NotCertified, grid[worst_gi], worst};
}

}  // namespace birkit
