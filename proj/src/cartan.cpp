#include "birkit/cartan.hpp"

#include <algorithm>
#include <cmath>

namespace birkit {

namespace {

constexpr double kDenFloor = 1e-9;

double vec_norm(const std::vector<Cx>& v) {
    double s = 0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

std::vector<Cx> vec_sub(const std::vector<Cx>& a, const std::vector<Cx>& b) {
    std::vector<Cx> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

ChartMap::ChartMap(std::vector<RationalFnC> comps, std::vector<Cx> center, double radius)
    : comps_(std::move(comps)), center_(std::move(center)), radius_(radius) {
    const int n = static_cast<int>(comps_.size());
    if (n < 1) throw DimensionMismatch("chart map needs at least one component");
    if (static_cast<int>(center_.size()) != n)
        throw DimensionMismatch("chart center has wrong dimension");
    for (const auto& c : comps_) {
        if (c.num.nvars() != n || c.den.nvars() != n)
            throw VarCountMismatch("chart components must use the chart variables");
        if (c.den.is_zero()) throw IterateEscapesDomain("zero denominator component");
    }
    // Denominators bounded away from zero on a coarse lattice of the ball.
    for (const auto& z : complex_ball_grid(center_, radius_, n, 5)) {
        for (const auto& c : comps_) {
            if (std::abs(c.den.eval(z)) < kDenFloor)
                throw IterateEscapesDomain("denominator vanishes on the domain ball");
        }
    }
    num_partials_.resize(n);
    den_partials_.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            num_partials_[i].push_back(comps_[i].num.derivative(j));
            den_partials_[i].push_back(comps_[i].den.derivative(j));
        }
    }
}

ChartMap ChartMap::from_polynomials(std::vector<CxPoly> comps, std::vector<Cx> center,
                                    double radius) {
    if (comps.empty()) throw DimensionMismatch("chart map needs components");
    ComplexDomain dom = comps.front().domain();
    std::vector<RationalFnC> fns;
    for (auto& c : comps) {
        CxPoly one = CxPoly::constant(dom, c.nvars(), dom.one());
        fns.push_back(RationalFnC{std::move(c), std::move(one)});
    }
    return ChartMap(std::move(fns), std::move(center), radius);
}

ChartMap ChartMap::from_tuple(const CxMapTuple& t, int chart, std::vector<Cx> center,
                              double radius) {
    std::vector<RationalFnC> fns;
    CxPoly den = dehomogenize(t.component(chart), chart);
    for (int i = 0; i < t.nvars(); ++i) {
        if (i == chart) continue;
        fns.push_back(RationalFnC{dehomogenize(t.component(i), chart), den});
    }
    return ChartMap(std::move(fns), std::move(center), radius);
}

std::vector<Cx> ChartMap::eval(const std::vector<Cx>& z) const {
    std::vector<Cx> out(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        Cx d = comps_[i].den.eval(z);
        if (std::abs(d) < kDenFloor)
            throw IterateEscapesDomain("denominator vanished during evaluation");
        out[i] = comps_[i].num.eval(z) / d;
    }
    return out;
}

std::vector<Cx> ChartMap::eval_iter(const std::vector<Cx>& z, int iterations) const {
    std::vector<Cx> cur = z;
    for (int i = 0; i < iterations; ++i) cur = eval(cur);
    return cur;
}

Eigen::MatrixXcd ChartMap::jacobian(const std::vector<Cx>& z) const {
    const int n = this->n();
    Eigen::MatrixXcd J(n, n);
    for (int i = 0; i < n; ++i) {
        Cx den = comps_[i].den.eval(z);
        Cx num = comps_[i].num.eval(z);
        for (int j = 0; j < n; ++j) {
            Cx dn = num_partials_[i][j].eval(z);
            Cx dd = den_partials_[i][j].eval(z);
            J(i, j) = (dn * den - num * dd) / (den * den);
        }
    }
    return J;
}

std::vector<std::vector<Cx>> complex_ball_grid(const std::vector<Cx>& center, double radius,
                                               int n, int per_axis) {
    if (per_axis < 1 || radius <= 0) throw EmptyGrid("empty complex ball grid");
    int axes = 2 * n;
    std::vector<double> ticks;
    for (int i = 0; i < per_axis; ++i)
        ticks.push_back(per_axis == 1 ? 0.0 : -radius + 2.0 * radius * i / (per_axis - 1));
    std::vector<std::vector<Cx>> out;
    std::vector<int> idx(axes, 0);
    while (true) {
        double norm2 = 0;
        for (int a = 0; a < axes; ++a) norm2 += ticks[idx[a]] * ticks[idx[a]];
        if (norm2 <= radius * radius + 1e-12) {
            std::vector<Cx> pt(center);
            for (int a = 0; a < axes; ++a)
                pt[a / 2] += (a % 2 == 0) ? Cx{ticks[idx[a]], 0} : Cx{0, ticks[idx[a]]};
            out.push_back(std::move(pt));
        }
        int a = 0;
        while (a < axes && ++idx[a] == per_axis) idx[a++] = 0;
        if (a == axes) break;
    }
    return out;
}

const char* refusal_name(BodyRefusalReason r) {
    switch (r) {
        case BodyRefusalReason::NotOrderD: return "NotOrderD";
        case BodyRefusalReason::NoInvariance: return "NoInvariance";
        case BodyRefusalReason::EmptyBody: return "EmptyBody";
    }
    return "?";
}

std::variant<InvariantBody, BodyRefusal> build_body(const ChartMap& f, int order_bound, double r,
                                                    double r_prime, const BodyOptions& opt) {
    if (r >= r_prime) throw ParamOutOfRange("body radius must be smaller than the domain radius");
    const int n = f.n();
    auto grid = complex_ball_grid(f.center(), r_prime, n, opt.grid.per_axis);

    // Iterate norms about the chart origin and the order-D hypothesis.
    double order_residual = 0;
    std::vector<std::vector<double>> iter_norms(grid.size());
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        std::vector<Cx> cur = grid[gi];
        for (int i = 1; i <= order_bound; ++i) {
            cur = f.eval(cur);
            iter_norms[gi].push_back(vec_norm(cur));
        }
        double dev = vec_norm(vec_sub(cur, grid[gi])) / (1.0 + vec_norm(grid[gi]));
        order_residual = std::max(order_residual, dev);
    }
    if (order_residual > opt.order_tol)
        return BodyRefusal{BodyRefusalReason::NotOrderD, order_residual};

    InvariantBody body;
    body.r = r;
    body.order_bound = order_bound;
    body.order_residual = order_residual;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        double worst = 0;
        for (double nm : iter_norms[gi]) worst = std::max(worst, nm);
        if (worst <= r) body.members.push_back(grid[gi]);
    }
    if (body.members.empty()) return BodyRefusal{BodyRefusalReason::EmptyBody, 0};

    // f(B) inside B, measured through one extra iterate.
    double violation = 0;
    for (const auto& z : body.members) {
        std::vector<Cx> cur = f.eval(z);
        double worst = 0;
        for (int i = 1; i <= order_bound; ++i) {
            cur = f.eval(cur);
            worst = std::max(worst, vec_norm(cur));
        }
        violation = std::max(violation, worst - r);
    }
    body.invariance_residual = std::max(0.0, violation);
    if (body.invariance_residual > opt.invariance_tol)
        return BodyRefusal{BodyRefusalReason::NoInvariance, body.invariance_residual};
    return body;
}

FixedPointResult find_fixed_point(const ChartMap& f, const InvariantBody& body, int max_steps,
                                  int max_seeds) {
    const int n = f.n();
    std::vector<std::pair<double, const std::vector<Cx>*>> seeds;
    for (const auto& z : body.members) {
        try {
            seeds.emplace_back(vec_norm(vec_sub(f.eval(z), z)), &z);
        } catch (const IterateEscapesDomain&) {
        }
    }
    std::sort(seeds.begin(), seeds.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (static_cast<int>(seeds.size()) > max_seeds) seeds.resize(max_seeds);

    for (const auto& [d0, seed] : seeds) {
        std::vector<Cx> z = *seed;
        double res = d0;
        for (int step = 0; step < max_steps; ++step) {
            std::vector<Cx> fz;
            try {
                fz = f.eval(z);
            } catch (const IterateEscapesDomain&) {
                break;
            }
            Eigen::VectorXcd F(n);
            for (int i = 0; i < n; ++i) F(i) = fz[i] - z[i];
            res = F.norm();
            if (res < 1e-10) {
                // Inside the sampled hull, up to one grid spacing.
                if (vec_norm(z) <= body.r * 1.05 + 0.1)
                    return FixedPointResult{true, z, res};
                break;
            }
            Eigen::MatrixXcd J = f.jacobian(z) - Eigen::MatrixXcd::Identity(n, n);
            Eigen::VectorXcd dz;
            Eigen::FullPivLU<Eigen::MatrixXcd> lu(J);
            if (lu.isInvertible()) {
                dz = lu.solve(F);
            } else {
                // Singular Newton step: damped least-squares fallback.
                dz = J.completeOrthogonalDecomposition().solve(F);
            }
            // Damping: halve until the residual improves.
            double scale = 1.0;
            bool moved = false;
            for (int halving = 0; halving < 8; ++halving) {
                std::vector<Cx> cand(n);
                for (int i = 0; i < n; ++i) cand[i] = z[i] - scale * dz(i);
                try {
                    std::vector<Cx> fc = f.eval(cand);
                    double newres = vec_norm(vec_sub(fc, cand));
                    if (newres < res) {
                        z = cand;
                        moved = true;
                        break;
                    }
                } catch (const IterateEscapesDomain&) {
                }
                scale *= 0.5;
            }
            if (!moved) break;
        }
        std::vector<Cx> fz;
        try {
            fz = f.eval(z);
        } catch (const IterateEscapesDomain&) {
            continue;
        }
        double final_res = vec_norm(vec_sub(fz, z));
        if (final_res < 1e-10 && vec_norm(z) <= body.r * 1.05 + 0.1)
            return FixedPointResult{true, z, final_res};
    }
    return FixedPointResult{false, {}, 0};
}

CartanVerdict cartan_gate(const ChartMap& f, int order_bound, const CartanOptions& opt) {
    CartanVerdict v;
    auto body_or = build_body(f, order_bound, opt.r, opt.r_prime, opt.body);
    if (std::holds_alternative<BodyRefusal>(body_or)) {
        const auto& ref = std::get<BodyRefusal>(body_or);
        v.kind = GateKind::NotApplicable;
        v.reason = refusal_name(ref.reason);
        v.order_residual = ref.measure;
        return v;
    }
    const auto& body = std::get<InvariantBody>(body_or);
    v.invariance_residual = body.invariance_residual;
    v.order_residual = body.order_residual;

    auto fp = find_fixed_point(f, body);
    if (!fp.found) {
        v.kind = GateKind::NotApplicable;
        v.reason = "NoFixedPoint";
        return v;
    }
    v.fixed_point = fp.point;
    v.fixed_point_residual = fp.residual;

    Eigen::MatrixXcd J = f.jacobian(fp.point);
    Eigen::MatrixXcd dev = J - Eigen::MatrixXcd::Identity(f.n(), f.n());
    v.differential_deviation = dev.norm();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(J);
    for (int i = 0; i < f.n(); ++i) v.eigenvalues.push_back(es.eigenvalues()(i));
    std::sort(v.eigenvalues.begin(), v.eigenvalues.end(), [](const Cx& a, const Cx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    v.kind = v.differential_deviation < opt.identity_tol ? GateKind::ForcedIdentity
                                                         : GateKind::NotForced;
    return v;
}

HessianCheck hessian_convexity_check(const ChartMap& f, int iterate, double radius,
                                     const GridSpec& grid, double fd_step) {
    const int n = f.n();
    auto pts = complex_ball_grid(f.center(), radius, n, grid.per_axis);
    auto h = [&](const std::vector<double>& u) {
        std::vector<Cx> z(n);
        for (int i = 0; i < n; ++i) z[i] = Cx{u[2 * i], u[2 * i + 1]};
        auto y = f.eval_iter(z, iterate);
        double s = 0;
        for (const auto& c : y) s += std::norm(c);
        return s;
    };

    HessianCheck out;
    out.positive_definite = true;
    out.min_eigenvalue = std::numeric_limits<double>::infinity();
    const int dim = 2 * n;
    for (const auto& z : pts) {
        std::vector<double> u(dim);
        for (int i = 0; i < n; ++i) {
            u[2 * i] = z[i].real();
            u[2 * i + 1] = z[i].imag();
        }
        double nm = vec_norm(z);
        double s = fd_step * (1.0 + nm);
        if (s < 1e-12) throw StepSizeUnderflow("finite-difference step underflow");
        Eigen::MatrixXd H(dim, dim);
        double h0 = h(u);
        for (int a = 0; a < dim; ++a) {
            for (int b = a; b < dim; ++b) {
                double val;
                if (a == b) {
                    auto up = u, dn = u;
                    up[a] += s;
                    dn[a] -= s;
                    val = (h(up) - 2 * h0 + h(dn)) / (s * s);
                } else {
                    auto pp = u, pm = u, mp = u, mm = u;
                    pp[a] += s;
                    pp[b] += s;
                    pm[a] += s;
                    pm[b] -= s;
                    mp[a] -= s;
                    mp[b] += s;
                    mm[a] -= s;
                    mm[b] -= s;
                    val = (h(pp) - h(pm) - h(mp) + h(mm)) / (4 * s * s);
                }
                H(a, b) = val;
                H(b, a) = val;
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
        double min_eig = es.eigenvalues().minCoeff();
        if (min_eig < out.min_eigenvalue) out.min_eigenvalue = min_eig;
        if (min_eig <= 0 && out.positive_definite) {
            out.positive_definite = false;
            out.witness = z;
        }
    }
    return out;
}

Eigen::MatrixXcd finite_difference_jacobian(const ChartMap& f, const std::vector<Cx>& z,
                                            double step) {
    const int n = f.n();
    Eigen::MatrixXcd J(n, n);
    for (int j = 0; j < n; ++j) {
        auto zp = z, zm = z;
        zp[j] += Cx{step, 0};
        zm[j] -= Cx{step, 0};
        auto fp = f.eval(zp), fm = f.eval(zm);
        for (int i = 0; i < n; ++i) J(i, j) = (fp[i] - fm[i]) / Cx{2 * step, 0};
    }
    return J;
}

}  // namespace birkit
