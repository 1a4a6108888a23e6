#include "birkit/spacefill.hpp"

#include <cmath>
#include <random>

namespace birkit {

namespace {

// Transposed-index to axes transform of the Hilbert curve (Gray decode plus
// exchange/invert rounds).
void transpose_to_axes(std::vector<std::uint32_t>& X, int bits, int dims) {
    std::uint32_t N = std::uint32_t(2) << (bits - 1);
    std::uint32_t t = X[dims - 1] >> 1;
    for (int i = dims - 1; i > 0; --i) X[i] ^= X[i - 1];
    X[0] ^= t;
    for (std::uint32_t Q = 2; Q != N; Q <<= 1) {
        std::uint32_t P = Q - 1;
        for (int i = dims - 1; i >= 0; --i) {
            if (X[i] & Q) {
                X[0] ^= P;
            } else {
                t = (X[0] ^ X[i]) & P;
                X[0] ^= t;
                X[i] ^= t;
            }
        }
    }
}

Eigen::Matrix3cd rot12(double ang) {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
    m(0, 0) = std::cos(ang);
    m(0, 1) = std::sin(ang);
    m(1, 0) = -std::sin(ang);
    m(1, 1) = std::cos(ang);
    return m;
}

Eigen::Matrix3cd rot13(double ang) {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
    m(0, 0) = std::cos(ang);
    m(0, 2) = std::sin(ang);
    m(2, 0) = -std::sin(ang);
    m(2, 2) = std::cos(ang);
    return m;
}

Eigen::Matrix3cd phase3(double ang) {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    m(0, 0) = std::polar(1.0, ang);
    m(1, 1) = std::polar(1.0, -ang);
    m(2, 2) = Cx{1, 0};
    return m;
}

Eigen::Matrix3cd phase8(double ang) {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    const double s3 = std::sqrt(3.0);
    m(0, 0) = std::polar(1.0, ang / s3);
    m(1, 1) = std::polar(1.0, ang / s3);
    m(2, 2) = std::polar(1.0, -2.0 * ang / s3);
    return m;
}

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

std::vector<std::uint32_t> hilbert_axes(unsigned __int128 index, int dims, int depth) {
    std::vector<std::uint32_t> X(dims, 0);
    // Interleave the index bits, most significant first, across the axes.
    for (int bit = 0; bit < dims * depth; ++bit) {
        int level = depth - 1 - bit / dims;
        int axis = bit % dims;
        if ((index >> (dims * depth - 1 - bit)) & 1) X[axis] |= (std::uint32_t(1) << level);
    }
    transpose_to_axes(X, depth, dims);
    return X;
}

std::vector<double> hilbert_point(double t, int dims, int depth) {
    if (t < 0.0 || t > 1.0) throw ParamOutOfRange("curve parameter must lie in [0,1]");
    if (dims < 2 || dims > 8) throw ParamOutOfRange("curve dimension must lie in [2,8]");
    if (depth < 1 || depth > 10) throw ParamOutOfRange("curve depth must lie in [1,10]");

    const int total_bits = dims * depth;
    const unsigned __int128 last = ((static_cast<unsigned __int128>(1) << total_bits)) - 1;
    long double u = static_cast<long double>(t) * static_cast<long double>(last);
    unsigned __int128 i0 = u >= static_cast<long double>(last)
                               ? last
                               : static_cast<unsigned __int128>(u);
    long double frac = u - static_cast<long double>(i0);
    if (frac < 0.0L) frac = 0.0L;
    if (frac > 1.0L) frac = 1.0L;
    unsigned __int128 i1 = i0 < last ? i0 + 1 : i0;

    auto a0 = hilbert_axes(i0, dims, depth);
    auto a1 = hilbert_axes(i1, dims, depth);
    const double scale = static_cast<double>((std::uint32_t(1) << depth) - 1);
    std::vector<double> out(dims);
    for (int i = 0; i < dims; ++i) {
        double c0 = a0[i], c1 = a1[i];
        double v = (c0 + static_cast<double>(frac) * (c1 - c0)) / (scale > 0 ? scale : 1.0);
        out[i] = std::min(1.0, std::max(0.0, v));
    }
    return out;
}

Eigen::Matrix3cd su3_from_box(const std::array<double, 8>& x) {
    const double a1 = 2 * kPi * x[0];
    const double a2 = kPi * x[1];
    const double a3 = 2 * kPi * x[2];
    const double a4 = kPi * x[3];
    const double a5 = 2 * kPi * x[4];
    const double a6 = kPi * x[5];
    const double a7 = 2 * kPi * x[6];
    const double a8 = 2 * std::sqrt(3.0) * kPi * x[7];
    return phase3(a1) * rot12(a2) * phase3(a3) * rot13(a4) * phase3(a5) * rot12(a6) *
           phase3(a7) * phase8(a8);
}

Eigen::Matrix3d so3_from_box(const std::array<double, 3>& x) {
    const double a = 2 * kPi * x[0];
    const double b = kPi * x[1];
    const double c = 2 * kPi * x[2];
    Eigen::Matrix3d Rz1 = Eigen::Matrix3d::Identity();
    Rz1(0, 0) = std::cos(a);
    Rz1(0, 1) = -std::sin(a);
    Rz1(1, 0) = std::sin(a);
    Rz1(1, 1) = std::cos(a);
    Eigen::Matrix3d Rx = Eigen::Matrix3d::Identity();
    Rx(1, 1) = std::cos(b);
    Rx(1, 2) = -std::sin(b);
    Rx(2, 1) = std::sin(b);
    Rx(2, 2) = std::cos(b);
    Eigen::Matrix3d Rz2 = Eigen::Matrix3d::Identity();
    Rz2(0, 0) = std::cos(c);
    Rz2(0, 1) = -std::sin(c);
    Rz2(1, 0) = std::sin(c);
    Rz2(1, 1) = std::cos(c);
    return Rz1 * Rx * Rz2;
}

Eigen::Matrix3cd sigma_su3(double s, int depth) {
    if (s < -1.0 || s > 1.0) throw ParamOutOfRange("curve argument must lie in [-1,1]");
    auto box = hilbert_point((1.0 + s) / 2.0, 8, depth);
    std::array<double, 8> x{};
    for (int i = 0; i < 8; ++i) x[i] = box[i];
    return su3_from_box(x);
}

Eigen::Matrix3cd sigma_hat(double t, int depth) {
    if (t <= 0.0 || t > 1.0) throw ParamOutOfRange("sigma_hat needs t in (0,1]");
    if (t == 1.0) return Eigen::Matrix3cd::Identity();
    Eigen::Matrix3cd u1 = sigma_su3(std::sin(1.0), depth);
    Eigen::Matrix3cd ut = sigma_su3(std::sin(1.0 / t), depth);
    return u1.adjoint() * ut;
}

CxMapTuple linear_tuple_from_matrix(const Eigen::Matrix3cd& U) {
    ComplexDomain dom;
    std::vector<std::vector<Cx>> m(3, std::vector<Cx>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = U(i, j);
    return linear_tuple(dom, m);
}

CxMapTuple conjugate_tuple(const Eigen::Matrix3cd& U, const CxMapTuple& f) {
    if (U.isIdentity(0.0)) return f;
    CxMapTuple a = linear_tuple_from_matrix(U);
    CxMapTuple ainv = linear_tuple_from_matrix(U.adjoint());
    return a.substitute(f.substitute(ainv));
}

CxMapTuple f_t_tuple(double t) {
    ComplexDomain dom;
    auto x = [&](int i) { return CxHomogPoly::variable(dom, 3, i); };
    CxHomogPoly third = x(0) * x(2) + (x(1) * x(1)).scalar_mul(Cx{t * (1.0 - t), 0});
    return CxMapTuple({x(0) * x(0), x(0) * x(1), third});
}

RatMapTuple f_t_tuple_exact(const Rat& t) {
    RationalDomain dom;
    auto x = [&](int i) { return RatHomogPoly::variable(dom, 3, i); };
    RatHomogPoly third = x(0) * x(2) + (x(1) * x(1)).scalar_mul(t * (1 - t));
    return RatMapTuple({x(0) * x(0), x(0) * x(1), third});
}

CxMapTuple rho_oscillating(double t, int depth) {
    if (t < 0.0 || t > 1.0) throw ParamOutOfRange("family parameter must lie in [0,1]");
    ComplexDomain dom;
    if (t == 0.0) return CxMapTuple::identity(dom, 2);
    return conjugate_tuple(sigma_hat(t, depth), f_t_tuple(t));
}

CxMapTuple homotopy_H(double s, double t, int depth) {
    if (s < 0.0 || s > 1.0 || t < 0.0 || t > 1.0)
        throw ParamOutOfRange("homotopy parameters must lie in [0,1]^2");
    if (t >= s) return rho_oscillating(t, depth);
    return conjugate_tuple(sigma_hat(s, depth), f_t_tuple(t));
}

namespace {

// Base-2 van der Corput sequence: nested prefixes for growing sample counts.
double van_der_corput(std::uint32_t i) {
    double v = 0, base = 0.5;
    while (i) {
        if (i & 1) v += base;
        base *= 0.5;
        i >>= 1;
    }
    return v;
}

}  // namespace

CloudResult indeterminacy_cloud(double eps, int count, int depth, int net_size,
                                unsigned net_seed) {
    if (eps <= 0.0 || eps >= 1.0) throw ParamOutOfRange("eps must lie in (0,1)");
    if (count < 1) throw ParamOutOfRange("need at least one sample");

    CloudResult out;
    out.net_size = net_size;
    for (int i = 1; i <= count; ++i) {
        double t = eps * (van_der_corput(static_cast<std::uint32_t>(i)) * 0.999 + 5e-4);
        Eigen::Matrix3cd U = sigma_hat(t, depth);
        Eigen::Vector3cd q = U.col(2);  // image of [0:0:1]
        out.points.push_back({q(0), q(1), q(2)});
    }

    // Fixed quasi-uniform reference net on the plane (complex Gaussians,
    // normalized), deterministic in the seed.
    std::mt19937 rng(net_seed);
    std::normal_distribution<double> g(0.0, 1.0);
    double radius = 0;
    std::vector<Cx> net_pt(3);
    for (int i = 0; i < net_size; ++i) {
        double nn = 0;
        for (int k = 0; k < 3; ++k) {
            net_pt[k] = Cx{g(rng), g(rng)};
            nn += std::norm(net_pt[k]);
        }
        nn = std::sqrt(nn);
        for (auto& c : net_pt) c /= nn;
        double best = 2.0;
        for (const auto& q : out.points) {
            double d = chordal_distance(net_pt, q);
            if (d < best) best = d;
        }
        radius = std::max(radius, best);
    }
    out.covering_radius = radius;
    return out;
}

RatBirationalMap nonlift_family_exact(const Rat& t, const Rat& c) {
    if (c < -1 || c > 1) throw ParamOutOfRange("cosine surrogate must lie in [-1,1]");
    RationalDomain dom;
    auto x = [&](int i) { return RatHomogPoly::variable(dom, 3, i); };
    auto member = [&](const Rat& tt) {
        RatHomogPoly P = x(0).scalar_mul(c) + x(1);
        RatMapTuple raw({x(0) * P, x(1) * P, x(2) * P + (x(0) * x(1)).scalar_mul(tt)});
        return RatBirationalMap::from_tuple(raw.canonical(), true);
    };
    RatBirationalMap f = member(t);
    RatBirationalMap g = member(-t);
    auto cert = certify_inverse(f, g);
    if (!cert) throw Error("the t -> -t member failed inverse certification");
    return *cert;
}

CxMapTuple nonlift_family_float(double t) {
    if (t == 0.0) throw ParamOutOfRange("float mode needs t != 0");
    double c = std::cos(2.0 * kPi / t);
    ComplexDomain dom;
    auto x = [&](int i) { return CxHomogPoly::variable(dom, 3, i); };
    CxHomogPoly P = x(0).scalar_mul(Cx{c, 0}) + x(1);
    return CxMapTuple({x(0) * P, x(1) * P, x(2) * P + (x(0) * x(1)).scalar_mul(Cx{t, 0})});
}

ObstructionReport nonlift_obstruction_demo(const std::vector<double>& s_targets, int m_max) {
    if (s_targets.empty()) throw ParamOutOfRange("need at least one target");
    if (m_max < 5) throw ParamOutOfRange("need m_max >= 5");
    ObstructionReport rep;

    // Symbolic part, with the cosine value as a free variable: the first two
    // lift components vanish identically on the contracted line.
    {
        RationalDomain dom;
        // variables (x0, x1, x2, c)
        auto X0 = RatPoly::variable(dom, 4, 0);
        auto X1 = RatPoly::variable(dom, 4, 1);
        auto X2 = RatPoly::variable(dom, 4, 2);
        auto C = RatPoly::variable(dom, 4, 3);
        RatPoly P = C * X0 + X1;
        RatPoly h0 = X0 * P;
        RatPoly h1 = X1 * P;
        std::vector<RatPoly> onto_line{X0, RatPoly(dom, 4) - C * X0, X2, C};
        rep.symbolic_vanishing =
            h0.substitute(onto_line).is_zero() && h1.substitute(onto_line).is_zero();
    }

    ComplexDomain dom;
    auto x = [&](int i) { return CxHomogPoly::variable(dom, 3, i); };
    std::vector<WdPoint> limits;
    for (double s : s_targets) {
        if (s < -1.0 || s > 1.0) throw ParamOutOfRange("targets must lie in [-1,1]");
        double theta = std::acos(s);
        std::vector<CxMapTuple> seq;
        for (int m = 1; m <= m_max; ++m) {
            double t = 2.0 * kPi / (theta + 2.0 * kPi * m);
            seq.push_back(nonlift_family_float(t));
        }
        auto conv = sequence_limit(seq);
        if (!conv.limit) throw Error("lift sequence failed to settle");
        const WdPoint& lim = *conv.limit;

        // Expected limit representative: (s x0 + x1) * identity.
        CxHomogPoly P = x(0).scalar_mul(Cx{s, 0}) + x(1);
        WdPoint expect = WdPoint::from_tuple(CxMapTuple({x(0) * P, x(1) * P, x(2) * P}));

        ObstructionReport::LimitInfo info;
        info.s = s;
        info.match_residual = wd_distance(lim, expect);
        info.fiber_residual = project_to_identity_fiber(lim).residual;
        rep.limits.push_back(info);
        limits.push_back(lim);
    }

    rep.pairwise.assign(limits.size(), std::vector<double>(limits.size(), 0.0));
    for (std::size_t i = 0; i < limits.size(); ++i) {
        for (std::size_t j = 0; j < limits.size(); ++j) {
            double d = wd_distance(limits[i], limits[j]);
            rep.pairwise[i][j] = d;
            rep.diameter = std::max(rep.diameter, d);
        }
    }
    return rep;
}

}  // namespace birkit
