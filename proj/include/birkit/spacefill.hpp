#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "birkit/maps.hpp"
#include "birkit/wspace.hpp"

namespace birkit {

// Cell coordinates (in [0, 2^depth)) of the Hilbert curve cell with the given
// index, for any dimension.
std::vector<std::uint32_t> hilbert_axes(unsigned __int128 index, int dims, int depth);

// Continuous space-filling evaluator: piecewise-linear interpolation through
// the corners of consecutive Hilbert cells, scaled onto [0,1]^dims.
// Continuity modulus |h(t)-h(s)|_inf <= C |t-s|^{1/dims} at curve resolution.
std::vector<double> hilbert_point(double t, int dims, int depth);

// Generalized Euler-angle parametrizations: continuous surjections from the
// unit box onto SU(3) resp. SO(3); the box origin maps to the identity.
Eigen::Matrix3cd su3_from_box(const std::array<double, 8>& x);
Eigen::Matrix3d so3_from_box(const std::array<double, 3>& x);

struct UnitaryPoint {
    Eigen::Matrix3cd U;
    std::array<double, 8> source{};
    double unitarity_residual() const { return (U.adjoint() * U - Eigen::Matrix3cd::Identity()).norm(); }
    double det_residual() const { return std::abs(U.determinant() - Cx{1, 0}); }
};

// Space-filling curve into SU(3): the Hilbert curve composed with the Euler
// angle chart, on the parameter interval [-1, 1].
Eigen::Matrix3cd sigma_su3(double s, int depth);

// sigma(sin 1)^{-1} * sigma(sin(1/t)); exactly the identity at t = 1.
Eigen::Matrix3cd sigma_hat(double t, int depth);

CxMapTuple linear_tuple_from_matrix(const Eigen::Matrix3cd& U);

// U o f o U^{-1} as a tuple; conjugation by the exact identity matrix is the
// identity operation on tuples.
CxMapTuple conjugate_tuple(const Eigen::Matrix3cd& U, const CxMapTuple& f);

// [x0^2 : x0x1 : x0x2 + t(1-t) x1^2]
CxMapTuple f_t_tuple(double t);
RatMapTuple f_t_tuple_exact(const Rat& t);

// The oscillating conjugated family; defined as the identity tuple at t = 0.
CxMapTuple rho_oscillating(double t, int depth);

// Piecewise homotopy between the oscillating family and t -> f_t.
CxMapTuple homotopy_H(double s, double t, int depth);

struct CloudResult {
    std::vector<std::vector<Cx>> points;  // unit representatives in the plane
    double covering_radius = 0;
    int net_size = 0;
};

// Images of [0:0:1] under sigma_hat at nested parameter samples in (0, eps);
// covering radius measured against a fixed quasi-random reference net.
CloudResult indeterminacy_cloud(double eps, int count, int depth, int net_size = 10000,
                                unsigned net_seed = 0);

// [x0 P : x1 P : x2 P + t x0 x1] with P = c x0 + x1; exact runs take the
// cosine value c as an independent rational parameter. The inverse (t -> -t)
// is certified and attached.
RatBirationalMap nonlift_family_exact(const Rat& t, const Rat& c);
CxMapTuple nonlift_family_float(double t);

struct ObstructionReport {
    bool symbolic_vanishing = false;  // first two lift components vanish on the line
    struct LimitInfo {
        double s = 0;
        double match_residual = 0;  // distance to (s x0 + x1) * identity
        double fiber_residual = 0;  // distance to the identity fibre
    };
    std::vector<LimitInfo> limits;
    std::vector<std::vector<double>> pairwise;  // wd distances between the limits
    double diameter = 0;
};

// The canonical lift of the non-lifting family along t_m(s) = 2pi/(arccos(s)+2pi m):
// every limit projects to the identity, yet the limit set keeps positive
// diameter, so no continuous lift can extend to t = 0.
ObstructionReport nonlift_obstruction_demo(const std::vector<double>& s_targets, int m_max = 100);

}  // namespace birkit
