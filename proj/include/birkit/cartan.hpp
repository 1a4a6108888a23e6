#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "birkit/maps.hpp"
#include "birkit/wspace.hpp"

namespace birkit {

using CxPoly = Poly<ComplexDomain>;

// One affine component of a chart map: a ratio of polynomials in the n chart
// variables.
struct RationalFnC {
    CxPoly num;
    CxPoly den;
};

// Dehomogenized self-map of an affine chart, with a stated domain ball on
// which the denominators are bounded away from zero (verified on a lattice
// at construction). Iterates are evaluated pointwise, never composed
// symbolically.
class ChartMap {
  public:
    ChartMap(std::vector<RationalFnC> comps, std::vector<Cx> center, double radius);

    // Polynomial components (denominator 1).
    static ChartMap from_polynomials(std::vector<CxPoly> comps, std::vector<Cx> center,
                                     double radius);

    // Dehomogenize a plane (or any-n) map tuple in the given chart.
    static ChartMap from_tuple(const CxMapTuple& t, int chart, std::vector<Cx> center,
                               double radius);

    int n() const { return static_cast<int>(comps_.size()); }
    const std::vector<RationalFnC>& components() const { return comps_; }
    const std::vector<Cx>& center() const { return center_; }
    double radius() const { return radius_; }

    std::vector<Cx> eval(const std::vector<Cx>& z) const;
    std::vector<Cx> eval_iter(const std::vector<Cx>& z, int iterations) const;

    // Holomorphic differential from the symbolic partial derivatives.
    Eigen::MatrixXcd jacobian(const std::vector<Cx>& z) const;

  private:
    std::vector<RationalFnC> comps_;
    std::vector<Cx> center_;
    double radius_;
    // quotient-rule partials, cached: d(num/den) = (num_j den - num den_j)/den^2
    std::vector<std::vector<CxPoly>> num_partials_;
    std::vector<std::vector<CxPoly>> den_partials_;
};

struct GridSpec {
    int per_axis = 5;  // lattice density over the 2n real axes
};

// Lattice over the 2n real coordinates of the complex ball.
std::vector<std::vector<Cx>> complex_ball_grid(const std::vector<Cx>& center, double radius,
                                               int n, int per_axis);

struct InvariantBody {
    double r = 0;
    int order_bound = 0;
    std::vector<std::vector<Cx>> members;  // sampled points with max_i ||f^i(z)|| <= r
    double invariance_residual = 0;
    double order_residual = 0;  // max ||f^D(z) - z|| / (1 + ||z||) over the grid
};

enum class BodyRefusalReason { NotOrderD, NoInvariance, EmptyBody };

struct BodyRefusal {
    BodyRefusalReason reason;
    double measure = 0;
};

const char* refusal_name(BodyRefusalReason r);

struct BodyOptions {
    GridSpec grid;
    double order_tol = 1e-8;
    double invariance_tol = 1e-8;
};

// Sampled version of the invariant convex body: membership by iterate norms,
// invariance and the order hypothesis measured, never assumed.
std::variant<InvariantBody, BodyRefusal> build_body(const ChartMap& f, int order_bound, double r,
                                                    double r_prime, const BodyOptions& opt = {});

struct FixedPointResult {
    bool found = false;
    std::vector<Cx> point;
    double residual = 0;
};

// Seeded, damped Newton on f(z) - z; reports honestly when no fixed point is
// located within the budget.
FixedPointResult find_fixed_point(const ChartMap& f, const InvariantBody& body,
                                  int max_steps = 50, int max_seeds = 10);

enum class GateKind { ForcedIdentity, NotForced, NotApplicable };

struct CartanVerdict {
    GateKind kind = GateKind::NotApplicable;
    std::string reason;                 // for NotApplicable
    std::vector<Cx> eigenvalues;         // of Df at the fixed point
    std::vector<Cx> fixed_point;
    double differential_deviation = 0;  // ||Df(P) - I||_F
    double fixed_point_residual = 0;
    double invariance_residual = 0;
    double order_residual = 0;
};

struct CartanOptions {
    double r = 0.5;
    double r_prime = 1.0;
    BodyOptions body;
    double identity_tol = 1e-8;  // threshold on ||Df(P) - I||
};

// Identity gate: a map with an invariant body, a fixed point, and identity
// differential is forced to be the identity on the chart.
CartanVerdict cartan_gate(const ChartMap& f, int order_bound, const CartanOptions& opt = {});

struct HessianCheck {
    bool positive_definite = false;
    double min_eigenvalue = 0;
    std::vector<Cx> witness;  // point of failure when not positive definite
};

// Real Hessian of z -> ||f^i(z)||^2 (2n real variables) by central finite
// differences on the grid.
HessianCheck hessian_convexity_check(const ChartMap& f, int iterate, double radius,
                                     const GridSpec& grid = {}, double fd_step = 1e-4);

// Finite-difference Jacobian for cross-checking the symbolic differential.
Eigen::MatrixXcd finite_difference_jacobian(const ChartMap& f, const std::vector<Cx>& z,
                                            double step = 1e-5);

}  // namespace birkit
