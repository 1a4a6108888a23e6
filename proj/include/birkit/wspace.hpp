#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "birkit/maps.hpp"

namespace birkit {

using CxHomogPoly = HomogPoly<ComplexDomain>;

// Monomials of the given total degree, graded-lex descending; the fixed
// coefficient basis used for all flattened tuple vectors.
std::vector<ExpVec> monomial_basis(int nvars, int degree);

CxMapTuple to_complex(const RatMapTuple& t, double tol = 1e-10);
CxMapTuple to_complex(const MapTuple<RealDomain>& t, double tol = 1e-10);
CxHomogPoly to_complex(const RatHomogPoly& f, double tol = 1e-10);

// Unit-norm coefficient-vector representative of a tuple in W_d.
class WdPoint {
  public:
    static WdPoint from_tuple(const CxMapTuple& t);

    const CxMapTuple& tuple() const { return tuple_; }
    const std::vector<Cx>& coeff() const { return coeff_; }
    int degree() const { return tuple_.degree(); }
    int n() const { return tuple_.n(); }

    // Multiply the representative by a unit scalar.
    WdPoint scaled(Cx unit_scalar) const;

  private:
    WdPoint(CxMapTuple t, std::vector<Cx> coeff) : tuple_(std::move(t)), coeff_(std::move(coeff)) {}
    CxMapTuple tuple_;
    std::vector<Cx> coeff_;
};

// min over unit scalars of the coefficient-vector distance; zero exactly for
// projectively equal representatives.
double wd_distance(const WdPoint& a, const WdPoint& b);

// Distance of the representative to the fibre {H * (x0 : ... : xn)} of the
// identity, together with the best cofactor H (unit coefficient norm). This
// is the float surrogate of dividing out a common factor.
struct IdFiberProjection {
    double residual;            // distance to the fibre in the wd metric
    double projection_norm;     // norm of the projection onto the fibre
    std::optional<CxHomogPoly> cofactor;
};
IdFiberProjection project_to_identity_fiber(const WdPoint& p);

enum class ConvergenceVerdict { ConvergesToId, ConvergesToOther, Diverges, DegreeUnbounded };

const char* verdict_name(ConvergenceVerdict v);

struct ConvergenceReport {
    int d = 0;
    std::optional<WdPoint> limit;
    std::optional<CxHomogPoly> cofactor;
    bool reduced_limit_is_identity = false;
    std::vector<std::pair<int, double>> distance_trace;  // (1-based index, distance)
    ConvergenceVerdict verdict = ConvergenceVerdict::Diverges;
    std::vector<int> degree_trace;  // filled for DegreeUnbounded reports
};

struct SequenceLimitOptions {
    double settle_tol = 1e-2;  // consecutive-distance bound for a declared limit
    double fiber_tol = 1e-6;   // residual accepted for a cofactor extraction
};

// Normalize, align phases, extrapolate the limit from the tail, and classify.
ConvergenceReport sequence_limit(const std::vector<CxMapTuple>& seq,
                                 const SequenceLimitOptions& opt = {});

struct DegreeBoundResult {
    bool bounded = false;
    int max_degree = 0;
    std::vector<int> trace;
};

// Reduced degrees of the sequence; Unbounded once the trace strictly
// increases past the caller threshold.
DegreeBoundResult degree_bounded_check(const std::vector<RatBirationalMap>& seq, int threshold);

ConvergenceReport degree_unbounded_report(const DegreeBoundResult& r);

// Affine-chart ball with a deterministic lattice grid.
struct ChartBall {
    int chart = 0;
    std::vector<Cx> center;  // affine chart coordinates, length n
    double radius = 0.5;
    int per_axis = 21;
    bool real_grid = true;  // lattice over the real axes only
};

struct RegionCertificate {
    int chart = 0;
    std::vector<Cx> center;
    double radius = 0;
    std::vector<std::vector<Cx>> sample_grid;
    std::vector<std::pair<int, double>> sup_errors;  // (m, sup over grid)
    double denominator_floor = 0;
};

enum class RefutationReason { RegularityFailure, PersistentError, NotCertified };

struct Refutation {
    RefutationReason reason = RefutationReason::NotCertified;
    std::vector<Cx> witness;  // chart coordinates
    double floor = 0;         // error level that persists at the witness
};

struct UniformCertOptions {
    double tol_final = 1e-3;             // final sup-error accepted for a certificate
    double denominator_floor_tol = 1e-9;  // regularity threshold for ||F_m(x)||
    double refute_floor = 1e-2;           // persistent error declared a refutation
};

// Sampled locally-uniform-convergence check of the family against the target
// on the chart ball.
std::variant<RegionCertificate, Refutation> uniform_certificate(
    const std::vector<std::pair<int, CxMapTuple>>& family, const CxMapTuple& target,
    const ChartBall& ball, const UniformCertOptions& opt = {});

// Grid points of the ball (chart coordinates).
std::vector<std::vector<Cx>> chart_ball_grid(const ChartBall& ball, int n);

// Homogeneous unit-norm lift of a chart point.
std::vector<Cx> lift_chart_point(const std::vector<Cx>& x, int chart);

}  // namespace birkit
