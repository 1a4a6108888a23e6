#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birkit/maps.hpp"
#include "birkit/poly.hpp"

namespace birkit {

// sup_I |a_I| as an exact power of p (or zero).
struct GaussNorm {
    bool zero = true;
    long long exponent = 0;  // norm = p^{-exponent} when nonzero
    double value(long long p) const {
        return zero ? 0.0 : std::pow(static_cast<double>(p), -static_cast<double>(exponent));
    }
};

template <CoefficientDomain D>
GaussNorm gauss_norm_of(const Poly<D>& f)
    requires std::is_same_v<D, PadicDomain>
{
    GaussNorm n;
    long long best = Padic::kInfValuation;
    long long weakest_zero_bound = Padic::kInfValuation;
    for (const auto& [e, c] : f.terms()) {
        if (c.is_zero()) {
            weakest_zero_bound = std::min(weakest_zero_bound, c.valuation_lower_bound());
            continue;
        }
        best = std::min(best, c.valuation());
    }
    if (best == Padic::kInfValuation) {
        if (weakest_zero_bound < Padic::kInfValuation)
            throw PrecisionExhausted("all coefficients are inexact zeros");
        return n;
    }
    if (weakest_zero_bound < best)
        throw PrecisionExhausted("an inexact zero coefficient dominates the Gauss norm bound");
    n.zero = false;
    n.exponent = best;
    return n;
}

// Truncated power series over the p-adic unit ball: all coefficient norms
// must stay <= 1 and the total degree is capped at the truncation order.
class TateSeries {
  public:
    using Terms = std::map<ExpVec, Padic, GrlexDesc>;

    TateSeries(PadicDomain dom, int nvars, int trunc)
        : dom_(dom), nvars_(nvars), trunc_(trunc) {
        if (nvars < 1) throw VarCountMismatch("series needs at least one variable");
        if (trunc < 1) throw ParamOutOfRange("truncation order must be positive");
    }

    static TateSeries constant(PadicDomain dom, int nvars, int trunc, const Padic& c) {
        TateSeries s(dom, nvars, trunc);
        s.add_term(ExpVec(nvars, 0), c);
        return s;
    }

    static TateSeries variable(PadicDomain dom, int nvars, int trunc, int i) {
        TateSeries s(dom, nvars, trunc);
        ExpVec e(nvars, 0);
        e.at(i) = 1;
        s.add_term(e, dom.one());
        return s;
    }

    // Embed a rational polynomial; rejects coefficients outside the unit ball.
    static TateSeries from_rational(const RatPoly& f, PadicDomain dom, int trunc) {
        TateSeries s(dom, f.nvars(), trunc);
        for (const auto& [e, c] : f.terms()) {
            if (rat_valuation(c, dom.p) < 0)
                throw CoefficientEscapesR("coefficient has p-adic norm > 1");
            s.add_term(e, dom.from_rat(c));
        }
        return s;
    }

    const PadicDomain& domain() const { return dom_; }
    int nvars() const { return nvars_; }
    int truncation() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(ExpVec e, const Padic& c) {
        if (expvec_degree(e) > trunc_) return;  // beyond the truncation order
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            Padic s = it->second + c;
            if (s.is_zero())
                terms_.erase(it);
            else
                it->second = s;
        }
    }

    friend TateSeries operator+(const TateSeries& a, const TateSeries& b) {
        a.check(b);
        TateSeries r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend TateSeries operator-(const TateSeries& a, const TateSeries& b) {
        a.check(b);
        TateSeries r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend TateSeries operator*(const TateSeries& a, const TateSeries& b) {
        a.check(b);
        TateSeries r(a.dom_, a.nvars_, std::min(a.trunc_, b.trunc_));
        for (const auto& [ea, ca] : a.terms_) {
            if (expvec_degree(ea) > r.trunc_) continue;
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                if (expvec_degree(e) > r.trunc_) continue;
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    GaussNorm gauss_norm() const {
        GaussNorm n;
        long long best = Padic::kInfValuation;
        long long weakest = Padic::kInfValuation;
        for (const auto& [e, c] : terms_) {
            if (c.is_zero()) {
                weakest = std::min(weakest, c.valuation_lower_bound());
                continue;
            }
            best = std::min(best, c.valuation());
        }
        if (best == Padic::kInfValuation) {
            if (weakest < Padic::kInfValuation)
                throw PrecisionExhausted("Gauss norm of inexact zeros only");
            return n;
        }
        if (weakest < best) throw PrecisionExhausted("inexact zero dominates the Gauss norm");
        n.zero = false;
        n.exponent = best;
        return n;
    }

    // All coefficients in the unit ball (valuation >= 0)?
    bool in_unit_ball() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_zero() && c.valuation() < 0) return false;
        return true;
    }

    // Multiplicative inverse via geometric series; requires a unit constant
    // term and all other coefficients in the maximal ideal.
    TateSeries geometric_inverse() const;

    std::string str() const;

  private:
    void check(const TateSeries& o) const {
        if (nvars_ != o.nvars_) throw VarCountMismatch("series variable counts differ");
        if (!(dom_ == o.dom_)) throw UnsupportedDomain("series domains differ");
    }

    PadicDomain dom_;
    int nvars_;
    int trunc_;
    Terms terms_;
};

// Affine-chart representation of a map over the ring of integers, ready for
// Gauss-norm comparisons against the identity.
class TateChartMap {
  public:
    TateChartMap(std::vector<TateSeries> comps, std::string provenance);

    static TateChartMap from_rational_polys(const std::vector<RatPoly>& comps, PadicDomain dom,
                                            int trunc, std::string provenance = "");

    int n() const { return static_cast<int>(comps_.size()); }
    const std::vector<TateSeries>& components() const { return comps_; }
    const PadicDomain& domain() const { return comps_.front().domain(); }
    const std::string& provenance() const { return provenance_; }

    // max_i || f_i - x_i ||
    GaussNorm distance_to_identity() const;

  private:
    std::vector<TateSeries> comps_;
    std::string provenance_;
};

struct ChartNormalizeOptions {
    int truncation = 16;
    std::vector<Rat> base_point;  // defaults to (1, ..., 1)
};

// Conjugate by the supplied affine transformation, dehomogenize on the chart
// x0 != 0, and expand as truncated series with the geometric inverse of the
// denominator. The conjugation alpha must carry a certified inverse.
TateChartMap chart_normalize(const RatBirationalMap& f, const RatBirationalMap& alpha,
                             PadicDomain dom, const ChartNormalizeOptions& opt = {});

enum class PadicGateKind { ForcedIdentity, BoundViolated, NotApplicable };

const char* gate_kind_name(PadicGateKind k);

struct PadicGateVerdict {
    PadicGateKind kind = PadicGateKind::NotApplicable;
    GaussNorm distance;   // ||f' - id||
    std::string reason;   // "OrderUnverified" for NotApplicable
    int verified_order = 0;
};

// The 1/p^2 gate: distance above the bound is a violation; within the bound,
// a finite order certified by exact iteration forces the identity.
PadicGateVerdict identity_gate_padic(const TateChartMap& f, int order_bound,
                                     const RatBirationalMap& exact_oracle);

struct SmallSubgroupSample {
    long long p = 0;
    int m = 0;
    std::vector<Rat> qs;                    // translation entries, v_p(q) >= m
    std::vector<RatBirationalMap> elements;  // [x0 + q*x1 : x1] on the line
    std::vector<long long> distance_exponents;
    bool all_in_ball = false;
    bool closure_ok = false;
    std::vector<std::string> gate_outcomes;
};

// Sampled unipotent subgroup with top-right entries of valuation >= m; every
// element sits in the p^{-m} ball around the identity yet none passes the
// finite-order gate.
SmallSubgroupSample small_subgroup_sample(long long p, int m, int count, unsigned seed,
                                          int prec = 12, int order_bound = 6);

struct SweepStats {
    int count = 0;
    int violations = 0;  // elements with distance <= p^{-2}; expected zero
    std::vector<int> orders;
    std::vector<long long> distance_exponents;
};

// Conjugates of finite-order linear maps by integer polynomial automorphisms:
// none may fall within Gauss distance p^{-2} of the identity. A violation
// throws, flagging either a bug or a counterexample.
SweepStats finite_order_conjugate_sweep(long long p, int prec, int count, unsigned seed);

}  // namespace birkit
