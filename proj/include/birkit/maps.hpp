#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "birkit/poly.hpp"

namespace birkit {

template <class D>
inline constexpr bool is_exact_domain_v =
    std::is_same_v<D, RationalDomain> || std::is_same_v<D, PadicDomain>;

template <CoefficientDomain D>
using PointVec = std::vector<typename D::Elem>;

// Normalize projective coordinates: exact domains scale the last nonzero
// coordinate to 1; float domains use the unit Euclidean norm with the first
// nonzero coordinate real and positive.
template <CoefficientDomain D>
PointVec<D> normalize_point(const D& dom, PointVec<D> v) {
    int last = -1, first = -1;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (!dom.is_zero(v[i])) {
            if (first < 0) first = i;
            last = i;
        }
    }
    if (last < 0) throw ZeroVector("projective point has all coordinates zero");
    if constexpr (is_exact_domain_v<D>) {
        auto pivot = v[last];
        for (auto& c : v) c = dom.div(c, pivot);
    } else if constexpr (std::is_same_v<D, RealDomain>) {
        double norm = 0;
        for (double c : v) norm += c * c;
        norm = std::sqrt(norm);
        double sign = v[first] >= 0 ? 1.0 : -1.0;
        for (auto& c : v) c = c / (sign * norm);
    } else {
        double norm = 0;
        for (const auto& c : v) norm += std::norm(c);
        norm = std::sqrt(norm);
        std::complex<double> phase = v[first] / std::abs(v[first]);
        for (auto& c : v) c = c / (phase * norm);
    }
    return v;
}

template <CoefficientDomain D>
bool points_equal(const D& dom, const PointVec<D>& a, const PointVec<D>& b) {
    if (a.size() != b.size()) return false;
    PointVec<D> na = normalize_point(dom, a);
    PointVec<D> nb = normalize_point(dom, b);
    for (std::size_t i = 0; i < na.size(); ++i)
        if (!dom.eq(na[i], nb[i])) return false;
    return true;
}

// Fubini-Study chordal distance (sine of the angle between unit
// representatives) for float-field points. Computed through the Lagrange
// identity ||a||^2 ||b||^2 - |<a,b>|^2 = sum_{i<j} |a_i b_j - a_j b_i|^2,
// which stays accurate for nearly parallel representatives.
inline double chordal_distance(const std::vector<std::complex<double>>& a,
                               const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("chordal distance needs equal lengths");
    double na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    if (na == 0 || nb == 0) throw ZeroVector("chordal distance of zero vector");
    double wedge = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            wedge += std::norm(a[i] * b[j] - a[j] * b[i]);
    return std::min(1.0, std::sqrt(wedge / (na * nb)));
}

// An element of W_d: an (n+1)-tuple of degree-d forms in n+1 variables,
// identified up to a common scalar. Not all components may vanish.
template <CoefficientDomain D>
class MapTuple {
  public:
    explicit MapTuple(std::vector<HomogPoly<D>> comps) : comps_(std::move(comps)) {
        if (comps_.size() < 2) throw DimensionMismatch("a map tuple needs at least two components");
        int nv = comps_.front().nvars();
        int d = comps_.front().degree();
        if (static_cast<int>(comps_.size()) != nv)
            throw DimensionMismatch("tuple length must equal the variable count");
        bool all_zero = true;
        for (const auto& c : comps_) {
            if (c.nvars() != nv) throw VarCountMismatch("tuple components disagree on nvars");
            if (c.degree() != d) throw MixedDegrees("tuple components have mixed degrees");
            all_zero = all_zero && c.is_zero();
        }
        if (all_zero) throw ZeroTuple("all tuple components are zero");
    }

    static MapTuple identity(D dom, int n) {
        std::vector<HomogPoly<D>> comps;
        for (int i = 0; i <= n; ++i) comps.push_back(HomogPoly<D>::variable(dom, n + 1, i));
        return MapTuple(std::move(comps));
    }

    int n() const { return static_cast<int>(comps_.size()) - 1; }
    int nvars() const { return static_cast<int>(comps_.size()); }
    int degree() const { return comps_.front().degree(); }
    const D& domain() const { return comps_.front().domain(); }
    const std::vector<HomogPoly<D>>& components() const { return comps_; }
    const HomogPoly<D>& component(int i) const { return comps_.at(i); }

    PointVec<D> eval_raw(const PointVec<D>& x) const {
        PointVec<D> out;
        out.reserve(comps_.size());
        for (const auto& c : comps_) out.push_back(c.eval(x));
        return out;
    }

    // Raw composition this(other(x)); degrees multiply, no reduction.
    MapTuple substitute(const MapTuple& other) const {
        if (nvars() != other.nvars()) throw DimensionMismatch("composition dimension mismatch");
        std::vector<HomogPoly<D>> out;
        out.reserve(comps_.size());
        for (const auto& c : comps_) out.push_back(c.substitute(other.comps_));
        return MapTuple(std::move(out));
    }

    // Scale so that the first nonzero component has leading coefficient 1
    // (exact domains only); gives a deterministic representative.
    MapTuple canonical() const
        requires is_exact_domain_v<D>
    {
        const D& dom = domain();
        for (const auto& c : comps_) {
            if (!c.is_zero()) {
                auto pivot = c.poly().lead_coeff();
                std::vector<HomogPoly<D>> out;
                out.reserve(comps_.size());
                for (const auto& k : comps_)
                    out.push_back(k.scalar_mul(dom.div(dom.one(), pivot)));
                return MapTuple(std::move(out));
            }
        }
        throw ZeroTuple("zero tuple");
    }

    friend bool operator==(const MapTuple& a, const MapTuple& b) {
        if (a.comps_.size() != b.comps_.size()) return false;
        for (std::size_t i = 0; i < a.comps_.size(); ++i)
            if (a.comps_[i] != b.comps_[i]) return false;
        return true;
    }
    friend bool operator!=(const MapTuple& a, const MapTuple& b) { return !(a == b); }

    // Projectively equal to [x0 : ... : xn].
    bool is_identity_tuple() const {
        if (degree() != 1) return false;
        const D& dom = domain();
        typename D::Elem scale = dom.zero();
        bool have_scale = false;
        for (int i = 0; i < nvars(); ++i) {
            if (comps_[i].is_zero()) return false;
            for (const auto& [e, c] : comps_[i].terms()) {
                if (e[i] != 1) return false;
            }
            auto c = comps_[i].terms().begin()->second;
            if (!have_scale) {
                scale = c;
                have_scale = true;
            } else if (!dom.eq(c, scale)) {
                return false;
            }
        }
        return true;
    }

  private:
    std::vector<HomogPoly<D>> comps_;
};

// A map tuple reduced modulo the common factor (over the rationals), or
// taken as given over float domains; optionally carries a certified inverse.
template <CoefficientDomain D>
class BirationalMap {
  public:
    // Trusted constructor: the caller asserts the reducedness flag.
    static BirationalMap from_tuple(MapTuple<D> t, bool reduced) {
        BirationalMap m(std::move(t));
        m.reduced_ = reduced;
        return m;
    }

    static BirationalMap as_given(MapTuple<D> t) { return from_tuple(std::move(t), false); }

    static BirationalMap identity(D dom, int n) {
        return from_tuple(MapTuple<D>::identity(std::move(dom), n), true);
    }

    const MapTuple<D>& tuple() const { return tuple_; }
    int n() const { return tuple_.n(); }
    int degree() const { return tuple_.degree(); }
    const D& domain() const { return tuple_.domain(); }
    bool is_reduced() const { return reduced_; }
    bool is_identity() const { return tuple_.is_identity_tuple(); }

    std::shared_ptr<const BirationalMap> certified_inverse() const { return inverse_; }

    BirationalMap with_inverse(std::shared_ptr<const BirationalMap> inv) const {
        BirationalMap m = *this;
        m.inverse_ = std::move(inv);
        return m;
    }

  private:
    explicit BirationalMap(MapTuple<D> t) : tuple_(std::move(t)) {}

    MapTuple<D> tuple_;
    std::shared_ptr<const BirationalMap> inverse_;
    bool reduced_ = false;
};

using RatMapTuple = MapTuple<RationalDomain>;
using RatBirationalMap = BirationalMap<RationalDomain>;
using CxMapTuple = MapTuple<ComplexDomain>;
using CxBirationalMap = BirationalMap<ComplexDomain>;

template <CoefficientDomain D>
struct Reduction {
    BirationalMap<D> map;
    HomogPoly<D> cofactor;
};

// Divide out the gcd of the components; realizes the fibre structure of the
// projection from tuples to maps. deg(map) + deg(cofactor) = deg(input), and
// the reduced components have constant gcd. Exact rationals only.
inline Reduction<RationalDomain> reduce(const RatMapTuple& t) {
    RationalDomain dom;
    RatHomogPoly g = RatHomogPoly::zero(dom, t.nvars(), t.degree());
    for (const auto& c : t.components()) {
        g = poly_gcd(g, c);
        if (!g.is_zero() && g.degree() == 0) break;
    }
    std::vector<RatHomogPoly> out;
    out.reserve(t.nvars());
    for (const auto& c : t.components()) {
        auto q = poly_divide_exact(c.poly(), g.poly());
        out.push_back(RatHomogPoly::from_poly(*q, c.degree() - g.degree()));
    }
    RatMapTuple reduced = RatMapTuple(std::move(out)).canonical();
    return Reduction<RationalDomain>{RatBirationalMap::from_tuple(std::move(reduced), true), g};
}

// Group law mechanics: substitute then reduce (exact domain). Over float
// domains the raw tuple is returned, flagged unreduced.
inline RatBirationalMap compose(const RatBirationalMap& f, const RatBirationalMap& g) {
    return reduce(f.tuple().substitute(g.tuple())).map;
}

inline CxBirationalMap compose(const CxBirationalMap& f, const CxBirationalMap& g) {
    return CxBirationalMap::as_given(f.tuple().substitute(g.tuple()));
}

struct OrderResult {
    bool finite = false;
    int order = 0;  // valid when finite
};

// Smallest k <= dmax with f^k = id, iterates reduced at every step to keep
// the degrees honest.
inline OrderResult order(const RatBirationalMap& f, int dmax) {
    if (dmax < 1) throw ParamOutOfRange("order bound must be >= 1");
    RatBirationalMap g = f;
    for (int k = 1; k <= dmax; ++k) {
        if (g.is_identity()) return OrderResult{true, k};
        if (k < dmax) g = compose(g, f);
    }
    return OrderResult{false, 0};
}

template <CoefficientDomain D>
struct EvalOutcome {
    bool indeterminate = false;
    PointVec<D> point;  // normalized; empty when indeterminate
};

// Evaluate at a projective point; Indeterminate when all components vanish
// there (within the domain tolerance for float fields).
template <CoefficientDomain D>
EvalOutcome<D> eval_point(const BirationalMap<D>& f, const PointVec<D>& p) {
    if (static_cast<int>(p.size()) != f.tuple().nvars())
        throw DimensionMismatch("point length must match the tuple");
    const D& dom = f.domain();
    PointVec<D> x = normalize_point(dom, p);
    PointVec<D> y = f.tuple().eval_raw(x);
    bool all_zero = true;
    for (const auto& c : y) all_zero = all_zero && dom.is_zero(c);
    if (all_zero) return EvalOutcome<D>{true, {}};
    return EvalOutcome<D>{false, normalize_point(dom, y)};
}

namespace detail {

template <CoefficientDomain D>
HomogPoly<D> poly_matrix_det(const D& dom, const std::vector<std::vector<HomogPoly<D>>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    // Laplace expansion along the first row; fine at these sizes.
    int deg = 0;
    for (std::size_t i = 0; i < n; ++i) deg += m[i][i].degree();
    HomogPoly<D> acc = HomogPoly<D>::zero(dom, m[0][0].nvars(), deg);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<HomogPoly<D>>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<HomogPoly<D>> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        HomogPoly<D> term = m[0][j] * poly_matrix_det(dom, minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

// Determinant of the matrix of partial derivatives of the components;
// homogeneous of degree (n+1)(d-1).
template <CoefficientDomain D>
HomogPoly<D> jacobian_det(const BirationalMap<D>& f) {
    const D& dom = f.domain();
    int nv = f.tuple().nvars();
    std::vector<std::vector<HomogPoly<D>>> m(nv);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) m[i].push_back(f.tuple().component(i).derivative(j));
    return detail::poly_matrix_det(dom, m);
}

template <CoefficientDomain D>
struct ContractOutcome {
    bool contracts = false;
    PointVec<D> image;  // normalized; set when contracts
};

// Restrict f to the line through a and b in the plane (n = 2) and test
// whether the three restricted binary forms are pairwise proportional.
// Indeterminacy points on the line are allowed.
template <CoefficientDomain D>
ContractOutcome<D> contract_image(const BirationalMap<D>& f, const PointVec<D>& a,
                                  const PointVec<D>& b) {
    if (f.n() != 2) throw DimensionMismatch("line contraction is implemented for the plane");
    if (a.size() != 3 || b.size() != 3) throw DimensionMismatch("line needs two plane points");
    const D& dom = f.domain();
    if (points_equal(dom, a, b)) throw DegenerateLine("line through equal points");

    // Binary forms f_i(s*a + u*b) in the parameters (s, u).
    std::vector<HomogPoly<D>> param;
    for (int i = 0; i < 3; ++i) {
        auto lin = Poly<D>(dom, 2);
        lin.add_term(ExpVec{1, 0}, a[i]);
        lin.add_term(ExpVec{0, 1}, b[i]);
        param.push_back(HomogPoly<D>::from_poly(lin, 1));
    }
    std::vector<HomogPoly<D>> forms;
    for (int i = 0; i < 3; ++i) forms.push_back(f.tuple().component(i).substitute(param));

    // Common scale for zero tests over float fields.
    [[maybe_unused]] double scale = 1.0;
    if constexpr (!is_exact_domain_v<D>) {
        double s2 = 0;
        for (const auto& fm : forms)
            for (const auto& [e, c] : fm.terms()) s2 += std::norm(std::complex<double>(c));
        scale = std::sqrt(s2);
        if (scale == 0) scale = 1.0;
    }
    auto coeff = [&](int i, const ExpVec& e) {
        auto it = forms[i].terms().find(e);
        return it == forms[i].terms().end() ? dom.zero() : it->second;
    };
    std::vector<ExpVec> monos;
    int d = f.degree();
    for (int k = 0; k <= d; ++k) monos.push_back(ExpVec{d - k, k});

    // All 2x2 minors of the 3 x (d+1) coefficient matrix must vanish.
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (std::size_t u = 0; u < monos.size(); ++u) {
                for (std::size_t v = u + 1; v < monos.size(); ++v) {
                    auto minor = dom.sub(dom.mul(coeff(i, monos[u]), coeff(j, monos[v])),
                                         dom.mul(coeff(i, monos[v]), coeff(j, monos[u])));
                    if constexpr (is_exact_domain_v<D>) {
                        if (!dom.is_zero(minor)) return ContractOutcome<D>{false, {}};
                    } else {
                        if (std::abs(std::complex<double>(minor)) > 1e-9 * scale * scale)
                            return ContractOutcome<D>{false, {}};
                    }
                }
            }
        }
    }

    // Proportional: pick the reference coefficient and read off the image.
    int ref_form = -1;
    ExpVec ref_mono;
    for (int i = 0; i < 3 && ref_form < 0; ++i) {
        for (const auto& m : monos) {
            if (!dom.is_zero(coeff(i, m))) {
                ref_form = i;
                ref_mono = m;
                break;
            }
        }
    }
    if (ref_form < 0) return ContractOutcome<D>{false, {}};  // line inside the base locus
    PointVec<D> img;
    for (int i = 0; i < 3; ++i) img.push_back(coeff(i, ref_mono));
    return ContractOutcome<D>{true, normalize_point(dom, img)};
}

// True iff f and g compose to the identity both ways (exact).
inline bool is_inverse_pair(const RatBirationalMap& f, const RatBirationalMap& g) {
    if (f.n() != g.n()) throw DimensionMismatch("inverse check dimension mismatch");
    return compose(f, g).is_identity() && compose(g, f).is_identity();
}

// Birationality is certified, never decided: on success returns f with g
// attached as its certified inverse.
inline std::optional<RatBirationalMap> certify_inverse(const RatBirationalMap& f,
                                                       const RatBirationalMap& g) {
    if (!is_inverse_pair(f, g)) return std::nullopt;
    return f.with_inverse(std::make_shared<RatBirationalMap>(g));
}

// --- constructors for the standard families ---------------------------------

// Linear map from an (n+1)x(n+1) matrix of coefficients.
template <CoefficientDomain D>
MapTuple<D> linear_tuple(const D& dom, const std::vector<std::vector<typename D::Elem>>& m) {
    int nv = static_cast<int>(m.size());
    std::vector<HomogPoly<D>> comps;
    for (int i = 0; i < nv; ++i) {
        if (static_cast<int>(m[i].size()) != nv) throw DimensionMismatch("matrix is not square");
        Poly<D> row(dom, nv);
        for (int j = 0; j < nv; ++j) {
            ExpVec e(nv, 0);
            e[j] = 1;
            row.add_term(std::move(e), m[i][j]);
        }
        comps.push_back(HomogPoly<D>::from_poly(row, 1));
    }
    return MapTuple<D>(std::move(comps));
}

// Exact linear map with its adjugate inverse, certified.
RatBirationalMap linear_map_certified(const std::vector<std::vector<Rat>>& m);

// Plane de Jonquieres map in chart form (x1, x2) -> (x1, x2 + A(x1)/B(x1)),
// homogenized, with its closed-form inverse (A -> -A) attached.
RatBirationalMap de_jonquieres(const std::vector<Rat>& a_coeffs, const std::vector<Rat>& b_coeffs);

}  // namespace birkit
