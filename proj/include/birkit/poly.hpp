#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "birkit/domains.hpp"
#include "birkit/errors.hpp"

namespace birkit {

using ExpVec = std::vector<int>;

inline int expvec_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic order with x0 > x1 > ..., largest monomial first, so
// map iteration starts at the leading term.
struct GrlexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = expvec_degree(a), db = expvec_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Sparse multivariate polynomial over a coefficient domain. Not necessarily
// homogeneous; stored terms never have a zero coefficient (under the domain's
// zero test).
template <CoefficientDomain D>
class Poly {
  public:
    using Elem = typename D::Elem;
    using Terms = std::map<ExpVec, Elem, GrlexDesc>;

    Poly(D dom, int nvars) : dom_(std::move(dom)), nvars_(nvars) {
        if (nvars < 1) throw VarCountMismatch("polynomial needs at least one variable");
    }

    static Poly zero(D dom, int nvars) { return Poly(std::move(dom), nvars); }

    static Poly constant(D dom, int nvars, Elem c) {
        Poly p(std::move(dom), nvars);
        p.add_term(ExpVec(nvars, 0), std::move(c));
        return p;
    }

    static Poly variable(D dom, int nvars, int i) {
        if (i < 0 || i >= nvars) throw IndexOutOfRange("variable index out of range");
        Poly p(dom, nvars);
        ExpVec e(nvars, 0);
        e[i] = 1;
        p.add_term(e, dom.one());
        return p;
    }

    static Poly monomial(D dom, int nvars, ExpVec e, Elem c) {
        if (static_cast<int>(e.size()) != nvars) throw VarCountMismatch("exponent vector size");
        Poly p(std::move(dom), nvars);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    const D& domain() const { return dom_; }
    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, expvec_degree(e));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = expvec_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (expvec_degree(e) != d) return false;
        return true;
    }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && expvec_degree(terms_.begin()->first) == 0);
    }

    void add_term(ExpVec e, Elem c) {
        if (dom_.is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second = dom_.add(it->second, c);
            if (dom_.is_zero(it->second)) terms_.erase(it);
        }
    }

    const ExpVec& lead_exp() const {
        if (terms_.empty()) throw IndexOutOfRange("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const Elem& lead_coeff() const {
        if (terms_.empty()) throw IndexOutOfRange("leading term of zero polynomial");
        return terms_.begin()->second;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, a.dom_.neg(c));
        return r;
    }

    friend Poly operator-(const Poly& a) {
        Poly r(a.dom_, a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, a.dom_.neg(c));
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly r(a.dom_, a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), a.dom_.mul(ca, cb));
            }
        }
        return r;
    }

    Poly scalar_mul(const Elem& s) const {
        Poly r(dom_, nvars_);
        if (dom_.is_zero(s)) return r;
        for (const auto& [e, c] : terms_) r.add_term(e, dom_.mul(c, s));
        return r;
    }

    Elem eval(const std::vector<Elem>& x) const {
        if (static_cast<int>(x.size()) != nvars_)
            throw ArityMismatch("evaluation point has wrong length");
        // Memoized powers, one ladder per variable.
        std::vector<std::vector<Elem>> pows(nvars_);
        for (int i = 0; i < nvars_; ++i) pows[i].push_back(dom_.one());
        auto power = [&](int i, int e) -> const Elem& {
            auto& ladder = pows[i];
            while (static_cast<int>(ladder.size()) <= e)
                ladder.push_back(dom_.mul(ladder.back(), x[i]));
            return ladder[e];
        };
        Elem acc = dom_.zero();
        for (const auto& [e, c] : terms_) {
            Elem t = c;
            for (int i = 0; i < nvars_; ++i)
                if (e[i] > 0) t = dom_.mul(t, power(i, e[i]));
            acc = dom_.add(acc, t);
        }
        return acc;
    }

    Poly derivative(int var) const {
        if (var < 0 || var >= nvars_) throw IndexOutOfRange("derivative variable index");
        Poly r(dom_, nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            ExpVec g = e;
            g[var] -= 1;
            r.add_term(std::move(g), dom_.mul(c, dom_.from_rat(Rat(e[var]))));
        }
        return r;
    }

    // x_i -> maps[i]; all maps share this polynomial's variable count target.
    Poly substitute(const std::vector<Poly>& maps) const {
        if (static_cast<int>(maps.size()) != nvars_)
            throw ArityMismatch("substitute needs one polynomial per variable");
        int out_vars = maps.empty() ? nvars_ : maps.front().nvars_;
        for (const auto& m : maps)
            if (m.nvars_ != out_vars) throw VarCountMismatch("substitute maps disagree on nvars");
        std::vector<std::vector<Poly>> pows(nvars_);
        auto power = [&](int i, int e) -> const Poly& {
            auto& ladder = pows[i];
            if (ladder.empty()) ladder.push_back(Poly::constant(dom_, out_vars, dom_.one()));
            while (static_cast<int>(ladder.size()) <= e) ladder.push_back(ladder.back() * maps[i]);
            return ladder[e];
        };
        Poly acc(dom_, out_vars);
        for (const auto& [e, c] : terms_) {
            Poly t = Poly::constant(dom_, out_vars, c);
            for (int i = 0; i < nvars_; ++i)
                if (e[i] > 0) t = t * power(i, e[i]);
            acc = acc + t;
        }
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!(a.dom_ == b.dom_) || a.nvars_ != b.nvars_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first || !a.dom_.eq(ia->second, ib->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& var_prefix = "x") const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            std::string cs = dom_.str(c);
            bool unit_coeff = cs == "1";
            bool has_vars = expvec_degree(e) > 0;
            if (!has_vars || !unit_coeff) {
                if (cs.find('+') != std::string::npos || (cs.find('-') != std::string::npos && cs.rfind('-') > 0))
                    s += "(" + cs + ")";
                else
                    s += cs;
                if (has_vars) s += "*";
            }
            bool first_var = true;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!first_var) s += "*";
                first_var = false;
                s += var_prefix + std::to_string(i);
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }

  private:
    void check_compatible(const Poly& o) const {
        if (nvars_ != o.nvars_) throw VarCountMismatch("variable counts differ");
        if (!(dom_ == o.dom_)) throw UnsupportedDomain("coefficient domains differ");
    }

    D dom_;
    int nvars_;
    Terms terms_;
};

// Homogeneous polynomial of a declared degree. The zero polynomial has an
// empty term map with the degree kept as declared.
template <CoefficientDomain D>
class HomogPoly {
  public:
    using Elem = typename D::Elem;

    HomogPoly(D dom, int nvars, int degree) : poly_(std::move(dom), nvars), degree_(degree) {
        if (degree < 0) throw DegreeMismatch("negative degree");
    }

    static HomogPoly from_poly(const Poly<D>& p, std::optional<int> declared = std::nullopt) {
        int d = p.total_degree();
        if (d < 0) d = declared.value_or(0);
        if (declared && !p.is_zero() && *declared != d)
            throw DegreeMismatch("polynomial degree differs from declared degree");
        for (const auto& [e, c] : p.terms())
            if (expvec_degree(e) != d) throw NonHomogeneous("polynomial is not homogeneous");
        HomogPoly h(p.domain(), p.nvars(), d);
        h.poly_ = p;
        return h;
    }

    static HomogPoly zero(D dom, int nvars, int degree) { return HomogPoly(std::move(dom), nvars, degree); }

    static HomogPoly variable(D dom, int nvars, int i) {
        return from_poly(Poly<D>::variable(std::move(dom), nvars, i));
    }

    static HomogPoly monomial(D dom, int nvars, ExpVec e, Elem c) {
        int d = expvec_degree(e);
        auto p = Poly<D>::monomial(std::move(dom), nvars, std::move(e), std::move(c));
        if (p.is_zero()) return HomogPoly(p.domain(), nvars, d);
        return from_poly(p);
    }

    static HomogPoly constant(D dom, int nvars, Elem c) {
        return from_poly(Poly<D>::constant(std::move(dom), nvars, std::move(c)), 0);
    }

    const D& domain() const { return poly_.domain(); }
    int nvars() const { return poly_.nvars(); }
    int degree() const { return degree_; }
    const Poly<D>& poly() const { return poly_; }
    const typename Poly<D>::Terms& terms() const { return poly_.terms(); }
    bool is_zero() const { return poly_.is_zero(); }

    friend HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
        if (a.nvars() != b.nvars()) throw VarCountMismatch("variable counts differ");
        if (a.degree_ != b.degree_) throw DegreeMismatch("adding different degrees");
        HomogPoly r(a.domain(), a.nvars(), a.degree_);
        r.poly_ = a.poly_ + b.poly_;
        return r;
    }

    friend HomogPoly operator-(const HomogPoly& a, const HomogPoly& b) {
        if (a.nvars() != b.nvars()) throw VarCountMismatch("variable counts differ");
        if (a.degree_ != b.degree_) throw DegreeMismatch("subtracting different degrees");
        HomogPoly r(a.domain(), a.nvars(), a.degree_);
        r.poly_ = a.poly_ - b.poly_;
        return r;
    }

    friend HomogPoly operator-(const HomogPoly& a) {
        HomogPoly r(a.domain(), a.nvars(), a.degree_);
        r.poly_ = -a.poly_;
        return r;
    }

    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
        if (a.nvars() != b.nvars()) throw VarCountMismatch("variable counts differ");
        HomogPoly r(a.domain(), a.nvars(), a.degree_ + b.degree_);
        r.poly_ = a.poly_ * b.poly_;
        return r;
    }

    HomogPoly scalar_mul(const Elem& s) const {
        HomogPoly r(domain(), nvars(), degree_);
        r.poly_ = poly_.scalar_mul(s);
        return r;
    }

    Elem eval(const std::vector<Elem>& x) const { return poly_.eval(x); }

    // Degree drops by one; the derivative of a degree-0 form is the zero
    // polynomial of degree 0.
    HomogPoly derivative(int var) const {
        HomogPoly r(domain(), nvars(), degree_ > 0 ? degree_ - 1 : 0);
        r.poly_ = poly_.derivative(var);
        return r;
    }

    // x_i -> maps[i], all maps homogeneous of one common degree e; the result
    // is homogeneous of degree deg * e.
    HomogPoly substitute(const std::vector<HomogPoly>& maps) const {
        if (static_cast<int>(maps.size()) != nvars())
            throw ArityMismatch("substitute needs one map per variable");
        int e = maps.empty() ? 1 : maps.front().degree_;
        std::vector<Poly<D>> raw;
        raw.reserve(maps.size());
        for (const auto& m : maps) {
            if (m.degree_ != e) throw DegreeMismatch("substitution maps have mixed degrees");
            raw.push_back(m.poly_);
        }
        HomogPoly r(domain(), maps.front().nvars(), degree_ * e);
        r.poly_ = poly_.substitute(raw);
        return r;
    }

    friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
        return a.degree_ == b.degree_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const HomogPoly& a, const HomogPoly& b) { return !(a == b); }

    std::string str(const std::string& var_prefix = "x") const { return poly_.str(var_prefix); }

  private:
    Poly<D> poly_;
    int degree_;
};

// --- exact polynomial division and gcd (rational coefficients) -------------

using RatPoly = Poly<RationalDomain>;
using RatHomogPoly = HomogPoly<RationalDomain>;

// Long division by the leading term in grlex order; nullopt if b does not
// divide a exactly.
inline std::optional<RatPoly> poly_divide_exact(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) return std::nullopt;
    RationalDomain dom;
    RatPoly q(dom, a.nvars());
    RatPoly r = a;
    const ExpVec& lb = b.lead_exp();
    const Rat& cb = b.lead_coeff();
    while (!r.is_zero()) {
        const ExpVec& lr = r.lead_exp();
        ExpVec e(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) {
            e[i] = lr[i] - lb[i];
            if (e[i] < 0) return std::nullopt;
        }
        Rat c = r.lead_coeff() / cb;
        RatPoly t = RatPoly::monomial(dom, a.nvars(), e, c);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

inline bool poly_divides(const RatPoly& b, const RatPoly& a) {
    return a.is_zero() || (!b.is_zero() && poly_divide_exact(a, b).has_value());
}

namespace detail {

inline int degree_in(const RatPoly& a, int var) {
    int d = -1;
    for (const auto& [e, c] : a.terms()) d = std::max(d, e[var]);
    return d;
}

inline int top_variable(const RatPoly& a, const RatPoly& b) {
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (degree_in(a, v) > 0 || degree_in(b, v) > 0) return v;
    return -1;
}

// Coefficients of a viewed as univariate in x_var (exponent of x_var zeroed).
inline std::map<int, RatPoly> coeffs_wrt(const RatPoly& a, int var) {
    std::map<int, RatPoly> out;
    RationalDomain dom;
    for (const auto& [e, c] : a.terms()) {
        int k = e[var];
        ExpVec rest = e;
        rest[var] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, RatPoly(dom, a.nvars())).first;
        it->second.add_term(std::move(rest), c);
    }
    return out;
}

inline RatPoly lead_coeff_wrt(const RatPoly& a, int var) {
    auto cs = coeffs_wrt(a, var);
    return cs.rbegin()->second;
}

inline RatPoly shift_in(const RatPoly& a, int var, int k) {
    RationalDomain dom;
    RatPoly r(dom, a.nvars());
    for (const auto& [e, c] : a.terms()) {
        ExpVec g = e;
        g[var] += k;
        r.add_term(std::move(g), c);
    }
    return r;
}

inline RatPoly pseudo_rem(RatPoly a, const RatPoly& b, int var) {
    int db = degree_in(b, var);
    RatPoly lb = lead_coeff_wrt(b, var);
    int da = degree_in(a, var);
    while (!a.is_zero() && (da = degree_in(a, var)) >= db) {
        RatPoly la = lead_coeff_wrt(a, var);
        a = a * lb - shift_in(la, var, da - db) * b;
    }
    return a;
}

}  // namespace detail

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

namespace detail {

// gcd of the univariate-in-var coefficient polynomials.
inline RatPoly content_wrt(const RatPoly& a, int var) {
    RationalDomain dom;
    RatPoly g(dom, a.nvars());
    for (const auto& [k, c] : coeffs_wrt(a, var)) {
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

}  // namespace detail

// Monic (leading grlex coefficient 1) gcd over the rationals, by recursive
// content / primitive-part Euclid with the highest-index variable as main
// variable. gcd(a, 0) is the normalization of a.
inline RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    if (a.nvars() != b.nvars()) throw VarCountMismatch("gcd needs equal variable counts");
    RationalDomain dom;
    auto monic = [&](const RatPoly& p) {
        if (p.is_zero()) return p;
        return p.scalar_mul(Rat(1) / p.lead_coeff());
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return RatPoly::constant(dom, a.nvars(), Rat(1));
    int var = detail::top_variable(a, b);
    if (var < 0) return RatPoly::constant(dom, a.nvars(), Rat(1));

    RatPoly ca = detail::content_wrt(a, var);
    RatPoly cb = detail::content_wrt(b, var);
    RatPoly cg = poly_gcd(ca, cb);
    RatPoly A = *poly_divide_exact(a, ca);
    RatPoly B = *poly_divide_exact(b, cb);
    if (detail::degree_in(A, var) < detail::degree_in(B, var)) std::swap(A, B);
    while (!B.is_zero()) {
        RatPoly R = detail::pseudo_rem(A, B, var);
        A = B;
        if (R.is_zero()) {
            B = R;
        } else {
            RatPoly cr = detail::content_wrt(R, var);
            B = *poly_divide_exact(R, cr);
        }
    }
    return monic(cg * A);
}

inline RatHomogPoly poly_gcd(const RatHomogPoly& a, const RatHomogPoly& b) {
    RatPoly g = poly_gcd(a.poly(), b.poly());
    return RatHomogPoly::from_poly(g, g.is_zero() ? std::optional<int>(0) : std::nullopt);
}

// Set the chart variable to 1 and drop it; remaining variables keep their
// relative order.
template <CoefficientDomain D>
Poly<D> dehomogenize(const HomogPoly<D>& f, int chart) {
    if (chart < 0 || chart >= f.nvars()) throw IndexOutOfRange("chart index");
    int m = f.nvars() - 1;
    Poly<D> r(f.domain(), std::max(m, 1));
    for (const auto& [e, c] : f.terms()) {
        ExpVec g;
        g.reserve(m);
        for (int i = 0; i < f.nvars(); ++i)
            if (i != chart) g.push_back(e[i]);
        if (g.empty()) g.push_back(0);
        r.add_term(std::move(g), c);
    }
    return r;
}

// Inverse of dehomogenize: re-insert the chart variable with the exponent
// that pads each term up to `degree`.
template <CoefficientDomain D>
HomogPoly<D> homogenize(const Poly<D>& f, int degree, int chart) {
    int n = f.nvars() + 1;
    if (chart < 0 || chart >= n) throw IndexOutOfRange("chart index");
    if (f.total_degree() > degree) throw DegreeMismatch("degree too small to homogenize");
    HomogPoly<D> r(f.domain(), n, degree);
    Poly<D> acc(f.domain(), n);
    for (const auto& [e, c] : f.terms()) {
        ExpVec g;
        g.reserve(n);
        int used = expvec_degree(e);
        for (int i = 0, j = 0; i < n; ++i) {
            if (i == chart)
                g.push_back(degree - used);
            else
                g.push_back(e[j++]);
        }
        acc.add_term(std::move(g), c);
    }
    return HomogPoly<D>::from_poly(acc, degree);
}

}  // namespace birkit
