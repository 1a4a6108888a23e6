#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdio>
#include <string>

#include "birkit/padic.hpp"
#include "birkit/rational.hpp"

namespace birkit {

using Cx = std::complex<double>;

// The three coefficient domains share one arithmetic contract: closed
// add/sub/mul/div, a zero test, and embedding of small rationals. Exact
// domains test zero exactly; float domains use the domain tolerance.

template <class D>
concept CoefficientDomain = requires(const D d, const typename D::Elem a, const typename D::Elem b) {
    { d.zero() } -> std::same_as<typename D::Elem>;
    { d.one() } -> std::same_as<typename D::Elem>;
    { d.add(a, b) } -> std::same_as<typename D::Elem>;
    { d.sub(a, b) } -> std::same_as<typename D::Elem>;
    { d.mul(a, b) } -> std::same_as<typename D::Elem>;
    { d.div(a, b) } -> std::same_as<typename D::Elem>;
    { d.neg(a) } -> std::same_as<typename D::Elem>;
    { d.is_zero(a) } -> std::same_as<bool>;
    { d.eq(a, b) } -> std::same_as<bool>;
    { d.from_rat(Rat{}) } -> std::same_as<typename D::Elem>;
    { d.str(a) } -> std::same_as<std::string>;
};

namespace detail {
// Shortest-17-digit form; enough to round-trip a double exactly.
inline std::string double_str(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}
}  // namespace detail

struct RationalDomain {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw DivisionByZero("rational division by zero");
        return a / b;
    }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_rat(const Rat& q) const { return q; }
    std::string str(const Elem& a) const { return rat_str(a); }
    bool operator==(const RationalDomain&) const { return true; }
    static constexpr const char* name() { return "QQ"; }
};

struct RealDomain {
    double tol = 1e-10;
    using Elem = double;
    Elem zero() const { return 0.0; }
    Elem one() const { return 1.0; }
    Elem add(Elem a, Elem b) const { return a + b; }
    Elem sub(Elem a, Elem b) const { return a - b; }
    Elem mul(Elem a, Elem b) const { return a * b; }
    Elem div(Elem a, Elem b) const { return a / b; }
    Elem neg(Elem a) const { return -a; }
    bool is_zero(Elem a) const { return std::abs(a) <= tol; }
    bool eq(Elem a, Elem b) const { return std::abs(a - b) <= tol; }
    Elem from_rat(const Rat& q) const { return static_cast<double>(q); }
    std::string str(Elem a) const { return detail::double_str(a); }
    bool operator==(const RealDomain& o) const { return tol == o.tol; }
    static constexpr const char* name() { return "RR"; }
};

struct ComplexDomain {
    double tol = 1e-10;
    using Elem = std::complex<double>;
    Elem zero() const { return {0.0, 0.0}; }
    Elem one() const { return {1.0, 0.0}; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return std::abs(a) <= tol; }
    bool eq(const Elem& a, const Elem& b) const { return std::abs(a - b) <= tol; }
    Elem from_rat(const Rat& q) const { return {static_cast<double>(q), 0.0}; }
    std::string str(const Elem& a) const {
        if (a.imag() == 0.0) return detail::double_str(a.real());
        std::string s = detail::double_str(a.real());
        if (a.imag() >= 0.0) s += "+";
        return s + detail::double_str(a.imag()) + "i";
    }
    bool operator==(const ComplexDomain& o) const { return tol == o.tol; }
    static constexpr const char* name() { return "CC"; }
};

struct PadicDomain {
    long long p = 2;
    int prec = 12;
    using Elem = Padic;
    Elem zero() const { return Padic::exact_zero(p); }
    Elem one() const { return Padic::from_int(p, prec, 1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_rat(const Rat& q) const { return Padic::from_rat(p, prec, q); }
    std::string str(const Elem& a) const { return a.to_string(); }
    bool operator==(const PadicDomain& o) const { return p == o.p && prec == o.prec; }
    std::string field_name() const {
        return "Qp:" + std::to_string(p) + ":" + std::to_string(prec);
    }
    static constexpr const char* name() { return "Qp"; }
};

static_assert(CoefficientDomain<RationalDomain>);
static_assert(CoefficientDomain<RealDomain>);
static_assert(CoefficientDomain<ComplexDomain>);
static_assert(CoefficientDomain<PadicDomain>);

}  // namespace birkit
