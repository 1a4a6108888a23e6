#pragma once

#include <limits>
#include <string>
#include <vector>

#include "birkit/errors.hpp"
#include "birkit/rational.hpp"

namespace birkit {

// Fixed-precision p-adic number with explicit precision tracking.
//
// A nonzero value is stored as p^v * u where u is the unit part, known to
// `rel` base-p digits (1 <= rel <= N, u in [1, p^rel), p does not divide u).
// Its absolute value is p^{-v}. Two flavours of zero are distinguished:
// the exact zero (infinite precision) and an inexact zero O(p^a) produced by
// cancellation, which only asserts that the valuation is >= a.
//
// Arithmetic follows capped-relative-precision rules: multiplication and
// division keep min(rel_a, rel_b) digits; addition works at the minimum
// absolute precision of the operands, so cancellation lowers the effective
// precision and is never hidden.
class Padic {
  public:
    static constexpr long long kInfValuation = std::numeric_limits<long long>::max();

    Padic() : p_(2), v_(kInfValuation), unit_(0), rel_(0) {}

    static Padic exact_zero(long long p) {
        Padic x;
        x.p_ = p;
        return x;
    }

    static Padic inexact_zero(long long p, long long abs_prec) {
        Padic x;
        x.p_ = p;
        x.v_ = abs_prec;
        x.unit_ = 0;
        x.rel_ = 0;
        x.inexact_ = true;
        return x;
    }

    static Padic from_int(long long p, int prec, const Int& n) {
        if (n == 0) return exact_zero(p);
        long long v = int_valuation(n, p);
        Int u = n / int_pow(p, static_cast<unsigned long>(v));
        return make_value(p, v, u, prec);
    }

    static Padic from_rat(long long p, int prec, const Rat& q) {
        if (q == 0) return exact_zero(p);
        Int num = rat_num(q), den = rat_den(q);
        long long vn = int_valuation(num, p), vd = int_valuation(den, p);
        Int un = num / int_pow(p, static_cast<unsigned long>(vn));
        Int ud = den / int_pow(p, static_cast<unsigned long>(vd));
        Int mod = int_pow(p, static_cast<unsigned long>(prec));
        Int u = mod_mul(un, mod_inverse(ud, mod, p), mod);
        return make_value(p, vn - vd, u, prec);
    }

    long long prime() const { return p_; }
    bool is_exact_zero() const { return !inexact_ && v_ == kInfValuation && unit_ == 0; }
    bool is_zero() const { return unit_ == 0; }
    bool is_inexact_zero() const { return inexact_; }
    int effective_precision() const { return rel_; }

    // For a value this is the exact valuation; for an inexact zero it is the
    // proven lower bound; for the exact zero it is kInfValuation.
    long long valuation_lower_bound() const { return v_; }

    long long valuation() const {
        if (is_exact_zero()) return kInfValuation;
        if (inexact_) throw PrecisionExhausted("valuation of an inexact zero is not determined");
        return v_;
    }

    // |x| = p^{-v}, as a double (display/diagnostics only; exact comparisons
    // should use valuation_lower_bound()).
    double abs_value() const {
        if (is_zero()) return 0.0;
        return std::pow(static_cast<double>(p_), static_cast<double>(-v_));
    }

    const Int& unit() const { return unit_; }

    std::vector<int> digits() const {
        std::vector<int> d;
        Int u = unit_;
        for (int i = 0; i < rel_; ++i) {
            d.push_back(static_cast<int>(u % p_));
            u /= p_;
        }
        return d;
    }

    friend Padic operator-(const Padic& a) {
        if (a.is_zero()) return a;
        Padic r = a;
        Int mod = int_pow(a.p_, static_cast<unsigned long>(a.rel_));
        r.unit_ = mod - a.unit_;
        return r;
    }

    friend Padic operator+(const Padic& a, const Padic& b) {
        check_same_prime(a, b);
        if (a.is_exact_zero()) return b;
        if (b.is_exact_zero()) return a;
        long long abs_a = a.abs_precision(), abs_b = b.abs_precision();
        long long abs = std::min(abs_a, abs_b);
        if (a.is_zero() && b.is_zero()) return inexact_zero(a.p_, abs);
        if (a.is_zero()) return b.truncate_abs(abs);
        if (b.is_zero()) return a.truncate_abs(abs);
        long long v = std::min(a.v_, b.v_);
        if (v >= abs) return inexact_zero(a.p_, abs);
        Int mod = int_pow(a.p_, static_cast<unsigned long>(abs - v));
        Int s = a.unit_ * int_pow(a.p_, static_cast<unsigned long>(a.v_ - v)) +
                b.unit_ * int_pow(b.p_, static_cast<unsigned long>(b.v_ - v));
        s %= mod;
        if (s < 0) s += mod;
        if (s == 0) return inexact_zero(a.p_, abs);
        long long shift = int_valuation(s, a.p_);
        v += shift;
        if (v >= abs) return inexact_zero(a.p_, abs);
        Int u = s / int_pow(a.p_, static_cast<unsigned long>(shift));
        return make_value(a.p_, v, u, static_cast<int>(abs - v));
    }

    friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }

    friend Padic operator*(const Padic& a, const Padic& b) {
        check_same_prime(a, b);
        if (a.is_exact_zero() || b.is_exact_zero()) return exact_zero(a.p_);
        if (a.is_zero() || b.is_zero())
            return inexact_zero(a.p_, a.valuation_lower_bound() + b.valuation_lower_bound());
        int rel = std::min(a.rel_, b.rel_);
        Int mod = int_pow(a.p_, static_cast<unsigned long>(rel));
        return make_value(a.p_, a.v_ + b.v_, mod_mul(a.unit_, b.unit_, mod), rel);
    }

    friend Padic operator/(const Padic& a, const Padic& b) {
        check_same_prime(a, b);
        if (b.is_exact_zero()) throw DivisionByZero("p-adic division by zero");
        if (b.is_zero()) throw PrecisionExhausted("p-adic division by an inexact zero");
        if (a.is_exact_zero()) return exact_zero(a.p_);
        if (a.is_zero()) return inexact_zero(a.p_, a.valuation_lower_bound() - b.v_);
        int rel = std::min(a.rel_, b.rel_);
        Int mod = int_pow(a.p_, static_cast<unsigned long>(rel));
        Int u = mod_mul(a.unit_ % mod, mod_inverse(b.unit_, mod, a.p_), mod);
        return make_value(a.p_, a.v_ - b.v_, u, rel);
    }

    // Provable equality at the shared precision of the two operands.
    friend bool operator==(const Padic& a, const Padic& b) {
        check_same_prime(a, b);
        if (a.is_zero() && b.is_zero()) return true;
        if (a.is_zero()) return b.v_ >= a.valuation_lower_bound();
        if (b.is_zero()) return a.v_ >= b.valuation_lower_bound();
        if (a.v_ != b.v_) return false;
        int rel = std::min(a.rel_, b.rel_);
        Int mod = int_pow(a.p_, static_cast<unsigned long>(rel));
        return a.unit_ % mod == b.unit_ % mod;
    }
    friend bool operator!=(const Padic& a, const Padic& b) { return !(a == b); }

    std::string to_string() const {
        if (is_exact_zero()) return "0";
        if (is_zero()) return "O(" + std::to_string(p_) + "^" + std::to_string(v_) + ")";
        std::string s = std::to_string(p_) + "^" + std::to_string(v_) + " * (";
        bool first = true;
        auto d = digits();
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] == 0) continue;
            if (!first) s += " + ";
            if (i == 0) {
                s += std::to_string(d[i]);
            } else {
                s += std::to_string(d[i]) + "*" + std::to_string(p_);
                if (i > 1) s += "^" + std::to_string(i);
            }
            first = false;
        }
        s += ")";
        return s;
    }

  private:
    static Padic make_value(long long p, long long v, Int u, int rel) {
        if (rel < 1) throw PrecisionExhausted("p-adic precision exhausted");
        Int mod = int_pow(p, static_cast<unsigned long>(rel));
        u %= mod;
        if (u < 0) u += mod;
        if (u == 0) throw PrecisionExhausted("p-adic unit part vanished");
        Padic x;
        x.p_ = p;
        x.v_ = v;
        x.unit_ = u;
        x.rel_ = rel;
        return x;
    }

    long long abs_precision() const {
        if (is_exact_zero()) return kInfValuation;
        if (inexact_) return v_;
        return v_ + rel_;
    }

    Padic truncate_abs(long long abs) const {
        if (is_zero() || abs >= abs_precision()) return *this;
        if (abs <= v_) return inexact_zero(p_, abs);
        return make_value(p_, v_, unit_, static_cast<int>(abs - v_));
    }

    static void check_same_prime(const Padic& a, const Padic& b) {
        if (a.p_ != b.p_) throw UnsupportedDomain("mixed p-adic primes");
    }

    static Int mod_mul(const Int& a, const Int& b, const Int& mod) {
        Int r = (a * b) % mod;
        if (r < 0) r += mod;
        return r;
    }

    // Inverse of a unit modulo p^k via extended Euclid.
    static Int mod_inverse(Int a, const Int& mod, long long p) {
        a %= mod;
        if (a < 0) a += mod;
        if (a % p == 0) throw DivisionByZero("p-adic inverse of a non-unit");
        Int t = 0, newt = 1, r = mod, newr = a;
        while (newr != 0) {
            Int q = r / newr;
            Int tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += mod;
        return t;
    }

    long long p_;
    long long v_;
    Int unit_;
    int rel_;
    bool inexact_ = false;
};

}  // namespace birkit
