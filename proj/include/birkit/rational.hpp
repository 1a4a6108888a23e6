#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "birkit/errors.hpp"

namespace birkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// p-adic valuation of a nonzero integer.
inline long long int_valuation(Int n, long long p) {
    if (n == 0) throw DivisionByZero("valuation of zero");
    if (n < 0) n = -n;
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// v_p(q) for a nonzero rational.
inline long long rat_valuation(const Rat& q, long long p) {
    return int_valuation(rat_num(q), p) - int_valuation(rat_den(q), p);
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r = 1;
        Rat b = base;
        long k = e;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }
    if (base == 0) throw DivisionByZero("0 raised to a negative power");
    return 1 / rat_pow(base, -e);
}

inline std::string rat_str(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

}  // namespace birkit
