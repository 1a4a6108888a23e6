#pragma once

#include "birkit/maps.hpp"

namespace birkit {

// The recurring example maps of the toolkit, exact over the rationals.

// Standard quadratic involution [x1x2 : x0x2 : x0x1].
inline RatBirationalMap sigma_involution() {
    RationalDomain dom;
    auto x = [&](int i) { return RatHomogPoly::variable(dom, 3, i); };
    return RatBirationalMap::from_tuple(RatMapTuple({x(1) * x(2), x(0) * x(2), x(0) * x(1)}),
                                        true);
}

// [x0^2 : x0x1 + a x2^2 : x0x2]; converges to the identity as a -> 0 while
// evaluation at [0:1:*] sticks at [0:1:0].
inline RatBirationalMap pointwise_failure_map(const Rat& a) {
    RationalDomain dom;
    auto x = [&](int i) { return RatHomogPoly::variable(dom, 3, i); };
    RatMapTuple t({x(0) * x(0), x(0) * x(1) + (x(2) * x(2)).scalar_mul(a), x(0) * x(2)});
    return RatBirationalMap::from_tuple(t, true);
}

// [x0 + a x1 : x1 : x2]; precomposition slides the contracted line.
inline RatBirationalMap moving_lines_shift(const Rat& a) {
    RationalDomain dom;
    auto x = [&](int i) { return RatHomogPoly::variable(dom, 3, i); };
    return RatBirationalMap::from_tuple(RatMapTuple({x(0) + x(1).scalar_mul(a), x(1), x(2)}),
                                        true);
}

// [x0^m : x0^{m-1}x1 + (1/m!) x2^m : x0^{m-1}x2]; already reduced, of degree
// m, so the family has unbounded degree.
inline RatBirationalMap factorial_coefficient_map(int m) {
    if (m < 2) throw ParamOutOfRange("family starts at m = 2");
    RationalDomain dom;
    Rat inv_fact(1);
    for (int k = 2; k <= m; ++k) inv_fact /= k;
    auto mono = [&](int e0, int e1, int e2, const Rat& c) {
        return RatHomogPoly::monomial(dom, 3, ExpVec{e0, e1, e2}, c);
    };
    RatMapTuple t({mono(m, 0, 0, Rat(1)),
                   mono(m - 1, 1, 0, Rat(1)) + mono(0, 0, m, inv_fact),
                   mono(m - 1, 0, 1, Rat(1))});
    return RatBirationalMap::from_tuple(t, false);
}

// Degree-1 embedding of the identity at degree d: x0^{d-1} * id.
inline RatMapTuple identity_embedded(int n, int d) {
    RationalDomain dom;
    std::vector<RatHomogPoly> comps;
    for (int i = 0; i <= n; ++i) {
        ExpVec e(n + 1, 0);
        e[0] = d - 1;
        e[i] += 1;
        comps.push_back(RatHomogPoly::monomial(dom, n + 1, e, Rat(1)));
    }
    return RatMapTuple(std::move(comps));
}

}  // namespace birkit
