#include "birkit/maps.hpp"

namespace birkit {

namespace {

// Determinant and adjugate of a rational matrix by cofactor expansion.
Rat det_rat(const std::vector<std::vector<Rat>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rat acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Rat>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rat> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Rat t = m[0][j] * det_rat(minor);
        acc += (j % 2 == 0) ? t : -t;
    }
    return acc;
}

std::vector<std::vector<Rat>> adjugate_rat(const std::vector<std::vector<Rat>>& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Rat>> adj(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Rat>> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Rat> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Rat cof = det_rat(minor);
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

}  // namespace

RatBirationalMap linear_map_certified(const std::vector<std::vector<Rat>>& m) {
    RationalDomain dom;
    if (det_rat(m) == 0) throw ZeroTuple("linear map matrix is singular");
    RatBirationalMap f = RatBirationalMap::from_tuple(linear_tuple(dom, m).canonical(), true);
    RatBirationalMap g =
        RatBirationalMap::from_tuple(linear_tuple(dom, adjugate_rat(m)).canonical(), true);
    auto certified = certify_inverse(f, g);
    if (!certified) throw Error("adjugate failed to invert a nonsingular matrix");
    return *certified;
}

RatBirationalMap de_jonquieres(const std::vector<Rat>& a_coeffs,
                               const std::vector<Rat>& b_coeffs) {
    RationalDomain dom;
    if (b_coeffs.empty() || std::all_of(b_coeffs.begin(), b_coeffs.end(),
                                        [](const Rat& c) { return c == 0; }))
        throw ZeroTuple("de Jonquieres denominator is zero");

    // Chart form (x1, x2) -> (x1, x2 + A(x1)/B(x1)). Homogenize A and B to a
    // common degree d0 and assemble [x0*B : x1*B : x2*B + x0*A], degree d0+1.
    int da = static_cast<int>(a_coeffs.size()) - 1;
    int db = static_cast<int>(b_coeffs.size()) - 1;
    int d0 = std::max(std::max(da, db), 0);
    auto lift = [&](const std::vector<Rat>& cs, bool negate) {
        RatPoly p(dom, 3);
        for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
            // coefficient of x1^k, padded with x0 up to degree d0
            ExpVec e{d0 - k, k, 0};
            p.add_term(std::move(e), negate ? -cs[k] : cs[k]);
        }
        return RatHomogPoly::from_poly(p, d0);
    };
    RatHomogPoly A = lift(a_coeffs, false);
    RatHomogPoly Aneg = lift(a_coeffs, true);
    RatHomogPoly B = lift(b_coeffs, false);
    auto x = [&](int i) { return RatHomogPoly::variable(dom, 3, i); };

    auto assemble = [&](const RatHomogPoly& num) {
        std::vector<RatHomogPoly> comps{x(0) * B, x(1) * B, x(2) * B + x(0) * num};
        return reduce(RatMapTuple(std::move(comps))).map;
    };
    RatBirationalMap f = assemble(A);
    RatBirationalMap g = assemble(Aneg);
    auto certified = certify_inverse(f, g);
    if (!certified) throw Error("de Jonquieres closed-form inverse failed certification");
    return *certified;
}

}  // namespace birkit
