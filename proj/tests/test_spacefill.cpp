#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "birkit/spacefill.hpp"
#include "test_support.hpp"

using namespace birkit;

TEST_CASE("curve starts at the origin") {
    for (int k : {2, 3, 8}) {
        auto p = hilbert_point(0.0, k, 4);
        for (double c : p) CHECK(c == 0.0);
    }
}

TEST_CASE("consecutive cells are unit steps apart") {
    for (auto [dims, depth] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {4, 2}}) {
        unsigned __int128 cells = static_cast<unsigned __int128>(1) << (dims * depth);
        auto prev = hilbert_axes(0, dims, depth);
        for (unsigned __int128 i = 1; i < cells; ++i) {
            auto cur = hilbert_axes(i, dims, depth);
            int moved = 0, dist = 0;
            for (int a = 0; a < dims; ++a) {
                int d = std::abs(static_cast<int>(cur[a]) - static_cast<int>(prev[a]));
                if (d) ++moved;
                dist += d;
            }
            REQUIRE(moved == 1);
            REQUIRE(dist == 1);
            prev = cur;
        }
    }
}

TEST_CASE("every planar cell at depth 3 is reached") {
    std::set<std::pair<int, int>> hit;
    for (int i = 0; i < 4096; ++i) {
        double t = static_cast<double>(i) / 4095.0;
        auto p = hilbert_point(t, 2, 3);
        int cx = std::min(7, static_cast<int>(p[0] * 8));
        int cy = std::min(7, static_cast<int>(p[1] * 8));
        hit.emplace(cx, cy);
    }
    CHECK(hit.size() == 64);
}

TEST_CASE("the continuity modulus |h(t)-h(s)| <= C |t-s|^{1/k} holds on sampled pairs") {
    std::mt19937 rng(51);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k : {2, 4}) {
        double worst = 0;
        for (int i = 0; i < 10000; ++i) {
            double t = u(rng), s = u(rng);
            auto pt = hilbert_point(t, k, 6);
            auto ps = hilbert_point(s, k, 6);
            double d = 0;
            for (int a = 0; a < k; ++a) d = std::max(d, std::abs(pt[a] - ps[a]));
            double mod = std::pow(std::abs(t - s), 1.0 / k);
            if (mod > 0) worst = std::max(worst, d / mod);
        }
        // recorded constants: ~2.5 for the plane, a bit larger in 4-D
        CHECK(worst < (k == 2 ? 4.0 : 6.0));
    }
}

TEST_CASE("parameters outside the contracts are rejected") {
    CHECK_THROWS_AS(hilbert_point(-0.1, 2, 3), ParamOutOfRange);
    CHECK_THROWS_AS(hilbert_point(0.5, 9, 3), ParamOutOfRange);
    CHECK_THROWS_AS(hilbert_point(0.5, 2, 11), ParamOutOfRange);
}

TEST_CASE("the box origin maps to the identity matrix") {
    std::array<double, 8> zero{};
    CHECK((su3_from_box(zero) - Eigen::Matrix3cd::Identity()).norm() < 1e-15);
    std::array<double, 3> zero3{};
    CHECK((so3_from_box(zero3) - Eigen::Matrix3d::Identity()).norm() < 1e-15);
}

TEST_CASE("unitarity and determinant residuals stay below 1e-12") {
    std::mt19937 rng(52);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_u = 0, worst_d = 0;
    for (int i = 0; i < 10000; ++i) {
        UnitaryPoint pt;
        for (auto& c : pt.source) c = u(rng);
        pt.U = su3_from_box(pt.source);
        worst_u = std::max(worst_u, pt.unitarity_residual());
        worst_d = std::max(worst_d, pt.det_residual());
    }
    CHECK(worst_u < 1e-12);
    CHECK(worst_d < 1e-12);

    for (int i = 0; i < 1000; ++i) {
        std::array<double, 3> x{u(rng), u(rng), u(rng)};
        auto R = so3_from_box(x);
        CHECK((R.transpose() * R - Eigen::Matrix3d::Identity()).norm() < 1e-12);
        CHECK(std::abs(R.determinant() - 1.0) < 1e-12);
    }
}

TEST_CASE("curve samples densify the group while the depth binds") {
    // Past depth ~3 the sample count, not the curve resolution, limits how
    // close 10^5 samples get to a target, so the means saturate there.
    std::mt19937 rng(53);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Eigen::Matrix3cd> targets;
    for (int i = 0; i < 8; ++i) {
        Eigen::Matrix3cd A;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) A(r, c) = Cx{g(rng), g(rng)};
        Eigen::HouseholderQR<Eigen::Matrix3cd> qr(A);
        Eigen::Matrix3cd Q = qr.householderQ();
        Q.col(0) /= Q.determinant();
        targets.push_back(Q);
    }
    const int samples = 100000;
    std::vector<double> means;
    for (int depth : {1, 2, 3}) {
        std::vector<double> best(targets.size(), 1e9);
        for (int i = 0; i < samples; ++i) {
            double t = (i + 0.5) / samples;
            auto box = hilbert_point(t, 8, depth);
            std::array<double, 8> x{};
            for (int k = 0; k < 8; ++k) x[k] = box[k];
            Eigen::Matrix3cd U = su3_from_box(x);
            for (std::size_t k = 0; k < targets.size(); ++k)
                best[k] = std::min(best[k], (U - targets[k]).norm());
        }
        double mean = 0;
        for (double b : best) mean += b;
        means.push_back(mean / best.size());
    }
    CHECK(means[0] > means[1]);
    CHECK(means[1] > means[2]);
}

TEST_CASE("the oscillating family degenerates to the scaled identity at t = 1") {
    auto rho1 = rho_oscillating(1.0, 6);
    CHECK(rho1 == f_t_tuple(1.0));
    auto fib = project_to_identity_fiber(WdPoint::from_tuple(rho1));
    CHECK(fib.residual < 1e-14);
}

TEST_CASE("the transported indeterminacy point annihilates all components") {
    for (double t : {0.4, 0.09, 0.021}) {
        Eigen::Vector3cd q = sigma_hat(t, 6).col(2);
        auto vals = rho_oscillating(t, 6).eval_raw({q(0), q(1), q(2)});
        double nm = 0;
        for (const auto& v : vals) nm += std::norm(v);
        CHECK(std::sqrt(nm) < 1e-12);
    }
}

TEST_CASE("away from the endpoints the conjugates keep their full degree") {
    for (double t : {0.3, 0.5, 0.77}) {
        auto w = WdPoint::from_tuple(rho_oscillating(t, 6));
        CHECK(project_to_identity_fiber(w).residual > 1e-3);
    }
}

TEST_CASE("cloud covering radius shrinks with nested sampling") {
    auto c1 = indeterminacy_cloud(0.1, 100, 6, 2000);
    auto c2 = indeterminacy_cloud(0.1, 1000, 6, 2000);
    CHECK(c1.covering_radius > c2.covering_radius);
    CHECK(c2.covering_radius > 0);
    // nested sampling: the first 100 parameters of the larger run coincide
    for (int i = 0; i < 100; ++i)
        CHECK(chordal_distance(c1.points[i], c2.points[i]) < 1e-14);
}

TEST_CASE("homotopy endpoints and corner") {
    for (double t : {0.0, 0.2, 0.5, 0.8, 1.0}) CHECK(homotopy_H(1.0, t, 6) == f_t_tuple(t));
    CHECK(homotopy_H(0.0, 0.0, 6).is_identity_tuple());
    CHECK_THROWS_AS(homotopy_H(-0.1, 0.5, 6), ParamOutOfRange);
}

TEST_CASE("exact members certify inverses and fix the base point") {
    auto rho = nonlift_family_exact(Rat(1, 7), Rat(2, 5));
    REQUIRE(rho.certified_inverse() != nullptr);
    RationalDomain QQ;
    auto out = eval_point(rho, {Rat(1), Rat(0), Rat(0)});
    REQUIRE(!out.indeterminate);
    CHECK(points_equal(QQ, out.point, {Rat(1), Rat(0), Rat(0)}));

    // exact round trip through the inverse at random regular points
    std::mt19937 rng(54);
    const auto& inv = *rho.certified_inverse();
    int done = 0;
    while (done < 10) {
        auto p = birkit::testing::random_rat_point(rng, 3);
        bool zero = true;
        for (const auto& c : p) zero = zero && c == 0;
        if (zero) continue;
        auto q = eval_point(inv, p);
        if (q.indeterminate) continue;
        auto back = eval_point(rho, q.point);
        if (back.indeterminate) continue;
        CHECK(points_equal(QQ, back.point, p));
        ++done;
    }
}

TEST_CASE("float members invert within 1e-8 at random regular points") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double t = 0.37;
    auto f = nonlift_family_float(t);
    auto g = nonlift_family_float(-t);
    int done = 0;
    while (done < 10) {
        std::vector<Cx> p{Cx{u(rng), u(rng)}, Cx{u(rng), u(rng)}, Cx{u(rng), u(rng)}};
        auto q = g.eval_raw(p);
        double nq = 0;
        for (const auto& c : q) nq += std::norm(c);
        if (nq < 1e-6) continue;
        auto back = f.eval_raw(q);
        double nb = 0;
        for (const auto& c : back) nb += std::norm(c);
        if (nb < 1e-12) continue;
        CHECK(chordal_distance(back, p) < 1e-8);
        ++done;
    }
}

TEST_CASE("obstruction demo: identical projections, separated lifts") {
    auto rep = nonlift_obstruction_demo({0.0, 0.5});
    CHECK(rep.symbolic_vanishing);
    for (const auto& l : rep.limits) {
        CHECK(l.match_residual <= 1e-6);
        CHECK(l.fiber_residual <= 1e-6);
    }
    CHECK(rep.diameter >= 0.1);
}
