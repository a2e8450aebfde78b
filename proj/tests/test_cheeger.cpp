#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/metrics.hpp"

using namespace cheegerlab;

namespace {

constexpr double kPi = std::numbers::pi;

Polygon unit_square() { return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

std::mt19937_64 rng(90210ull);
double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

Polygon random_convex(int n) {
    while (true) {
        std::vector<double> ang(static_cast<size_t>(n));
        for (double& a : ang) a = uniform(0, 2 * kPi);
        std::sort(ang.begin(), ang.end());
        bool ok = ang.front() + 2 * kPi - ang.back() > 0.25;
        for (size_t i = 0; i + 1 < ang.size() && ok; ++i) ok = ang[i + 1] - ang[i] > 0.25;
        if (!ok) continue;
        std::vector<Vec2> pts;
        for (double a : ang) pts.push_back({uniform(0.6, 1.0) * std::cos(a),
                                            uniform(0.6, 1.0) * std::sin(a)});
        try {
            Polygon p = make_polygon(pts);
            if (is_convex(p)) return p;
        } catch (const GeometryError&) {
        }
    }
}

// Independent oracle: plain bisection on a closed-form inner-area equation
// f(r) = A_inner(r) - pi r^2 with A_inner given analytically.
template <typename F>
double bisect_oracle(F inner_area_formula, double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double g = inner_area_formula(mid) - kPi * mid * mid;
        (g > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("unit square Cheeger constant, both routes, against the oracle") {
    const double h_closed = 2.0 + std::sqrt(kPi);
    const double r_oracle =
        bisect_oracle([](double r) { return (1 - 2 * r) * (1 - 2 * r); }, 0.0, 0.5);
    CHECK(r_oracle == doctest::Approx(1.0 / h_closed).epsilon(1e-12));

    const Polygon sq = unit_square();
    CHECK(cheeger_radius(sq) == doctest::Approx(r_oracle).epsilon(1e-10));

    const CheegerReport both = cheeger_constant(sq, CheegerMethod::automatic);
    CHECK(both.method == "both");
    CHECK(std::abs(both.h - h_closed) < 1e-9);
    CHECK(both.cross_error.has_value());
    CHECK(*both.cross_error < 1e-9);
    CHECK(std::abs(both.h * both.radius - 1.0) < 1e-12);
    CHECK(both.residual.has_value());
    CHECK(*both.residual <= 1e-10 * area(sq));
    CHECK(both.cheeger_regular);
    CHECK(both.inner_polygon.n() == 4);

    const CheegerReport froot = cheeger_constant(sq, CheegerMethod::radius_root);
    CHECK(froot.method == "radius-root");
    CHECK(std::abs(froot.h - h_closed) < 1e-9);

    const CheegerReport fform = cheeger_constant(sq, CheegerMethod::formula);
    CHECK(fform.method == "formula");
    CHECK(std::abs(fform.h - h_closed) < 1e-12);
    CHECK_FALSE(fform.residual.has_value());
}

TEST_CASE("2 x 0.5 rectangle against the bisection oracle") {
    const Polygon rect = make_polygon({{0, 0}, {2, 0}, {2, 0.5}, {0, 0.5}});
    const double r_oracle = bisect_oracle(
        [](double r) { return std::max(0.0, 2 - 2 * r) * std::max(0.0, 0.5 - 2 * r); }, 0.0,
        0.25);
    // quadratic (4 - pi) r^2 - 5 r + 1 = 0, smaller root
    const double r_closed = (5.0 - std::sqrt(9.0 + 4.0 * kPi)) / (2.0 * (4.0 - kPi));
    CHECK(r_oracle == doctest::Approx(r_closed).epsilon(1e-12));
    CHECK(r_oracle == doctest::Approx(0.20738367465914245).epsilon(1e-12));

    CHECK(cheeger_radius(rect) == doctest::Approx(r_oracle).epsilon(1e-10));
    const CheegerReport rep = cheeger_constant(rect);
    CHECK(std::abs(rep.h - (5.0 + std::sqrt(9.0 + 4.0 * kPi)) / 2.0) < 1e-9);
    CHECK(rep.cheeger_regular);  // all four sides carry the Cheeger set
}

TEST_CASE("regular n-gon identity") {
    for (int n = 3; n <= 12; ++n) {
        const double p0 = 2.0 * std::sqrt(n * std::tan(kPi / n));
        const double want = 0.5 * (p0 + 2.0 * std::sqrt(kPi));
        CHECK(regular_ngon_cheeger(n) == doctest::Approx(want).epsilon(1e-15));

        const CheegerReport rep = cheeger_constant(regular_ngon(n));
        CHECK(rep.method == "both");
        CHECK(std::abs(rep.h - want) < 1e-9);
        CHECK(*rep.cross_error < 1e-9);
    }
    // N=3 closed form via 2 sqrt(3 tan(pi/3)) = 6/3^(1/4)
    CHECK(regular_ngon_cheeger(3) ==
          doctest::Approx(0.5 * (6.0 / std::pow(3.0, 0.25) + 2.0 * std::sqrt(kPi)))
              .epsilon(1e-14));
    CHECK(regular_ngon_cheeger(3) == doctest::Approx(4.05196).epsilon(1e-5));
}

TEST_CASE("thin unit-area rectangle") {
    const Polygon thin = make_polygon({{0, 0}, {10, 0}, {10, 0.1}, {0, 0.1}});
    const CheegerReport rep = cheeger_constant(thin, CheegerMethod::automatic);
    CHECK(rep.h > 0.0);
    CHECK(rep.radius < inradius(thin));
    CHECK(*rep.residual <= 1e-10 * area(thin));
    if (rep.cheeger_regular) {
        REQUIRE(rep.cross_error.has_value());
        CHECK(*rep.cross_error <= 1e-8 * rep.h);
    }
}

TEST_CASE("cheeger regularity") {
    CHECK(is_cheeger_regular(unit_square()));
    for (int n : {3, 5, 8}) CHECK(is_cheeger_regular(regular_ngon(n)));

    // square with a corner clipped at depth 1e-3: the short edge vanishes
    // under the offset at the Cheeger radius
    const double d = 1e-3;
    const Polygon clipped = make_polygon({{0, 0}, {1, 0}, {1, 1 - d}, {1 - d, 1}, {0, 1}});
    CHECK_FALSE(is_cheeger_regular(clipped));
    CHECK_THROWS_AS(cheeger_constant(clipped, CheegerMethod::formula), NotCheegerRegularError);

    const CheegerReport rep = cheeger_constant(clipped, CheegerMethod::automatic);
    CHECK(rep.method == "radius-root");
    CHECK_FALSE(rep.cross_error.has_value());
    // nearly the square's constant
    CHECK(rep.h == doctest::Approx(2.0 + std::sqrt(kPi)).epsilon(1e-2));
}

TEST_CASE("cheeger set") {
    const Polygon sq = unit_square();
    const ArcPolygon c = cheeger_set(sq);
    const double h = 2.0 + std::sqrt(kPi);
    CHECK(c.radius == doctest::Approx(1.0 / h).epsilon(1e-10));
    CHECK(c.core.n() == 4);
    const double side = distance(c.core.vertex(0), c.core.vertex(1));
    CHECK(side == doctest::Approx(1.0 - 2.0 / h).epsilon(1e-9));

    const auto m = arc_polygon_measures(c);
    CHECK(m.perimeter / m.area == doctest::Approx(h).epsilon(1e-8));
    CHECK(contains_arc_polygon(sq, c, 1e-6));

    const Polygon hex = regular_ngon(6);
    const ArcPolygon ch = cheeger_set(hex);
    CHECK(ch.core.n() == 6);
    const auto mh = arc_polygon_measures(ch);
    CHECK(mh.perimeter / mh.area ==
          doctest::Approx(regular_ngon_cheeger(6)).epsilon(1e-8));

    // self-consistency on a generic convex polygon
    for (int rep = 0; rep < 20; ++rep) {
        const Polygon p = random_convex(3 + static_cast<int>(rng() % 6));
        const CheegerReport r = cheeger_constant(p);
        const ArcPolygon cs = cheeger_set(p);
        const auto ms = arc_polygon_measures(cs);
        CHECK(ms.perimeter / ms.area == doctest::Approx(r.h).epsilon(1e-8));
        CHECK(std::abs(ms.area - (area(r.inner_polygon) + perimeter(r.inner_polygon) * r.radius +
                                  kPi * r.radius * r.radius)) < 1e-9);
        CHECK(contains_arc_polygon(p, cs, 1e-6));
    }
}

TEST_CASE("upper bounds by contained test sets") {
    const Polygon sq = unit_square();
    const ArcPolygon c = cheeger_set(sq);
    CHECK(cheeger_upper_bound(sq, c) == doctest::Approx(2.0 + std::sqrt(kPi)).epsilon(1e-9));

    auto far_core = apply_motion(c.core, {0.0, {10, 0}, false});
    CHECK_THROWS_AS(cheeger_upper_bound(sq, minkowski_disk(far_core, c.radius)),
                    NotContainedError);
}

TEST_CASE("deficit and the ball") {
    CHECK(h_ball() == doctest::Approx(2.0 * std::sqrt(kPi)).epsilon(1e-15));
    CHECK(h_ball() == doctest::Approx(3.5449077).epsilon(1e-7));

    for (int n : {3, 4, 6, 9, 12}) CHECK(std::abs(cheeger_deficit(regular_ngon(n))) < 1e-9);
    CHECK(std::abs(cheeger_deficit(unit_square())) < 1e-9);

    const Polygon rect = make_polygon({{0, 0}, {2, 0}, {2, 0.5}, {0, 0.5}});
    const double h_rect = (5.0 + std::sqrt(9.0 + 4.0 * kPi)) / 2.0;
    CHECK(cheeger_deficit(rect) ==
          doctest::Approx(h_rect - (2.0 + std::sqrt(kPi))).epsilon(1e-9));
    CHECK(cheeger_deficit(rect) > 0.0);

    // deficit to the ball decreases in n
    double prev = 1e300;
    for (int n = 3; n <= 12; ++n) {
        const double gap = regular_ngon_cheeger(n) - h_ball();
        CHECK(gap > 0.0);
        CHECK(gap < prev);
        prev = gap;
    }

    CHECK_THROWS_AS(
        cheeger_deficit(make_polygon({{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}})),
        NonConvexError);
}

TEST_CASE("invariance and monotonicity properties") {
    for (int rep = 0; rep < 30; ++rep) {
        const Polygon p = random_convex(3 + static_cast<int>(rng() % 6));
        const double h = cheeger_constant(p).h;

        // scaling: h(lambda p) = h(p)/lambda
        for (double lam : {0.5, 2.0, 10.0})
            CHECK(cheeger_constant(scaled(p, lam)).h == doctest::Approx(h / lam).epsilon(1e-9));

        // rigid motion invariance
        const RigidMotion m{uniform(0, 2 * kPi), {uniform(-2, 2), uniform(-2, 2)},
                            rng() % 2 == 0};
        CHECK(std::abs(cheeger_constant(apply_motion(p, m)).h - h) < 1e-10);

        // Cheeger inequality
        CHECK(std::sqrt(area(p)) * h >= 2.0 * std::sqrt(kPi) - 1e-9);

        // monotonicity under a halfplane cut through the interior
        const Vec2 c = centroid(p);
        const double a = uniform(0, 2 * kPi);
        const Vec2 dir{std::cos(a), std::sin(a)};
        std::vector<Vec2> kept;
        const auto& v = p.vertices();
        for (size_t i = 0; i < v.size(); ++i) {
            const Vec2 s = v[i], t = v[(i + 1) % v.size()];
            const double ds = cross(dir, s - c), dt = cross(dir, t - c);
            if (ds >= 0) kept.push_back(s);
            if ((ds >= 0) != (dt >= 0)) kept.push_back(s + (ds / (ds - dt)) * (t - s));
        }
        if (kept.size() >= 3) {
            try {
                const Polygon q = make_polygon(kept);
                CHECK(cheeger_constant(q).h >= h - 1e-10);
            } catch (const GeometryError&) {
                // degenerate cut; skip
            }
        }
    }
}
