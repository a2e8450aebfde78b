#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cheegerlab/alignment.hpp"
#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/lab.hpp"
#include "cheegerlab/metrics.hpp"

using namespace cheegerlab;

namespace {

constexpr double kPi = std::numbers::pi;

std::mt19937_64 rng(31337ull);
double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

}  // namespace

TEST_CASE("align recovers an applied motion") {
    for (int rep = 0; rep < 6; ++rep) {
        const Polygon fixed = random_convex_ngon(5 + static_cast<int>(rng() % 3),
                                                 item_seed(11, static_cast<uint64_t>(rep)));
        const RigidMotion m0{uniform(0, 2 * kPi), {uniform(-2, 2), uniform(-2, 2)},
                             rng() % 2 == 0};
        const Polygon moving = apply_motion(fixed, m0);

        const AlignResult hd = align(moving, fixed, DistanceMetric::hausdorff);
        CHECK(hd.distance <= 1e-6);
        const AlignResult l1 = align(moving, fixed, DistanceMetric::l1);
        CHECK(l1.distance <= 1e-6);
    }
}

TEST_CASE("regular n-gon symmetry makes any rotation recoverable") {
    for (int n : {5, 6, 8}) {
        const Polygon p = regular_ngon(n);
        const Polygon rotated = apply_motion(p, {kPi / n, {0, 0}, false});
        const AlignResult r = align(rotated, p, DistanceMetric::hausdorff);
        CHECK(r.distance <= 1e-6);
    }
}

TEST_CASE("spiked hexagon stays far from the regular one") {
    const Polygon spiked = normalize_area(tentacle_polygon(20.0));
    AlignOptions opts;
    opts.rotation_symmetry = 6;
    const AlignResult r = align(regular_ngon(6), spiked, DistanceMetric::hausdorff, opts);
    CHECK(r.distance >= 1.0);
}

TEST_CASE("align never loses to the centroid-matched identity") {
    for (int rep = 0; rep < 8; ++rep) {
        const Polygon a = random_convex_ngon(6, item_seed(77, static_cast<uint64_t>(rep)));
        const Polygon b = random_convex_ngon(6, item_seed(78, static_cast<uint64_t>(rep)));
        const AlignResult r = align(a, b, DistanceMetric::hausdorff);

        const Vec2 shift = centroid(b) - centroid(a);
        const double at_identity =
            convex_boundary_hausdorff(apply_motion(a, {0.0, shift, false}), b);
        CHECK(r.distance <= at_identity + 1e-12);
    }
}

TEST_CASE("optimal distance is invariant under moving-side motions") {
    const Polygon a = random_convex_ngon(6, 123);
    const Polygon b = random_convex_ngon(6, 456);
    const double base = align(a, b, DistanceMetric::hausdorff).distance;
    for (int rep = 0; rep < 4; ++rep) {
        const RigidMotion m{uniform(0, 2 * kPi), {uniform(-1, 1), uniform(-1, 1)}, false};
        const double moved = align(apply_motion(a, m), b, DistanceMetric::hausdorff).distance;
        CHECK(std::abs(moved - base) <= 2e-6);
    }
}

TEST_CASE("aligned deficit records") {
    const StabilityRecord reg = aligned_deficit_record(regular_ngon(6), "regular");
    CHECK(std::abs(reg.deficit) < 1e-9);
    CHECK(reg.hd_aligned <= 1e-6);
    CHECK_FALSE(reg.ratio_hd.has_value());  // degenerate denominator
    CHECK_FALSE(reg.ratio_l1.has_value());
    CHECK(reg.cheeger_regular);
    CHECK(reg.n == 6);

    const Polygon rect = make_polygon({{0, 0}, {2, 0}, {2, 0.5}, {0, 0.5}});
    const StabilityRecord r = aligned_deficit_record(rect, "rect");
    const double want_deficit =
        (5.0 + std::sqrt(9.0 + 4.0 * kPi)) / 2.0 - (2.0 + std::sqrt(kPi));
    CHECK(r.deficit == doctest::Approx(want_deficit).epsilon(1e-7));
    CHECK(r.hd_aligned > 0.1);
    CHECK(r.ratio_hd.has_value());
    CHECK(*r.ratio_hd > 0.0);
    CHECK(*r.ratio_l1 > 0.0);
    CHECK(r.diameter == doctest::Approx(std::sqrt(4.25)).epsilon(1e-12));

    const StabilityRecord pert = aligned_deficit_record(perturb_ngon(6, 0.05), "pert");
    CHECK(pert.deficit > 0.0);
    CHECK(pert.ratio_hd.has_value());
    CHECK(std::isfinite(*pert.ratio_hd));
    CHECK(std::isfinite(*pert.ratio_l1));
}
