#include "cheegerlab/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/metrics.hpp"

namespace cheegerlab {

namespace {

struct Evaluator {
    const Polygon& moving;
    const Polygon& fixed;
    DistanceMetric metric;
    bool convex_pair;
    double search_err_tol;
    Vec2 centroid_moving;
    Vec2 centroid_fixed;

    RigidMotion motion(double angle, bool reflect, Vec2 offset) const {
        // Reflect, rotate about the moving centroid, then place that
        // centroid at centroid_fixed + offset.
        Vec2 cm = centroid_moving;
        if (reflect) cm.y = -cm.y;
        const double c = std::cos(angle), s = std::sin(angle);
        const Vec2 rot_cm{c * cm.x - s * cm.y, s * cm.x + c * cm.y};
        return {angle, centroid_fixed + offset - rot_cm, reflect};
    }

    double operator()(double angle, bool reflect, Vec2 offset) const {
        const Polygon moved = apply_motion(moving, motion(angle, reflect, offset));
        if (metric == DistanceMetric::l1) return symmetric_difference_area(moved, fixed);
        if (convex_pair) return convex_boundary_hausdorff(moved, fixed);
        return hausdorff_boundary(moved, fixed, search_err_tol).estimate;
    }
};

}  // namespace

AlignResult align(const Polygon& moving, const Polygon& fixed, DistanceMetric metric,
                  const AlignOptions& opts) {
    const double scale = std::max(bbox_scale(moving), bbox_scale(fixed));
    const int sym = std::max(1, opts.rotation_symmetry);
    const double period = 2.0 * std::numbers::pi / sym;
    const int steps = std::max(1, opts.coarse_steps / sym);

    Evaluator eval{moving,
                   fixed,
                   metric,
                   is_convex(moving) && is_convex(fixed),
                   opts.search_err_tol_rel * scale,
                   centroid(moving),
                   centroid(fixed)};

    struct Candidate {
        double value;
        double angle;
        bool reflect;
    };
    std::vector<Candidate> grid;
    grid.reserve(static_cast<size_t>(2 * steps));
    for (int refl = 0; refl < 2; ++refl) {
        for (int k = 0; k < steps; ++k) {
            const double angle = period * k / steps;
            grid.push_back({eval(angle, refl != 0, {}), angle, refl != 0});
        }
    }
    // Deterministic ranking: value, then grid order (lowest angle first).
    std::stable_sort(grid.begin(), grid.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

    // A sampled objective cannot resolve steps below its own noise; stop the
    // shrink there and leave the rest to the final evaluation.
    const bool sampled = metric == DistanceMetric::hausdorff && !eval.convex_pair;
    const double step_tol =
        std::max(opts.step_tol_rel * scale, sampled ? 0.25 * eval.search_err_tol : 0.0);
    double best_value = grid.front().value;
    double best_angle = grid.front().angle;
    bool best_reflect = grid.front().reflect;
    Vec2 best_offset{};

    const int starts = std::min<int>(opts.keep_best, static_cast<int>(grid.size()));
    for (int s = 0; s < starts; ++s) {
        double angle = grid[static_cast<size_t>(s)].angle;
        const bool refl = grid[static_cast<size_t>(s)].reflect;
        Vec2 offset{};
        double value = grid[static_cast<size_t>(s)].value;

        double astep = period / steps;
        double tstep = 0.05 * scale;
        for (int guard = 0; (astep > step_tol || tstep > step_tol) && guard < 5000; ++guard) {
            struct Probe {
                double angle;
                Vec2 offset;
            };
            const Probe probes[10] = {
                {angle + astep, offset},
                {angle - astep, offset},
                {angle, offset + Vec2{tstep, 0}},
                {angle, offset - Vec2{tstep, 0}},
                {angle, offset + Vec2{0, tstep}},
                {angle, offset - Vec2{0, tstep}},
                // diagonals keep the search from stalling in oblique valleys
                {angle, offset + Vec2{tstep, tstep}},
                {angle, offset + Vec2{tstep, -tstep}},
                {angle, offset + Vec2{-tstep, tstep}},
                {angle, offset + Vec2{-tstep, -tstep}},
            };
            // Sufficient decrease, so sampling jitter cannot keep the walk alive.
            const double gain = 1e-4 * tstep * (metric == DistanceMetric::l1 ? scale : 1.0);
            bool improved = false;
            for (const Probe& pr : probes) {
                const double v = eval(pr.angle, refl, pr.offset);
                if (v < value - gain) {
                    value = v;
                    angle = pr.angle;
                    offset = pr.offset;
                    improved = true;
                }
            }
            if (!improved) {
                astep *= 0.5;
                tstep *= 0.5;
            }
        }
        if (value < best_value) {
            best_value = value;
            best_angle = angle;
            best_reflect = refl;
            best_offset = offset;
        }
    }

    // Report the distance at the requested accuracy, and never return a
    // motion worse than the centroid-matched identity under that evaluator.
    auto final_distance = [&](double angle, bool refl, Vec2 offset) {
        const Polygon moved = apply_motion(moving, eval.motion(angle, refl, offset));
        if (metric == DistanceMetric::l1) return symmetric_difference_area(moved, fixed);
        if (eval.convex_pair) return convex_boundary_hausdorff(moved, fixed);
        return hausdorff_boundary(moved, fixed, opts.final_err_tol_rel * scale).estimate;
    };
    double dist = final_distance(best_angle, best_reflect, best_offset);
    const double at_identity = final_distance(0.0, false, {});
    if (at_identity < dist) {
        dist = at_identity;
        best_angle = 0.0;
        best_reflect = false;
        best_offset = {};
    }
    return {eval.motion(best_angle, best_reflect, best_offset), dist};
}

StabilityRecord aligned_deficit_record(const Polygon& p, const std::string& id) {
    if (!is_convex(p)) throw NonConvexError();
    const Polygon pn = normalize_area(p);
    const int n = pn.n();
    const Polygon reference = regular_ngon(n);

    const CheegerReport rep = cheeger_constant(pn, CheegerMethod::automatic);
    const double deficit = rep.h - regular_ngon_cheeger(n);

    AlignOptions opts;
    opts.rotation_symmetry = n;  // the moving shape is the regular n-gon
    const double hd = align(reference, pn, DistanceMetric::hausdorff, opts).distance;
    const double l1 = align(reference, pn, DistanceMetric::l1, opts).distance;

    StabilityRecord rec;
    rec.id = id;
    rec.n = n;
    rec.deficit = deficit;
    rec.hd_aligned = hd;
    rec.l1_aligned = l1;
    rec.diameter = diameter(pn);
    rec.cheeger_regular = rep.cheeger_regular;
    if (deficit > kDegenerateDeficit) {
        rec.ratio_hd = hd * hd / deficit;
        rec.ratio_l1 = l1 * l1 / deficit;
    }
    return rec;
}

}  // namespace cheegerlab
