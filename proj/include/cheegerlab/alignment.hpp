#pragma once

#include <optional>
#include <string>

#include "cheegerlab/geometry.hpp"

namespace cheegerlab {

enum class DistanceMetric { hausdorff, l1 };

struct AlignOptions {
    int coarse_steps = 512;   // rotation grid resolution over one period
    int keep_best = 5;        // coarse candidates refined by pattern search
    double step_tol_rel = 1e-9;        // pattern-search termination (x scale)
    double search_err_tol_rel = 1e-4;  // sampled-Hausdorff tolerance in the loop (x scale)
    double final_err_tol_rel = 1e-6;   // tolerance of the reported distance (x scale)
    // Known rotational symmetry order of the objective (e.g. the side count
    // when one shape is a regular polygon); shrinks the grid period, never
    // changes the optimum.
    int rotation_symmetry = 1;
};

struct AlignResult {
    RigidMotion motion;
    double distance = 0.0;
};

/// Approximately minimize metric(apply_motion(moving, m), fixed) over rigid
/// motions: centroid matching, a coarse rotation x reflection grid, then
/// pattern search on (angle, tx, ty) with shrinking steps.  The result is
/// never worse than the centroid-matched identity.
AlignResult align(const Polygon& moving, const Polygon& fixed, DistanceMetric metric,
                  const AlignOptions& opts = {});

/// One row of the stability experiments.
struct StabilityRecord {
    std::string id;
    int n = 0;
    double deficit = 0.0;
    double hd_aligned = 0.0;
    double l1_aligned = 0.0;
    double diameter = 0.0;
    std::optional<double> ratio_hd;  // hd^2/deficit; absent when deficit <= 1e-12
    std::optional<double> ratio_l1;
    bool cheeger_regular = false;
};

/// Deficit of a convex polygon together with the optimally aligned
/// boundary-Hausdorff and symmetric-difference distances to the regular
/// N-gon (input normalized to unit area first).
StabilityRecord aligned_deficit_record(const Polygon& p, const std::string& id = "");

/// Threshold below which a deficit is reported as degenerate instead of
/// being used as a ratio denominator.
inline constexpr double kDegenerateDeficit = 1e-12;

}  // namespace cheegerlab
