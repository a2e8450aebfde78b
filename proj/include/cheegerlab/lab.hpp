#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cheegerlab/alignment.hpp"
#include "cheegerlab/geometry.hpp"

namespace cheegerlab {

struct EpsTooLargeError : GeometryError {
    EpsTooLargeError() : GeometryError("perturbation too large: convexity lost") {}
};

struct InequalityViolationError : GeometryError {
    using GeometryError::GeometryError;
};

/// splitmix64 of (seed, index); decorrelates per-item streams so ensembles
/// can be evaluated in any order.
std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index);

/// Convex unit-area polygon with exactly n sides, deterministic in seed:
/// sorted direction angles + radii, convex hull, retry until the hull keeps
/// all n points.
Polygon random_convex_ngon(int n, std::uint64_t seed);

/// Regular n-gon with vertex 0 pushed radially outward by eps and vertex
/// floor(n/2) pulled inward so the area stays exactly 1.  Throws
/// EpsTooLargeError when convexity is lost (empirically near eps = 0.71 for
/// n = 4, 0.31 for n = 6, 0.14 for n = 9).
Polygon perturb_ngon(int n, double eps);

/// Unit-area square with one corner cut by a chord of length 1/k and
/// replaced by a spike of height k over that chord: a simple nonconvex
/// hexagon of area 3/2 - 1/(4 k^2) and diameter k + sqrt(2) - 1/(2k).
Polygon tentacle_polygon(double k);

struct SweepRow {
    double eps = 0.0;
    StabilityRecord record;
    std::optional<double> order_estimate;  // deficit decay order vs the previous row
};

std::vector<SweepRow> sweep_perturbation(int n, const std::vector<double>& eps_list);

struct EnsembleReport {
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    bool with_alignment = false;

    double deficit_min = 0.0;
    double deficit_max = 0.0;
    double deficit_mean = 0.0;

    int cheeger_regular_count = 0;
    int degenerate_count = 0;  // deficit <= 1e-12

    // Zero on passing runs.
    int violations_cheeger_inequality = 0;  // sqrt|O| h >= 2 sqrt(pi) - 1e-9
    int violations_bucur_fragala = 0;       // deficit >= -1e-9
    int violations_isoperimetric = 0;       // gap >= -1e-10 and P^2 >= P0^2 - 1e-9
    int violations_bound_chain_1 = 0;       // 2(h - h0) >= P - P0 - 1e-9 (regular rows)
    int violations_bound_chain_2 = 0;       // P - P0 >= (P^2 - P0^2)/(3 P0) - 1e-9
    int violations_cross_check = 0;         // |h_formula - h_root| <= 1e-8 h

    // Empirical constants; absent without alignment or without usable rows.
    std::optional<double> max_ratio_hd_deficit;  // max hd^2/deficit
    std::optional<double> max_ratio_hd_isoper;   // max hd^2/(P^2 - P0^2)

    int total_violations() const {
        return violations_cheeger_inequality + violations_bucur_fragala +
               violations_isoperimetric + violations_bound_chain_1 + violations_bound_chain_2 +
               violations_cross_check;
    }
};

EnsembleReport verify_ensemble(int n, int samples, std::uint64_t seed,
                               bool with_alignment = true);

struct TentacleRow {
    double k = 0.0;
    double raw_area = 0.0;  // |Ω̃_k| before unit-area normalization
    double scaled_bound = 0.0;  // sqrt(raw_area) * P(C0)/|C0|, C0 the square's Cheeger set
    double hd_aligned = 0.0;    // hd(∂Ω_k, ∂ρΩ0) to the unit-area regular hexagon
};

/// Bounded-deficit / unbounded-distance series; checks that the bound column
/// stays below sqrt(3/2) (2 + sqrt(pi)) + 1e-9 and the hd column strictly
/// increases, throwing on violation.
std::vector<TentacleRow> tentacle_series(const std::vector<double>& k_list);

}  // namespace cheegerlab
