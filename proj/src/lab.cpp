#include "cheegerlab/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "cheegerlab/cheeger.hpp"

namespace cheegerlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits; keeps ensembles
// reproducible across standard libraries.
double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::vector<Vec2> hull(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

Polygon random_convex_ngon(int n, std::uint64_t seed) {
    if (n < 3) throw GeometryError("random_convex_ngon needs n >= 3");
    std::mt19937_64 gen(seed);
    const size_t un = static_cast<size_t>(n);

    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<double> angles(un);
        for (double& a : angles) a = 2.0 * std::numbers::pi * uniform01(gen);
        std::sort(angles.begin(), angles.end());

        bool spread = angles.front() + 2.0 * std::numbers::pi - angles.back() > 1e-3;
        for (size_t i = 0; i + 1 < un && spread; ++i)
            spread = angles[i + 1] - angles[i] > 1e-3;
        if (!spread) continue;

        std::vector<Vec2> pts(un);
        for (size_t i = 0; i < un; ++i) {
            const double r = 0.4 + 0.6 * uniform01(gen);
            pts[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
        }
        std::vector<Vec2> hull = convex_hull(pts);
        if (hull.size() != un) continue;

        try {
            Polygon p = make_polygon(std::move(hull));
            if (!is_convex(p)) continue;
            // Reject needle shapes: below ~5e-3 rad the equality-case
            // functionals (tau, isoperimetric gap) cannot be evaluated to
            // the 1e-10 tolerances the ensemble checks assert.
            const auto angles = inner_angles(p);
            if (*std::min_element(angles.begin(), angles.end()) < 5e-3) continue;
            return normalize_area(p);
        } catch (const GeometryError&) {
            continue;
        }
    }
    throw GeometryError("random_convex_ngon failed to produce a valid hull");
}

Polygon perturb_ngon(int n, double eps) {
    if (eps < 0.0) throw GeometryError("perturb_ngon needs eps >= 0");
    const Polygon base = regular_ngon(n);
    if (eps == 0.0) return base;

    std::vector<Vec2> v = base.vertices();
    const Vec2 out_dir = v[0] * (1.0 / norm(v[0]));
    v[0] = v[0] + eps * out_dir;

    const size_t m = static_cast<size_t>(n / 2);
    const Vec2 in_dir = v[m] * (1.0 / norm(v[m]));
    // Area is linear in the radial shift of a single vertex; solve exactly.
    auto area_at = [&](double t) {
        std::vector<Vec2> w = v;
        w[m] = w[m] - t * in_dir;
        double s = 0.0;
        for (size_t i = 0; i < w.size(); ++i) s += cross(w[i], w[(i + 1) % w.size()]);
        return 0.5 * s;
    };
    const double a0 = area_at(0.0), a1 = area_at(1.0);
    const double t = (a0 - 1.0) / (a0 - a1);
    v[m] = v[m] - t * in_dir;

    Polygon p = make_polygon(std::move(v));
    if (!is_convex(p)) throw EpsTooLargeError();
    return p;
}

Polygon tentacle_polygon(double k) {
    if (!(k >= 2.0)) throw GeometryError("tentacle_polygon needs k >= 2");
    const double leg = 1.0 / (std::numbers::sqrt2 * k);  // chord length 1/k
    const Vec2 mid{1.0 - 0.5 * leg, 1.0 - 0.5 * leg};
    const Vec2 apex = mid + (k / std::numbers::sqrt2) * Vec2{1.0, 1.0};
    return make_polygon({{0.0, 0.0},
                         {1.0, 0.0},
                         {1.0, 1.0 - leg},
                         apex,
                         {1.0 - leg, 1.0},
                         {0.0, 1.0}});
}

std::vector<SweepRow> sweep_perturbation(int n, const std::vector<double>& eps_list) {
    std::vector<SweepRow> rows;
    rows.reserve(eps_list.size());
    for (double eps : eps_list) {
        SweepRow row{eps, aligned_deficit_record(perturb_ngon(n, eps), "eps=" + std::to_string(eps)),
                     std::nullopt};
        if (!rows.empty()) {
            const SweepRow& prev = rows.back();
            if (prev.eps > row.eps && row.eps > 0.0 && prev.record.deficit > kDegenerateDeficit &&
                row.record.deficit > kDegenerateDeficit) {
                row.order_estimate = std::log(prev.record.deficit / row.record.deficit) /
                                     std::log(prev.eps / row.eps);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

EnsembleReport verify_ensemble(int n, int samples, std::uint64_t seed, bool with_alignment) {
    if (samples < 1) throw GeometryError("verify_ensemble needs samples >= 1");
    EnsembleReport rep;
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;
    rep.with_alignment = with_alignment;

    const double h0 = regular_ngon_cheeger(n);
    const double p0 = 2.0 * std::sqrt(n * std::tan(std::numbers::pi / n));
    const double two_sqrt_pi = 2.0 * std::sqrt(std::numbers::pi);
    const Polygon reference = regular_ngon(n);

    double dmin = std::numeric_limits<double>::infinity();
    double dmax = -dmin, dsum = 0.0;
    double max_hd_deficit = -1.0, max_hd_iso = -1.0;

    AlignOptions opts;
    opts.rotation_symmetry = n;

    for (int i = 0; i < samples; ++i) {
        const Polygon poly = random_convex_ngon(n, item_seed(seed, static_cast<std::uint64_t>(i)));
        const CheegerReport cr = cheeger_constant(poly, CheegerMethod::automatic);
        const double h = cr.h;
        const double p = perimeter(poly);
        const double deficit = h - h0;  // unit area by construction

        dmin = std::min(dmin, deficit);
        dmax = std::max(dmax, deficit);
        dsum += deficit;
        if (cr.cheeger_regular) ++rep.cheeger_regular_count;
        if (deficit <= kDegenerateDeficit) ++rep.degenerate_count;

        if (!(h >= two_sqrt_pi - 1e-9)) ++rep.violations_cheeger_inequality;
        if (!(deficit >= -1e-9)) ++rep.violations_bucur_fragala;
        if (!(isoperimetric_gap(poly) >= -1e-10) || !(p * p >= p0 * p0 - 1e-9))
            ++rep.violations_isoperimetric;
        if (cr.cheeger_regular) {
            if (!(2.0 * (h - h0) >= p - p0 - 1e-9)) ++rep.violations_bound_chain_1;
            if (!(cr.cross_error.value_or(0.0) <= 1e-8 * h)) ++rep.violations_cross_check;
        }
        if (p < 2.0 * p0 && !(p - p0 >= (p * p - p0 * p0) / (3.0 * p0) - 1e-9))
            ++rep.violations_bound_chain_2;

        if (with_alignment) {
            const double hd =
                align(reference, poly, DistanceMetric::hausdorff, opts).distance;
            if (deficit > kDegenerateDeficit)
                max_hd_deficit = std::max(max_hd_deficit, hd * hd / deficit);
            const double denom = p * p - p0 * p0;
            if (denom > kDegenerateDeficit)
                max_hd_iso = std::max(max_hd_iso, hd * hd / denom);
        }
    }

    rep.deficit_min = dmin;
    rep.deficit_max = dmax;
    rep.deficit_mean = dsum / samples;
    if (max_hd_deficit >= 0.0) rep.max_ratio_hd_deficit = max_hd_deficit;
    if (max_hd_iso >= 0.0) rep.max_ratio_hd_isoper = max_hd_iso;
    return rep;
}

std::vector<TentacleRow> tentacle_series(const std::vector<double>& k_list) {
    const Polygon square = make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const ArcPolygon c0 = cheeger_set(square);
    const Polygon hex = regular_ngon(6);
    const double cap = std::sqrt(1.5) * (2.0 + std::sqrt(std::numbers::pi)) + 1e-9;

    AlignOptions opts;
    opts.rotation_symmetry = 6;
    // Objective values are O(spike length); a coarser sampled surrogate is
    // plenty, the reported distance is re-evaluated finely by align().
    opts.search_err_tol_rel = 1e-3;

    std::vector<TentacleRow> rows;
    rows.reserve(k_list.size());
    for (double k : k_list) {
        const Polygon raw = tentacle_polygon(k);
        const double ub = cheeger_upper_bound(raw, c0);  // certifies C0 ⊂ Ω̃_k
        TentacleRow row;
        row.k = k;
        row.raw_area = area(raw);
        row.scaled_bound = std::sqrt(row.raw_area) * ub;
        row.hd_aligned =
            align(hex, normalize_area(raw), DistanceMetric::hausdorff, opts).distance;

        if (!(row.scaled_bound <= cap))
            throw InequalityViolationError("tentacle bound exceeded sqrt(3/2) h(square)");
        if (!rows.empty() && !(row.hd_aligned > rows.back().hd_aligned))
            throw InequalityViolationError("tentacle hd column is not strictly increasing");
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cheegerlab
