// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned in the checks themselves.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/json_io.hpp"
#include "cheegerlab/lab.hpp"
#include "cheegerlab/metrics.hpp"

using namespace cheegerlab;
using clock_type = std::chrono::steady_clock;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;
std::vector<std::string> g_notes;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// 1. unit square by both methods within 1e-9 of 2+sqrt(pi), < 1 ms
void criterion_1() {
    const Polygon sq = make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const double h_closed = 2.0 + std::sqrt(kPi);
    cheeger_constant(sq);  // warm-up outside the timed section

    const auto t0 = clock_type::now();
    const CheegerReport rep = cheeger_constant(sq, CheegerMethod::automatic);  // runs both
    const double elapsed = ms_since(t0);

    const double h_root = 1.0 / rep.radius;
    const double h_formula = cheeger_constant(sq, CheegerMethod::formula).h;
    const bool pass = rep.method == "both" && std::abs(h_root - h_closed) < 1e-9 &&
                      std::abs(h_formula - h_closed) < 1e-9 &&
                      std::abs(h_root - h_formula) < 1e-9 && elapsed < 1.0;
    report(1, "unit square h = 2+sqrt(pi), both methods", pass,
           fmt("h=%.12f, cross=%.2e, %.3f ms", rep.h,
               rep.cross_error ? *rep.cross_error : -1.0, elapsed));
}

// 2. regular n-gon identity for n=3..12, both methods, polyisop equality
void criterion_2() {
    const auto t0 = clock_type::now();
    bool pass = true;
    double worst_h = 0.0, worst_gap = 0.0;
    for (int n = 3; n <= 12; ++n) {
        const Polygon p = regular_ngon(n);
        const double want = regular_ngon_cheeger(n);
        const CheegerReport rep = cheeger_constant(p, CheegerMethod::automatic);
        const double root_err = std::abs(1.0 / rep.radius - want);
        const double formula_err = std::abs(cheeger_constant(p, CheegerMethod::formula).h - want);
        const double gap = std::abs(isoperimetric_gap(p));
        worst_h = std::max({worst_h, root_err, formula_err});
        worst_gap = std::max(worst_gap, gap);
        pass = pass && root_err < 1e-9 && formula_err < 1e-9 && gap < 1e-10;
    }
    const double elapsed = ms_since(t0);
    pass = pass && elapsed < 10.0;
    report(2, "regular n-gon identity h = (P0 + 2 sqrt(pi))/2, n = 3..12", pass,
           fmt("max |dh|=%.2e, max |gap|=%.2e, %.1f ms", worst_h, worst_gap, elapsed));
}

// 3+4. ensembles: Bucur-Fragala, Cheeger inequality, bound chain
void criteria_3_4() {
    const auto t0 = clock_type::now();
    bool pass_bf = true, pass_chain = true;
    int total = 0, regular_rows = 0;
    for (int n = 3; n <= 8; ++n) {
        const EnsembleReport rep = verify_ensemble(n, 10000, 42, /*with_alignment=*/false);
        total += rep.samples;
        regular_rows += rep.cheeger_regular_count;
        pass_bf = pass_bf && rep.violations_bucur_fragala == 0 &&
                  rep.violations_cheeger_inequality == 0;
        pass_chain = pass_chain && rep.violations_bound_chain_1 == 0 &&
                     rep.violations_bound_chain_2 == 0 && rep.violations_isoperimetric == 0 &&
                     rep.violations_cross_check == 0;
    }
    const double elapsed = ms_since(t0);
    const bool in_time = elapsed < 60000.0;
    report(3, "BF + Cheeger inequalities, 10^4 samples per n in 3..8", pass_bf && in_time,
           fmt("%0.f samples, %.1f s", static_cast<double>(total), elapsed / 1000.0));
    report(4, "bound chain on the Cheeger-regular subpopulation", pass_chain && in_time,
           fmt("%0.f regular rows, %.1f s", static_cast<double>(regular_rows),
               elapsed / 1000.0));
}

// 5. sharpness sweep: quadratic deficit decay, stable ratio
void criterion_5() {
    const auto t0 = clock_type::now();
    const auto rows = sweep_perturbation(6, {0.08, 0.04, 0.02, 0.01});
    const double elapsed = ms_since(t0);

    bool pass = rows.size() == 4 && rows[3].order_estimate.has_value();
    double order = 0.0, variation = 1.0;
    if (pass) {
        order = *rows[3].order_estimate;
        const double c2 = rows[2].record.deficit /
                          (rows[2].record.hd_aligned * rows[2].record.hd_aligned);
        const double c3 = rows[3].record.deficit /
                          (rows[3].record.hd_aligned * rows[3].record.hd_aligned);
        variation = std::abs(c3 - c2) / c2;
        pass = order > 1.7 && order < 2.3 && variation < 0.25;
    }
    pass = pass && elapsed < 1000.0;
    report(5, "perturbation sweep: deficit order ~2, stable deficit/hd^2", pass,
           fmt("order=%.3f, ratio variation=%.1f%%, %.0f ms", order, variation * 100.0,
               elapsed));
}

// 6. tentacle series: bounded scaled Cheeger bound, unbounded distance
void criterion_6() {
    const auto t0 = clock_type::now();
    bool pass = true;
    std::string detail;
    try {
        const auto rows = tentacle_series({5, 10, 20, 40, 80});
        const double cap = std::sqrt(1.5) * (2.0 + std::sqrt(kPi)) + 1e-9;
        for (const auto& r : rows) pass = pass && r.scaled_bound <= cap;
        for (size_t i = 1; i < rows.size(); ++i)
            pass = pass && rows[i].hd_aligned > rows[i - 1].hd_aligned;
        pass = pass && rows.back().hd_aligned > 5.0;
        detail = fmt("bound<=%.6f (cap %.6f), hd(k=80)=%.2f", rows.back().scaled_bound, cap,
                     rows.back().hd_aligned);
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    const double elapsed = ms_since(t0);
    pass = pass && elapsed < 5000.0;
    report(6, "tentacle counterexample: bounded deficit, growing hd", pass,
           detail + fmt(", %.1f s", elapsed / 1000.0));
}

// 7. quantitative isoperimetric ratio over the aligned n=6 ensemble
void criterion_7() {
    const auto t0 = clock_type::now();
    const EnsembleReport rep = verify_ensemble(6, 10000, 42, /*with_alignment=*/true);
    const double elapsed = ms_since(t0);
    const bool pass = rep.violations_isoperimetric == 0 && rep.total_violations() == 0 &&
                      rep.max_ratio_hd_isoper.has_value() &&
                      std::isfinite(*rep.max_ratio_hd_isoper);
    report(7, "hd^2/(P^2 - P0^2) bounded over the n=6 ensemble", pass,
           fmt("max ratio=%.4f, max hd^2/deficit=%.4f, %.1f s",
               rep.max_ratio_hd_isoper.value_or(-1.0), rep.max_ratio_hd_deficit.value_or(-1.0),
               elapsed / 1000.0));
}

// 8. metric oracles: certified hausdorff vs brute sampling, exact symmetric
// differences, erosion semigroup, Steiner cross-checks
void criterion_8() {
    const auto t0 = clock_type::now();
    bool pass = true;

    // certified vs brute on 100 random pairs
    std::mt19937_64 gen(20250809ull);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
    };
    double worst_gap = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const Polygon a = random_convex_ngon(3 + static_cast<int>(gen() % 6), gen());
        const Polygon b = apply_motion(random_convex_ngon(3 + static_cast<int>(gen() % 6), gen()),
                                       {uniform(0, 2 * kPi), {uniform(-1, 1), uniform(-1, 1)},
                                        false});
        const CertifiedDistance cd = hausdorff_boundary(a, b, 1e-4);

        // brute oracle: dense samples at spacing 1e-5, plain loops
        auto one_sided = [&](const Polygon& from, const Polygon& to) {
            const auto& tv = to.vertices();
            double sup = 0.0;
            const auto& fv = from.vertices();
            for (size_t i = 0; i < fv.size(); ++i) {
                const Vec2 s = fv[i], t = fv[(i + 1) % fv.size()];
                const int nseg = std::max(1, static_cast<int>(std::ceil(distance(s, t) / 1e-5)));
                for (int k = 0; k < nseg; ++k) {
                    const Vec2 q = s + (static_cast<double>(k) / nseg) * (t - s);
                    double best = 1e300;
                    for (size_t j = 0; j < tv.size(); ++j)
                        best = std::min(best, point_segment_distance_sq(
                                                  q, tv[j], tv[(j + 1) % tv.size()]));
                    sup = std::max(sup, best);
                }
            }
            return std::sqrt(sup);
        };
        const double brute = std::max(one_sided(a, b), one_sided(b, a));
        worst_gap = std::max(worst_gap, std::abs(cd.estimate - brute));
        pass = pass && std::abs(cd.estimate - brute) <= cd.error_bound;
    }

    // translated squares: |S delta (S+t)| = 2t exactly
    const Polygon sq = make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    for (double t : {0.05, 0.25, 0.75}) {
        const double sd = symmetric_difference_area(sq, apply_motion(sq, {0.0, {t, 0}, false}));
        pass = pass && std::abs(sd - 2 * t) < 1e-10;
    }

    // erosion semigroup at 1e-9 and Steiner measures at 1e-9/1e-6
    for (int rep = 0; rep < 25; ++rep) {
        const Polygon p = random_convex_ngon(3 + static_cast<int>(gen() % 6), gen());
        const double rin = inradius(p);
        const double r1 = 0.2 * rin, r2 = 0.3 * rin;
        const auto direct = inner_parallel(p, r1 + r2);
        const auto chained = inner_parallel(inner_parallel(p, r1).value(), r2);
        pass = pass && direct && chained &&
               convex_boundary_hausdorff(*direct, *chained) < 1e-9;

        const ArcPolygon disk = minkowski_disk(p, 0.3);
        const auto m = arc_polygon_measures(disk);
        pass = pass && std::abs(m.perimeter - (perimeter(p) + 2 * kPi * 0.3)) < 1e-9 &&
               std::abs(m.area - (area(p) + perimeter(p) * 0.3 + kPi * 0.09)) < 1e-9;

        // dense chord fan oracle at 1e-6
        const auto& v = p.vertices();
        double per = 0.0, ar = 0.0;
        std::vector<Vec2> boundary;
        for (size_t i = 0; i < v.size(); ++i) {
            const size_t j = (i + 1) % v.size(), k = (j + 1) % v.size();
            const Vec2 e = v[j] - v[i];
            const Vec2 nrm = Vec2{e.y, -e.x} * (1.0 / norm(e));
            boundary.push_back(v[i] + 0.3 * nrm);
            boundary.push_back(v[j] + 0.3 * nrm);
            const Vec2 e2 = v[k] - v[j];
            const double ext = std::atan2(cross(e, e2), dot(e, e2));
            const double start = std::atan2(nrm.y, nrm.x);
            for (int c = 1; c < 20000; ++c) {
                const double phi = start + ext * c / 20000;
                boundary.push_back(v[j] + 0.3 * Vec2{std::cos(phi), std::sin(phi)});
            }
        }
        for (size_t i = 0; i < boundary.size(); ++i) {
            const Vec2 s = boundary[i], t2 = boundary[(i + 1) % boundary.size()];
            per += distance(s, t2);
            ar += cross(s - boundary[0], t2 - boundary[0]);
        }
        ar *= 0.5;
        pass = pass && std::abs(m.perimeter - per) < 1e-6 && std::abs(m.area - ar) < 1e-6;
    }

    const double elapsed = ms_since(t0);
    pass = pass && elapsed < 30000.0;
    report(8, "metric and offset oracle suites", pass,
           fmt("worst |certified-brute|=%.2e, %.1f s", worst_gap, elapsed / 1000.0));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criteria_3_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
