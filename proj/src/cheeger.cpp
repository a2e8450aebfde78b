#include "cheegerlab/cheeger.hpp"

#include <cmath>
#include <numbers>

namespace cheegerlab {

namespace {

// Bracketed scalar root: secant steps safeguarded by bisection whenever the
// secant proposal leaves the bracket or fails to shrink it fast enough.
template <typename F>
double find_root(F f, double lo, double hi, double xtol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) throw GeometryError("root is not bracketed");

    double width_two_ago = hi - lo;
    for (int it = 0; it < 200 && hi - lo > xtol; ++it) {
        double mid;
        const double denom = fhi - flo;
        mid = denom != 0.0 ? lo - flo * (hi - lo) / denom : 0.5 * (lo + hi);
        const double guard = 0.01 * (hi - lo);
        if (!(mid > lo + guard && mid < hi - guard) || (hi - lo) > 0.5 * width_two_ago)
            mid = 0.5 * (lo + hi);
        width_two_ago = hi - lo;

        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double formula_h(const Polygon& p) {
    const double P = perimeter(p), A = area(p), t = tau(p);
    return (P + std::sqrt(P * P - 4.0 * t * A)) / (2.0 * A);
}

bool all_edges_survive(const Polygon& p, double r) {
    const OffsetCut cut = inner_offset_cut(p, r);
    if (cut.empty()) return false;
    const double eps = kEpsGeomRel * bbox_scale(p);
    for (int i = 0; i < p.n(); ++i)
        if (cut.label_length(i) <= eps) return false;
    return true;
}

}  // namespace

double cheeger_radius(const Polygon& p) {
    if (!is_convex(p)) throw NonConvexError();
    const double rin = inradius(p);
    // inner_area(r) - pi r^2 falls from |p| to a negative value at the
    // inradius; the sign change is unique.  The tolerance is relative to the
    // inradius, not the bounding box, so h = 1/r stays accurate for thin
    // shapes with large diameter.
    auto g = [&](double r) { return inner_area(p, r) - std::numbers::pi * r * r; };
    return find_root(g, 1e-13 * rin, rin, 1e-15 * rin);
}

bool is_cheeger_regular(const Polygon& p) { return all_edges_survive(p, cheeger_radius(p)); }

CheegerReport cheeger_constant(const Polygon& p, CheegerMethod method) {
    if (!is_convex(p)) throw NonConvexError();

    const double r = cheeger_radius(p);
    const bool regular = all_edges_survive(p, r);

    double h = 1.0 / r;
    double radius = r;
    std::string name = "radius-root";
    std::optional<double> residual = std::abs(inner_area(p, r) - std::numbers::pi * r * r);
    std::optional<double> cross_error;

    switch (method) {
        case CheegerMethod::radius_root:
            break;
        case CheegerMethod::formula:
            if (!regular) throw NotCheegerRegularError();
            h = formula_h(p);
            radius = 1.0 / h;
            name = "formula";
            residual = std::nullopt;
            break;
        case CheegerMethod::automatic:
            if (regular) {
                // The root value stays the ground truth; the formula is the
                // cross-check.
                cross_error = std::abs(formula_h(p) - h);
                name = "both";
            }
            break;
    }

    auto inner = inner_parallel(p, radius);
    if (!inner) throw GeometryError("inner parallel set vanished at the Cheeger radius");
    return CheegerReport{h, radius, std::move(*inner), regular, std::move(name), residual,
                         cross_error};
}

ArcPolygon cheeger_set(const Polygon& p) {
    const double r = cheeger_radius(p);
    auto inner = inner_parallel(p, r);
    if (!inner) throw GeometryError("inner parallel set vanished at the Cheeger radius");
    return minkowski_disk(*inner, r);
}

double cheeger_upper_bound(const Polygon& outer, const ArcPolygon& test_set, double margin) {
    if (!contains_arc_polygon(outer, test_set, margin)) throw NotContainedError();
    const ArcPolygonMeasures m = arc_polygon_measures(test_set);
    return m.perimeter / m.area;
}

double cheeger_deficit(const Polygon& p) {
    if (!is_convex(p)) throw NonConvexError();
    const double h = cheeger_constant(p, CheegerMethod::radius_root).h;
    return std::sqrt(area(p)) * h - regular_ngon_cheeger(p.n());
}

double h_ball() { return 2.0 * std::sqrt(std::numbers::pi); }

double regular_ngon_cheeger(int n) {
    if (n < 3) throw GeometryError("regular_ngon_cheeger needs n >= 3");
    const double p0 = 2.0 * std::sqrt(n * std::tan(std::numbers::pi / n));
    return 0.5 * (p0 + 2.0 * std::sqrt(std::numbers::pi));
}

}  // namespace cheegerlab
