#pragma once

#include <optional>
#include <string>

#include "cheegerlab/geometry.hpp"
#include "cheegerlab/offsetting.hpp"

namespace cheegerlab {

struct NotCheegerRegularError : GeometryError {
    NotCheegerRegularError()
        : GeometryError("closed formula requested on a polygon that is not Cheeger regular") {}
};

struct NotContainedError : GeometryError {
    NotContainedError() : GeometryError("test set is not contained in the outer polygon") {}
};

enum class CheegerMethod { automatic, formula, radius_root };

struct CheegerReport {
    double h = 0.0;
    double radius = 0.0;            // 1/h
    Polygon inner_polygon;          // inner parallel set at `radius`
    bool cheeger_regular = false;
    std::string method;             // "formula", "radius-root" or "both"
    std::optional<double> residual;     // |A(R) - pi R^2| when the root method ran
    std::optional<double> cross_error;  // |h_formula - h_root| when both ran
};

/// The unique r with inner_area(p, r) = pi r^2, bracketed in (0, inradius).
double cheeger_radius(const Polygon& p);

CheegerReport cheeger_constant(const Polygon& p, CheegerMethod method = CheegerMethod::automatic);

/// All N sides of p survive the inward offset at the Cheeger radius
/// (each contributes an edge longer than eps_geom to the inner polygon).
bool is_cheeger_regular(const Polygon& p);

/// inner_parallel(p, R) ⊕ disk of radius R = 1/h.
ArcPolygon cheeger_set(const Polygon& p);

/// Perimeter/area ratio of a contained test set: an upper bound for the
/// Cheeger constant of `outer`, valid for nonconvex outer polygons too.
double cheeger_upper_bound(const Polygon& outer, const ArcPolygon& test_set,
                           double margin = 1e-6);

/// sqrt(|p|) h(p) - h(regular n-gon), n = side count of p.  Nonnegative,
/// zero exactly at the regular polygon.
double cheeger_deficit(const Polygon& p);

/// Cheeger constant of the unit-area disk: 2 sqrt(pi).
double h_ball();

/// Closed form (P0 + 2 sqrt(pi))/2 for the unit-area regular n-gon,
/// P0 = 2 sqrt(n tan(pi/n)).
double regular_ngon_cheeger(int n);

}  // namespace cheegerlab
