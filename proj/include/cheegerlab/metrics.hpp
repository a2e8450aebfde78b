#pragma once

#include <array>

#include "cheegerlab/geometry.hpp"

namespace cheegerlab {

/// An estimate known to be within +/- error_bound of the true value.
struct CertifiedDistance {
    double estimate = 0.0;
    double error_bound = 0.0;
};

/// Symmetric Hausdorff distance between the boundary curves, certified by
/// sampling: points are placed along each boundary at spacing 2*err_tol and
/// measured exactly against the other polyline; the distance function to a
/// boundary is 1-Lipschitz, so the sampled supremum is within err_tol of the
/// true one.  Vertices are always among the samples.
CertifiedDistance hausdorff_boundary(const Polygon& a, const Polygon& b, double err_tol);

/// |a| + |b| - 2 |a ∩ b| with the intersection computed exactly
/// (halfplane clipping; nonconvex inputs are ear-triangulated first).
double symmetric_difference_area(const Polygon& a, const Polygon& b);

/// Translation bringing the closest boundary point of b onto the boundary
/// of a (zero when the boundaries already meet), after which
/// hd(∂a, ∂b') <= diam(a) + diam(b).
RigidMotion boundary_touch_normalize(const Polygon& a, const Polygon& b);

/// Exact boundary Hausdorff distance for a convex pair: it coincides with
/// the Hausdorff distance between the bodies, whose suprema are attained at
/// vertices.
double convex_boundary_hausdorff(const Polygon& a, const Polygon& b);

/// Exact area of the intersection.
double intersection_area(const Polygon& a, const Polygon& b);

/// Ear-clipping triangulation (vertex index triples).
std::vector<std::array<int, 3>> triangulate(const Polygon& p);

}  // namespace cheegerlab
