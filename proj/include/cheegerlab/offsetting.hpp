#pragma once

#include <optional>
#include <vector>

#include "cheegerlab/geometry.hpp"

namespace cheegerlab {

/// Closed convex curve made of the edges of a convex core polygon pushed
/// outward by `radius` and joined by circular arcs centered at the core
/// vertices (the Minkowski sum core ⊕ disk).  radius 0 degenerates to the
/// core itself.
struct ArcPolygon {
    Polygon core;
    double radius = 0.0;
};

ArcPolygon make_arc_polygon(Polygon core, double radius);

struct ArcPolygonMeasures {
    double perimeter = 0.0;
    double area = 0.0;
};

/// Steiner formulas: P(core) + 2 pi r and |core| + P(core) r + pi r^2.
ArcPolygonMeasures arc_polygon_measures(const ArcPolygon& a);

/// Boundary points at spacing <= `spacing` (segment and arc samples,
/// element endpoints included).
std::vector<Vec2> sample_arc_boundary(const ArcPolygon& a, double spacing);

/// Raw halfplane-intersection result for the inward offset.  `labels[i]` is
/// the index of the original edge whose offset line carries the cut edge
/// verts[i] -> verts[i+1]; `edge_length(label)` drives the regularity test.
struct OffsetCut {
    std::vector<Vec2> verts;
    std::vector<int> labels;
    double area = 0.0;

    bool empty() const { return verts.size() < 3 || !(area > 0.0); }
    double label_length(int label) const;
};

OffsetCut inner_offset_cut(const Polygon& p, double r);

/// Inner parallel set of a convex polygon: intersection of the edge lines
/// pushed inward by r.  Empty once r reaches the inradius.
std::optional<Polygon> inner_parallel(const Polygon& p, double r);

/// |inner_parallel(p, r)|, 0 when empty; accepts r = 0 (area of p itself).
double inner_area(const Polygon& p, double r);

/// sup { r : inner_parallel(p, r) nonempty }, by bisection on
/// inner_area > 0, refined to 1e-12 x scale.
double inradius(const Polygon& p);

ArcPolygon minkowski_disk(const Polygon& p, double r);

/// True when every boundary sample of `a` (spacing <= margin) lies in
/// `outer` with signed clearance >= -margin.  The distance to the outer
/// boundary is 1-Lipschitz, which certifies the sampled check.
bool contains_arc_polygon(const Polygon& outer, const ArcPolygon& a, double margin = 1e-6);

}  // namespace cheegerlab
