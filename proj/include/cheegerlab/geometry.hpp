#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cheegerlab {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Kahan's compensated 2x2 determinant: ~1 ulp of the result even under
/// heavy cancellation (needle triangles, areas of thin polygons).
inline double cross_exact(Vec2 a, Vec2 b) {
    const double w = a.y * b.x;
    const double e = std::fma(a.y, b.x, -w);
    const double f = std::fma(a.x, b.y, -w);
    return f - e;
}
inline double norm_sq(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm_sq(a)); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

/// Relative degeneracy tolerance; absolute tolerances are this times the
/// bounding-box scale of the shapes involved.
inline constexpr double kEpsGeomRel = 1e-9;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateEdgeError : GeometryError {
    int index;
    explicit DegenerateEdgeError(int i)
        : GeometryError("degenerate edge starting at vertex " + std::to_string(i)), index(i) {}
};

struct CollinearVertexError : GeometryError {
    int index;
    explicit CollinearVertexError(int i)
        : GeometryError("collinear vertex at index " + std::to_string(i)), index(i) {}
};

struct NonSimpleError : GeometryError {
    int edge_a;
    int edge_b;
    NonSimpleError(int a, int b)
        : GeometryError("edges " + std::to_string(a) + " and " + std::to_string(b) + " intersect"),
          edge_a(a), edge_b(b) {}
};

struct NonConvexError : GeometryError {
    NonConvexError() : GeometryError("polygon is not convex") {}
};

/// Orientation-preserving (or reflecting) isometry of the plane:
/// p -> R(angle) * F * p + translation, where F is a reflection across
/// the x axis when reflect is set.
struct RigidMotion {
    double angle = 0.0;
    Vec2 translation{};
    bool reflect = false;

    Vec2 operator()(Vec2 p) const {
        if (reflect) p.y = -p.y;
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * p.x - s * p.y + translation.x, s * p.x + c * p.y + translation.y};
    }

    RigidMotion inverse() const;
};

/// Simple planar polygon stored counterclockwise.  Construction validates:
/// at least 3 vertices, no degenerate edges, no three consecutive collinear
/// vertices, no self-intersections.  Clockwise input is reversed.
/// Immutable after construction.
class Polygon {
public:
    explicit Polygon(std::vector<Vec2> pts);

    // Trusted constructor for internally generated vertex lists (offset
    // results, transforms of already validated polygons).  Only reverses
    // clockwise input; runs no other checks.
    static Polygon unchecked(std::vector<Vec2> pts);

    const std::vector<Vec2>& vertices() const { return verts_; }
    int n() const { return static_cast<int>(verts_.size()); }
    Vec2 vertex(int i) const { return verts_[static_cast<size_t>(i)]; }

private:
    struct unchecked_t {};
    Polygon(std::vector<Vec2> pts, unchecked_t);
    std::vector<Vec2> verts_;
};

Polygon make_polygon(std::vector<Vec2> pts);

double area(const Polygon& p);
double perimeter(const Polygon& p);
std::vector<double> inner_angles(const Polygon& p);
bool is_convex(const Polygon& p);
double diameter(const Polygon& p);
Vec2 centroid(const Polygon& p);

/// Largest bounding-box extent; the length scale for relative tolerances.
double bbox_scale(const Polygon& p);

/// Unit-area regular N-gon centered at the origin, one vertex on the
/// positive x axis.
Polygon regular_ngon(int n);

/// Scale about the origin by `factor`.
Polygon scaled(const Polygon& p, double factor);

/// Similar polygon with unit area (scaling about the origin).
Polygon normalize_area(const Polygon& p);

Polygon apply_motion(const Polygon& p, const RigidMotion& m);

/// Angle functional sum_i [tan((pi-g_i)/2) - (pi-g_i)/2] over the inner
/// angles g_i.  Requires a convex polygon.
double tau(const Polygon& p);

/// P^2/(4|area|) - (tau + pi); nonnegative for convex polygons, zero for
/// circumscribed ones.
double isoperimetric_gap(const Polygon& p);

// Scalar helpers shared by the other modules.
double point_segment_distance_sq(Vec2 p, Vec2 a, Vec2 b);
double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
bool point_in_polygon(Vec2 p, const Polygon& poly);

}  // namespace cheegerlab
