#include "cheegerlab/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace cheegerlab {

namespace {

// Shoelace about v[0]; centering avoids catastrophic cancellation on small
// polygons far from the origin, the compensated cross keeps thin shapes
// accurate.
double signed_area(const std::vector<Vec2>& v) {
    double s = 0.0;
    const size_t n = v.size();
    const Vec2 o = v[0];
    for (size_t i = 1; i + 1 < n; ++i) s += cross_exact(v[i] - o, v[i + 1] - o);
    return 0.5 * s;
}

double bbox_scale_of(const std::vector<Vec2>& v) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = xmax;
    for (const Vec2& p : v) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::max(xmax - xmin, ymax - ymin);
}

// Proper or improper intersection of segments [a,b] and [c,d], with an
// absolute slack `tol` on touching.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol) {
    return segment_segment_distance(a, b, c, d) <= tol;
}

}  // namespace

RigidMotion RigidMotion::inverse() const {
    // Inverse of p -> R F p + t is p -> F R(-angle) (p - t).
    // Without reflection that is angle' = -angle, t' = -R(-angle) t.
    // With reflection, F R(-angle) = R(angle) F, so angle' = angle and
    // t' = -F R(-angle) t.
    RigidMotion inv;
    inv.reflect = reflect;
    const double c = std::cos(angle), s = std::sin(angle);
    if (!reflect) {
        inv.angle = -angle;
        inv.translation = {-(c * translation.x + s * translation.y),
                           -(-s * translation.x + c * translation.y)};
    } else {
        inv.angle = angle;
        const double ux = c * translation.x + s * translation.y;
        const double uy = -s * translation.x + c * translation.y;
        inv.translation = {-ux, uy};
    }
    return inv;
}

Polygon::Polygon(std::vector<Vec2> pts, unchecked_t) : verts_(std::move(pts)) {
    if (signed_area(verts_) < 0.0) std::reverse(verts_.begin(), verts_.end());
}

Polygon Polygon::unchecked(std::vector<Vec2> pts) {
    return Polygon(std::move(pts), unchecked_t{});
}

Polygon::Polygon(std::vector<Vec2> pts) : verts_(std::move(pts)) {
    const size_t n = verts_.size();
    if (n < 3) throw GeometryError("polygon needs at least 3 vertices");

    const double scale = bbox_scale_of(verts_);
    const double eps = kEpsGeomRel * scale;
    if (!(scale > 0.0)) throw DegenerateEdgeError(0);

    for (size_t i = 0; i < n; ++i) {
        if (distance(verts_[i], verts_[(i + 1) % n]) <= eps)
            throw DegenerateEdgeError(static_cast<int>(i));
    }

    // Orientation is representational, not semantic; store counterclockwise.
    if (signed_area(verts_) < 0.0) std::reverse(verts_.begin(), verts_.end());

    // Collinear (or folded-back) consecutive triples are rejected, not merged:
    // side count drives downstream logic.
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = verts_[(i + n - 1) % n], b = verts_[i], c = verts_[(i + 1) % n];
        const Vec2 e1 = b - a, e2 = c - b;
        if (std::abs(cross(e1, e2)) <= kEpsGeomRel * norm(e1) * norm(e2))
            throw CollinearVertexError(static_cast<int>(i));
    }

    // Simplicity: non-adjacent edges must not touch.
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
            if (segments_intersect(verts_[i], verts_[(i + 1) % n], verts_[j],
                                   verts_[(j + 1) % n], eps))
                throw NonSimpleError(static_cast<int>(i), static_cast<int>(j));
        }
    }
}

Polygon make_polygon(std::vector<Vec2> pts) { return Polygon(std::move(pts)); }

double area(const Polygon& p) { return signed_area(p.vertices()); }

double perimeter(const Polygon& p) {
    const auto& v = p.vertices();
    double s = 0.0;
    for (size_t i = 0; i < v.size(); ++i) s += distance(v[i], v[(i + 1) % v.size()]);
    return s;
}

std::vector<double> inner_angles(const Polygon& p) {
    const auto& v = p.vertices();
    const size_t n = v.size();
    std::vector<double> angles(n);
    for (size_t i = 0; i < n; ++i) {
        const Vec2 prev = v[(i + n - 1) % n], cur = v[i], next = v[(i + 1) % n];
        const Vec2 e1 = cur - prev, e2 = next - cur;
        const double turn = std::atan2(cross(e1, e2), dot(e1, e2));
        angles[i] = std::numbers::pi - turn;
    }
    return angles;
}

bool is_convex(const Polygon& p) {
    const auto& v = p.vertices();
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 e1 = v[i] - v[(i + n - 1) % n];
        const Vec2 e2 = v[(i + 1) % n] - v[i];
        if (cross(e1, e2) < -kEpsGeomRel * norm(e1) * norm(e2)) return false;
    }
    return true;
}

double diameter(const Polygon& p) {
    const auto& v = p.vertices();
    double d2 = 0.0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) d2 = std::max(d2, norm_sq(v[j] - v[i]));
    return std::sqrt(d2);
}

Vec2 centroid(const Polygon& p) {
    const auto& v = p.vertices();
    const size_t n = v.size();
    const Vec2 o = v[0];
    double cx = 0.0, cy = 0.0, a = 0.0;
    for (size_t i = 1; i + 1 < n; ++i) {
        const Vec2 s = v[i] - o, t = v[i + 1] - o;
        const double w = cross(s, t);
        a += w;
        cx += (s.x + t.x) * w;
        cy += (s.y + t.y) * w;
    }
    a *= 0.5;
    return {o.x + cx / (6.0 * a), o.y + cy / (6.0 * a)};
}

double bbox_scale(const Polygon& p) { return bbox_scale_of(p.vertices()); }

Polygon regular_ngon(int n) {
    if (n < 3) throw GeometryError("regular_ngon needs n >= 3");
    // Unit area fixes the circumradius: area = (n/2) r^2 sin(2 pi / n).
    const double r = std::sqrt(2.0 / (n * std::sin(2.0 * std::numbers::pi / n)));
    std::vector<Vec2> v(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * std::numbers::pi * k / n;
        v[static_cast<size_t>(k)] = {r * std::cos(t), r * std::sin(t)};
    }
    return Polygon::unchecked(std::move(v));
}

Polygon scaled(const Polygon& p, double factor) {
    if (!(factor > 0.0)) throw GeometryError("scale factor must be positive");
    std::vector<Vec2> v = p.vertices();
    for (Vec2& q : v) q = q * factor;
    return Polygon::unchecked(std::move(v));
}

Polygon normalize_area(const Polygon& p) { return scaled(p, 1.0 / std::sqrt(area(p))); }

Polygon apply_motion(const Polygon& p, const RigidMotion& m) {
    std::vector<Vec2> v = p.vertices();
    for (Vec2& q : v) q = m(q);
    return Polygon::unchecked(std::move(v));  // reflection flips orientation; unchecked re-orients
}

double tau(const Polygon& p) {
    if (!is_convex(p)) throw NonConvexError();
    const auto& v = p.vertices();
    const size_t n = v.size();
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) {
        // Interior angle straight from the two edge vectors.  tan((pi-g)/2)
        // = cot(g/2); going through g itself keeps full relative precision
        // at needle vertices, where tan((pi-g)/2) blows up.
        const Vec2 u = v[(i + n - 1) % n] - v[i];
        const Vec2 w = v[(i + 1) % n] - v[i];
        const double g = std::atan2(cross_exact(w, u), dot(w, u));
        s += 1.0 / std::tan(0.5 * g) - 0.5 * (std::numbers::pi - g);
    }
    return s;
}

double isoperimetric_gap(const Polygon& p) {
    const double P = perimeter(p);
    return P * P / (4.0 * area(p)) - (tau(p) + std::numbers::pi);
}

double point_segment_distance_sq(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 e = b - a;
    const double e2 = norm_sq(e);
    double t = e2 > 0.0 ? dot(p - a, e) / e2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm_sq(p - (a + t * e));
}

double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return 0.0;  // proper crossing
    double best = point_segment_distance_sq(c, a, b);
    best = std::min(best, point_segment_distance_sq(d, a, b));
    best = std::min(best, point_segment_distance_sq(a, c, d));
    best = std::min(best, point_segment_distance_sq(b, c, d));
    return std::sqrt(best);
}

bool point_in_polygon(Vec2 p, const Polygon& poly) {
    const auto& v = poly.vertices();
    const size_t n = v.size();
    int wn = 0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && cross(b - a, p - a) > 0.0) ++wn;
        } else {
            if (b.y <= p.y && cross(b - a, p - a) < 0.0) --wn;
        }
    }
    return wn != 0;
}

}  // namespace cheegerlab
