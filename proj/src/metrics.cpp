#include "cheegerlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cheegerlab/kernels.hpp"

namespace cheegerlab {

namespace {

struct Polyline {
    std::vector<double> x, y;
    explicit Polyline(const Polygon& p) {
        const auto& v = p.vertices();
        x.resize(v.size());
        y.resize(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            x[i] = v[i].x;
            y[i] = v[i].y;
        }
    }
};

// sup over samples of ∂a of the exact distance to ∂b.
double one_sided_sampled_sup(const Polygon& a, const Polyline& b, double spacing) {
    constexpr size_t kChunk = 8192;
    std::vector<double> px, py, d2(kChunk);
    px.reserve(kChunk);
    py.reserve(kChunk);
    double max_d2 = 0.0;

    auto flush = [&]() {
        if (px.empty()) return;
        kernels::min_dist_sq_to_polyline(px.data(), py.data(), px.size(), b.x.data(),
                                         b.y.data(), b.x.size(), d2.data());
        for (size_t i = 0; i < px.size(); ++i) max_d2 = std::max(max_d2, d2[i]);
        px.clear();
        py.clear();
    };
    auto emit = [&](Vec2 p) {
        px.push_back(p.x);
        py.push_back(p.y);
        if (px.size() == kChunk) flush();
    };

    const auto& v = a.vertices();
    for (size_t i = 0; i < v.size(); ++i) {
        const Vec2 s = v[i], t = v[(i + 1) % v.size()];
        const double len = distance(s, t);
        const int n = std::max(1, static_cast<int>(std::ceil(len / spacing)));
        for (int k = 0; k < n; ++k) emit(s + (static_cast<double>(k) / n) * (t - s));
    }
    flush();
    return std::sqrt(max_d2);
}

double shoelace(const std::vector<Vec2>& v) {
    if (v.size() < 3) return 0.0;
    double s = 0.0;
    const Vec2 o = v[0];
    for (size_t i = 1; i + 1 < v.size(); ++i) s += cross(v[i] - o, v[i + 1] - o);
    return 0.5 * s;
}

// Sutherland-Hodgman: clip a subject polygon against one CCW convex clip
// polygon.  Exact for convex subjects; we only feed it convex pieces.
std::vector<Vec2> clip_by_convex(std::vector<Vec2> subject, const Polygon& clip) {
    const auto& cv = clip.vertices();
    for (size_t e = 0; e < cv.size() && subject.size() >= 3; ++e) {
        const Vec2 a = cv[e], b = cv[(e + 1) % cv.size()];
        const Vec2 dir = b - a;
        std::vector<Vec2> out;
        out.reserve(subject.size() + 2);
        for (size_t i = 0; i < subject.size(); ++i) {
            const Vec2 p = subject[i], q = subject[(i + 1) % subject.size()];
            const double dp = cross(dir, p - a), dq = cross(dir, q - a);
            if (dp >= 0.0) out.push_back(p);
            if ((dp >= 0.0) != (dq >= 0.0)) {
                const double t = dp / (dp - dq);
                out.push_back(p + t * (q - p));
            }
        }
        subject = std::move(out);
    }
    if (subject.size() < 3) subject.clear();
    return subject;
}

// Inside-or-on-boundary within `slack`; ear candidates with a vertex on the
// diagonal must count as blocked or the triangulation overlaps.
bool blocks_ear(Vec2 p, Vec2 a, Vec2 b, Vec2 c, double slack) {
    const double d1 = cross(b - a, p - a);
    const double d2 = cross(c - b, p - b);
    const double d3 = cross(a - c, p - c);
    return d1 > -slack && d2 > -slack && d3 > -slack;
}

}  // namespace

CertifiedDistance hausdorff_boundary(const Polygon& a, const Polygon& b, double err_tol) {
    if (!(err_tol > 0.0)) throw GeometryError("hausdorff_boundary needs err_tol > 0");
    const double spacing = 2.0 * err_tol;
    const Polyline pa(a), pb(b);
    const double sup_ab = one_sided_sampled_sup(a, pb, spacing);
    const double sup_ba = one_sided_sampled_sup(b, pa, spacing);
    return {std::max(sup_ab, sup_ba), err_tol};
}

std::vector<std::array<int, 3>> triangulate(const Polygon& p) {
    std::vector<int> idx(static_cast<size_t>(p.n()));
    for (int i = 0; i < p.n(); ++i) idx[static_cast<size_t>(i)] = i;
    const auto& v = p.vertices();
    const double scale = bbox_scale(p);
    const double slack = 1e-12 * scale * scale;

    std::vector<std::array<int, 3>> tris;
    while (idx.size() > 3) {
        bool clipped = false;
        for (size_t i = 0; i < idx.size(); ++i) {
            const size_t prev = (i + idx.size() - 1) % idx.size();
            const size_t next = (i + 1) % idx.size();
            const Vec2 a = v[static_cast<size_t>(idx[prev])];
            const Vec2 b = v[static_cast<size_t>(idx[i])];
            const Vec2 c = v[static_cast<size_t>(idx[next])];
            if (cross(b - a, c - b) <= slack) continue;  // reflex or flat corner, not an ear
            bool blocked = false;
            for (size_t j = 0; j < idx.size() && !blocked; ++j) {
                if (j == prev || j == i || j == next) continue;
                blocked = blocks_ear(v[static_cast<size_t>(idx[j])], a, b, c, slack);
            }
            if (blocked) continue;
            tris.push_back({idx[prev], idx[i], idx[next]});
            idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
            break;
        }
        if (!clipped) throw GeometryError("ear clipping failed (degenerate polygon?)");
    }
    tris.push_back({idx[0], idx[1], idx[2]});
    return tris;
}

double intersection_area(const Polygon& a, const Polygon& b) {
    if (is_convex(a) && is_convex(b)) {
        const auto clipped = clip_by_convex(a.vertices(), b);
        return clipped.empty() ? 0.0 : std::max(0.0, shoelace(clipped));
    }
    // General case: convex pieces of a clipped against convex pieces of b.
    const auto ta = triangulate(a);
    const auto tb = triangulate(b);
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    double total = 0.0;
    for (const auto& ia : ta) {
        const std::vector<Vec2> tri_a{va[static_cast<size_t>(ia[0])],
                                      va[static_cast<size_t>(ia[1])],
                                      va[static_cast<size_t>(ia[2])]};
        for (const auto& ib : tb) {
            const Polygon tri_b = Polygon::unchecked({vb[static_cast<size_t>(ib[0])],
                                                      vb[static_cast<size_t>(ib[1])],
                                                      vb[static_cast<size_t>(ib[2])]});
            const auto clipped = clip_by_convex(tri_a, tri_b);
            if (!clipped.empty()) total += std::max(0.0, shoelace(clipped));
        }
    }
    return total;
}

double symmetric_difference_area(const Polygon& a, const Polygon& b) {
    return area(a) + area(b) - 2.0 * intersection_area(a, b);
}

RigidMotion boundary_touch_normalize(const Polygon& a, const Polygon& b) {
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    double best = std::numeric_limits<double>::infinity();
    Vec2 best_pa{}, best_pb{};

    for (size_t i = 0; i < va.size(); ++i) {
        const Vec2 a0 = va[i], a1 = va[(i + 1) % va.size()];
        for (size_t j = 0; j < vb.size(); ++j) {
            const Vec2 b0 = vb[j], b1 = vb[(j + 1) % vb.size()];
            if (segment_segment_distance(a0, a1, b0, b1) == 0.0) return {};  // already touching
            // Closest pair among endpoint-to-segment projections.
            auto consider = [&](Vec2 p, Vec2 s0, Vec2 s1, bool p_on_a) {
                const Vec2 e = s1 - s0;
                const double e2 = norm_sq(e);
                double t = e2 > 0.0 ? dot(p - s0, e) / e2 : 0.0;
                t = std::clamp(t, 0.0, 1.0);
                const Vec2 q = s0 + t * e;
                const double d = norm_sq(p - q);
                if (d < best) {
                    best = d;
                    best_pa = p_on_a ? p : q;
                    best_pb = p_on_a ? q : p;
                }
            };
            consider(b0, a0, a1, false);
            consider(b1, a0, a1, false);
            consider(a0, b0, b1, true);
            consider(a1, b0, b1, true);
        }
    }
    return {0.0, best_pa - best_pb, false};
}

double convex_boundary_hausdorff(const Polygon& a, const Polygon& b) {
    if (!is_convex(a) || !is_convex(b)) throw NonConvexError();

    auto one_sided = [](const Polygon& from, const Polygon& to) {
        const Polyline pts(from), line(to);
        const size_t n = pts.x.size();
        std::vector<double> d2(n);
        std::vector<std::uint8_t> inside(n);
        kernels::min_dist_sq_to_polyline(pts.x.data(), pts.y.data(), n, line.x.data(),
                                         line.y.data(), line.x.size(), d2.data());
        kernels::winding_inside(pts.x.data(), pts.y.data(), n, line.x.data(), line.y.data(),
                                line.x.size(), inside.data());
        double m = 0.0;
        for (size_t i = 0; i < n; ++i)
            if (!inside[i]) m = std::max(m, d2[i]);
        return m;
    };
    return std::sqrt(std::max(one_sided(a, b), one_sided(b, a)));
}

}  // namespace cheegerlab
