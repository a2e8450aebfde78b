#include "cheegerlab/offsetting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cheegerlab/kernels.hpp"

namespace cheegerlab {

namespace {

// Centered shoelace; stable for tiny cut regions far from the origin.
double shoelace(const std::vector<Vec2>& v) {
    if (v.size() < 3) return 0.0;
    double s = 0.0;
    const Vec2 o = v[0];
    for (size_t i = 1; i + 1 < v.size(); ++i) s += cross(v[i] - o, v[i + 1] - o);
    return 0.5 * s;
}

// Clip a labeled convex region by the halfplane dot(nrm, x) >= c.  The new
// boundary edge carries `new_label`.
void clip_halfplane(std::vector<Vec2>& verts, std::vector<int>& labels, Vec2 nrm, double c,
                    int new_label, double merge_tol) {
    const size_t m = verts.size();
    if (m == 0) return;

    std::vector<double> d(m);
    bool any_in = false, any_out = false;
    for (size_t i = 0; i < m; ++i) {
        d[i] = dot(nrm, verts[i]) - c;
        (d[i] >= 0.0 ? any_in : any_out) = true;
    }
    if (!any_out) return;
    if (!any_in) {
        verts.clear();
        labels.clear();
        return;
    }

    std::vector<Vec2> w;
    std::vector<int> lab;
    w.reserve(m + 2);
    lab.reserve(m + 2);
    auto push = [&](Vec2 p, int l) {
        if (!w.empty() && distance(p, w.back()) <= merge_tol) {
            lab.back() = l;  // zero-length edge; keep the newer label
            return;
        }
        w.push_back(p);
        lab.push_back(l);
    };
    for (size_t i = 0; i < m; ++i) {
        const size_t j = (i + 1) % m;
        const bool in_i = d[i] >= 0.0, in_j = d[j] >= 0.0;
        if (in_i) push(verts[i], labels[i]);
        if (in_i != in_j) {
            const double t = d[i] / (d[i] - d[j]);
            const Vec2 x = verts[i] + t * (verts[j] - verts[i]);
            push(x, in_i ? new_label : labels[i]);
        }
    }
    while (w.size() >= 2 && distance(w.front(), w.back()) <= merge_tol) {
        w.pop_back();
        lab.pop_back();
    }
    verts = std::move(w);
    labels = std::move(lab);
}

}  // namespace

double OffsetCut::label_length(int label) const {
    double len = 0.0;
    for (size_t i = 0; i < verts.size(); ++i)
        if (labels[i] == label) len += distance(verts[i], verts[(i + 1) % verts.size()]);
    return len;
}

OffsetCut inner_offset_cut(const Polygon& p, double r) {
    if (!is_convex(p)) throw NonConvexError();
    const auto& v = p.vertices();
    const int n = p.n();
    const double merge_tol = 1e-13 * std::max(bbox_scale(p), 1e-300);

    OffsetCut cut;
    cut.verts = v;
    cut.labels.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cut.labels[static_cast<size_t>(i)] = i;

    for (int i = 0; i < n && !cut.verts.empty(); ++i) {
        const Vec2 a = v[static_cast<size_t>(i)], b = v[static_cast<size_t>((i + 1) % n)];
        const Vec2 e = b - a;
        const double len = norm(e);
        const Vec2 inward{-e.y / len, e.x / len};  // interior lies left of a CCW edge
        clip_halfplane(cut.verts, cut.labels, inward, dot(inward, a) + r, i, merge_tol);
    }
    cut.area = cut.verts.size() >= 3 ? shoelace(cut.verts) : 0.0;
    if (cut.area < 0.0) cut.area = 0.0;
    return cut;
}

std::optional<Polygon> inner_parallel(const Polygon& p, double r) {
    if (!(r > 0.0)) throw GeometryError("inner_parallel needs r > 0");
    OffsetCut cut = inner_offset_cut(p, r);
    if (cut.empty()) return std::nullopt;

    // Tidy the raw cut for downstream consumers: merge eps-short edges and
    // drop collinear vertices left by vanished sides.
    const double eps = kEpsGeomRel * bbox_scale(p);
    std::vector<Vec2> w = std::move(cut.verts);
    bool changed = true;
    while (changed && w.size() >= 3) {
        changed = false;
        for (size_t i = 0; i < w.size() && w.size() >= 3; ++i) {
            const size_t prev = (i + w.size() - 1) % w.size();
            const size_t next = (i + 1) % w.size();
            const Vec2 e1 = w[i] - w[prev], e2 = w[next] - w[i];
            if (norm(e1) <= eps || std::abs(cross(e1, e2)) <= kEpsGeomRel * norm(e1) * norm(e2)) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (w.size() < 3 || shoelace(w) <= 0.0) return std::nullopt;
    return Polygon::unchecked(std::move(w));
}

double inner_area(const Polygon& p, double r) {
    if (r == 0.0) return area(p);
    if (r < 0.0) throw GeometryError("inner_area needs r >= 0");
    return inner_offset_cut(p, r).area;
}

double inradius(const Polygon& p) {
    if (!is_convex(p)) throw NonConvexError();
    const auto& v = p.vertices();
    double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (const Vec2& q : v) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    double lo = 0.0;
    double hi = 0.5 * std::min(xmax - xmin, ymax - ymin);  // inscribed disk fits the bbox
    const double tol = 1e-12 * bbox_scale(p);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (inner_area(p, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ArcPolygon make_arc_polygon(Polygon core, double radius) {
    if (radius < 0.0) throw GeometryError("arc polygon radius must be >= 0");
    if (!is_convex(core)) throw NonConvexError();
    return ArcPolygon{std::move(core), radius};
}

ArcPolygon minkowski_disk(const Polygon& p, double r) { return make_arc_polygon(p, r); }

ArcPolygonMeasures arc_polygon_measures(const ArcPolygon& a) {
    const double pc = perimeter(a.core);
    const double ac = area(a.core);
    const double r = a.radius;
    return {pc + 2.0 * std::numbers::pi * r, ac + pc * r + std::numbers::pi * r * r};
}

namespace {

// Walk the boundary (offset segments joined by vertex arcs) emitting points
// at spacing <= `spacing` into a chunk callback.
template <typename Emit>
void walk_boundary(const ArcPolygon& a, double spacing, Emit&& emit) {
    const auto& v = a.core.vertices();
    const size_t n = v.size();
    const double r = a.radius;
    for (size_t i = 0; i < n; ++i) {
        const size_t j = (i + 1) % n, k = (j + 1) % n;
        const Vec2 e = v[j] - v[i];
        const double len = norm(e);
        const Vec2 nrm{e.y / len, -e.x / len};  // outward for CCW
        const Vec2 s0 = v[i] + r * nrm, s1 = v[j] + r * nrm;
        const int segs = std::max(1, static_cast<int>(std::ceil(len / spacing)));
        for (int t = 0; t <= segs; ++t) emit(s0 + (static_cast<double>(t) / segs) * (s1 - s0));

        if (r > 0.0) {
            const Vec2 e2 = v[k] - v[j];
            const double ext = std::atan2(cross(e, e2), dot(e, e2));
            if (ext > 0.0) {
                const double start = std::atan2(nrm.y, nrm.x);
                const int arcs = std::max(1, static_cast<int>(std::ceil(r * ext / spacing)));
                for (int t = 1; t < arcs; ++t) {
                    const double phi = start + ext * static_cast<double>(t) / arcs;
                    emit(Vec2{v[j].x + r * std::cos(phi), v[j].y + r * std::sin(phi)});
                }
            }
        }
    }
}

}  // namespace

std::vector<Vec2> sample_arc_boundary(const ArcPolygon& a, double spacing) {
    if (!(spacing > 0.0)) throw GeometryError("sample spacing must be positive");
    std::vector<Vec2> pts;
    walk_boundary(a, spacing, [&](Vec2 p) { pts.push_back(p); });
    return pts;
}

bool contains_arc_polygon(const Polygon& outer, const ArcPolygon& a, double margin) {
    if (!(margin > 0.0)) throw GeometryError("containment margin must be positive");
    const auto& ov = outer.vertices();
    std::vector<double> vx(ov.size()), vy(ov.size());
    for (size_t i = 0; i < ov.size(); ++i) {
        vx[i] = ov[i].x;
        vy[i] = ov[i].y;
    }

    constexpr size_t kChunk = 8192;
    std::vector<double> px, py;
    px.reserve(kChunk);
    py.reserve(kChunk);
    std::vector<double> d2(kChunk);
    std::vector<std::uint8_t> inside(kChunk);

    bool ok = true;
    auto flush = [&]() {
        if (px.empty() || !ok) {
            px.clear();
            py.clear();
            return;
        }
        const size_t m = px.size();
        kernels::min_dist_sq_to_polyline(px.data(), py.data(), m, vx.data(), vy.data(),
                                         ov.size(), d2.data());
        kernels::winding_inside(px.data(), py.data(), m, vx.data(), vy.data(), ov.size(),
                                inside.data());
        for (size_t i = 0; i < m; ++i) {
            if (!inside[i] && std::sqrt(d2[i]) > margin) {
                ok = false;
                break;
            }
        }
        px.clear();
        py.clear();
    };

    walk_boundary(a, margin, [&](Vec2 p) {
        if (!ok) return;
        px.push_back(p.x);
        py.push_back(p.y);
        if (px.size() == kChunk) flush();
    });
    flush();
    return ok;
}

}  // namespace cheegerlab
