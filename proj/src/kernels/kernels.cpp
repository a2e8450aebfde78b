#include "cheegerlab/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cheegerlab::kernels {

void min_dist_sq_to_polyline_scalar(const double* px, const double* py, std::size_t npts,
                                    const double* vx, const double* vy, std::size_t nverts,
                                    double* out_d2) {
    std::fill(out_d2, out_d2 + npts, std::numeric_limits<double>::infinity());
    for (std::size_t j = 0; j < nverts; ++j) {
        const std::size_t k = (j + 1) % nverts;
        const double ax = vx[j], ay = vy[j];
        const double ex = vx[k] - ax, ey = vy[k] - ay;
        const double e2 = ex * ex + ey * ey;
        const double inv = e2 > 0.0 ? 1.0 / e2 : 0.0;
        for (std::size_t i = 0; i < npts; ++i) {
            const double dx = px[i] - ax, dy = py[i] - ay;
            double t = (dx * ex + dy * ey) * inv;
            t = std::min(std::max(t, 0.0), 1.0);
            const double qx = dx - t * ex, qy = dy - t * ey;
            const double d2 = qx * qx + qy * qy;
            out_d2[i] = std::min(out_d2[i], d2);
        }
    }
}

void winding_inside_scalar(const double* px, const double* py, std::size_t npts,
                           const double* vx, const double* vy, std::size_t nverts,
                           std::uint8_t* out_inside) {
    std::vector<double> wn(npts, 0.0);
    for (std::size_t j = 0; j < nverts; ++j) {
        const std::size_t k = (j + 1) % nverts;
        const double ax = vx[j], ay = vy[j];
        const double bx = vx[k], by = vy[k];
        const double ex = bx - ax, ey = by - ay;
        for (std::size_t i = 0; i < npts; ++i) {
            const double cr = ex * (py[i] - ay) - ey * (px[i] - ax);
            if (ay <= py[i]) {
                if (by > py[i] && cr > 0.0) wn[i] += 1.0;
            } else {
                if (by <= py[i] && cr < 0.0) wn[i] -= 1.0;
            }
        }
    }
    for (std::size_t i = 0; i < npts; ++i) out_inside[i] = wn[i] != 0.0 ? 1 : 0;
}

namespace {

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend pick_default() {
    if (const char* env = std::getenv("CHEEGERLAB_SIMD")) {
        const std::string v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2") {
            if (!backend_available(Backend::avx2))
                throw std::runtime_error("CHEEGERLAB_SIMD=avx2 but AVX2 is unavailable");
            return Backend::avx2;
        }
        // anything else (including "auto") falls through to autodetect
    }
    return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

Backend& backend_slot() {
    static Backend b = pick_default();
    return b;
}

}  // namespace

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(CHEEGERLAB_HAVE_AVX2)
            return cpu_has_avx2();
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return backend_slot(); }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::runtime_error("kernel backend " + backend_name(b) + " is unavailable");
    backend_slot() = b;
}

std::string backend_name(Backend b) {
    return b == Backend::scalar ? "scalar" : "avx2";
}

void min_dist_sq_to_polyline(const double* px, const double* py, std::size_t npts,
                             const double* vx, const double* vy, std::size_t nverts,
                             double* out_d2) {
#if defined(CHEEGERLAB_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        min_dist_sq_to_polyline_avx2(px, py, npts, vx, vy, nverts, out_d2);
        return;
    }
#endif
    min_dist_sq_to_polyline_scalar(px, py, npts, vx, vy, nverts, out_d2);
}

void winding_inside(const double* px, const double* py, std::size_t npts,
                    const double* vx, const double* vy, std::size_t nverts,
                    std::uint8_t* out_inside) {
#if defined(CHEEGERLAB_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        winding_inside_avx2(px, py, npts, vx, vy, nverts, out_inside);
        return;
    }
#endif
    winding_inside_scalar(px, py, npts, vx, vy, nverts, out_inside);
}

}  // namespace cheegerlab::kernels
