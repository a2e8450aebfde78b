// AVX2 backend.  Four points per iteration; the per-point operation sequence
// mirrors the scalar reference exactly (mul+add, no FMA), so outputs are
// bit-identical across backends.

#include "cheegerlab/kernels.hpp"

#if defined(CHEEGERLAB_HAVE_AVX2)

#include <immintrin.h>

#include <cstring>
#include <limits>
#include <vector>

namespace cheegerlab::kernels {

void min_dist_sq_to_polyline_avx2(const double* px, const double* py, std::size_t npts,
                                  const double* vx, const double* vy, std::size_t nverts,
                                  double* out_d2) {
    const std::size_t main = npts - npts % 4;
    const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);

    for (std::size_t i = 0; i < main; i += 4) _mm256_storeu_pd(out_d2 + i, inf);
    for (std::size_t i = main; i < npts; ++i) out_d2[i] = std::numeric_limits<double>::infinity();

    for (std::size_t j = 0; j < nverts; ++j) {
        const std::size_t k = (j + 1) % nverts;
        const double axs = vx[j], ays = vy[j];
        const double exs = vx[k] - axs, eys = vy[k] - ays;
        const double e2s = exs * exs + eys * eys;
        const double invs = e2s > 0.0 ? 1.0 / e2s : 0.0;

        const __m256d ax = _mm256_set1_pd(axs), ay = _mm256_set1_pd(ays);
        const __m256d ex = _mm256_set1_pd(exs), ey = _mm256_set1_pd(eys);
        const __m256d inv = _mm256_set1_pd(invs);

        for (std::size_t i = 0; i < main; i += 4) {
            const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(px + i), ax);
            const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(py + i), ay);
            __m256d t = _mm256_mul_pd(
                _mm256_add_pd(_mm256_mul_pd(dx, ex), _mm256_mul_pd(dy, ey)), inv);
            t = _mm256_min_pd(_mm256_max_pd(t, zero), one);
            const __m256d qx = _mm256_sub_pd(dx, _mm256_mul_pd(t, ex));
            const __m256d qy = _mm256_sub_pd(dy, _mm256_mul_pd(t, ey));
            const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(qx, qx), _mm256_mul_pd(qy, qy));
            const __m256d cur = _mm256_loadu_pd(out_d2 + i);
            _mm256_storeu_pd(out_d2 + i, _mm256_min_pd(cur, d2));
        }
        for (std::size_t i = main; i < npts; ++i) {
            const double dx = px[i] - axs, dy = py[i] - ays;
            double t = (dx * exs + dy * eys) * invs;
            t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
            const double qx = dx - t * exs, qy = dy - t * eys;
            const double d2 = qx * qx + qy * qy;
            if (d2 < out_d2[i]) out_d2[i] = d2;
        }
    }
}

void winding_inside_avx2(const double* px, const double* py, std::size_t npts,
                         const double* vx, const double* vy, std::size_t nverts,
                         std::uint8_t* out_inside) {
    std::vector<double> wn(npts, 0.0);
    const std::size_t main = npts - npts % 4;
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);

    for (std::size_t j = 0; j < nverts; ++j) {
        const std::size_t k = (j + 1) % nverts;
        const double axs = vx[j], ays = vy[j];
        const double bxs = vx[k], bys = vy[k];
        const double exs = bxs - axs, eys = bys - ays;

        const __m256d ax = _mm256_set1_pd(axs), ay = _mm256_set1_pd(ays);
        const __m256d by = _mm256_set1_pd(bys);
        const __m256d ex = _mm256_set1_pd(exs), ey = _mm256_set1_pd(eys);

        for (std::size_t i = 0; i < main; i += 4) {
            const __m256d qx = _mm256_loadu_pd(px + i);
            const __m256d qy = _mm256_loadu_pd(py + i);
            const __m256d cr = _mm256_sub_pd(_mm256_mul_pd(ex, _mm256_sub_pd(qy, ay)),
                                             _mm256_mul_pd(ey, _mm256_sub_pd(qx, ax)));
            const __m256d a_le = _mm256_cmp_pd(ay, qy, _CMP_LE_OQ);
            const __m256d b_gt = _mm256_cmp_pd(by, qy, _CMP_GT_OQ);
            const __m256d b_le = _mm256_cmp_pd(by, qy, _CMP_LE_OQ);
            const __m256d up = _mm256_and_pd(_mm256_and_pd(a_le, b_gt),
                                             _mm256_cmp_pd(cr, zero, _CMP_GT_OQ));
            const __m256d dn = _mm256_andnot_pd(a_le, _mm256_and_pd(b_le,
                                             _mm256_cmp_pd(cr, zero, _CMP_LT_OQ)));
            __m256d acc = _mm256_loadu_pd(wn.data() + i);
            acc = _mm256_add_pd(acc, _mm256_and_pd(up, one));
            acc = _mm256_sub_pd(acc, _mm256_and_pd(dn, one));
            _mm256_storeu_pd(wn.data() + i, acc);
        }
        for (std::size_t i = main; i < npts; ++i) {
            const double cr = exs * (py[i] - ays) - eys * (px[i] - axs);
            if (ays <= py[i]) {
                if (bys > py[i] && cr > 0.0) wn[i] += 1.0;
            } else {
                if (bys <= py[i] && cr < 0.0) wn[i] -= 1.0;
            }
        }
    }
    for (std::size_t i = 0; i < npts; ++i) out_inside[i] = wn[i] != 0.0 ? 1 : 0;
}

}  // namespace cheegerlab::kernels

#endif  // CHEEGERLAB_HAVE_AVX2
