#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

// Batch kernels behind the boundary-sampling code paths (certified Hausdorff,
// arc-polygon containment, convex-pair Hausdorff).  Each kernel has a scalar
// reference implementation and an AVX2 variant selected at runtime; both
// execute the same arithmetic per point, so results are bit-identical
// (the project builds with -ffp-contract=off and the AVX2 path uses no FMA).

namespace cheegerlab::kernels {

enum class Backend { scalar, avx2 };

/// Backend picked at startup: AVX2 when the CPU supports it, overridable
/// with CHEEGERLAB_SIMD=scalar|avx2|auto.
Backend active_backend();
void set_backend(Backend b);
bool backend_available(Backend b);
std::string backend_name(Backend b);

/// For each query point, the squared distance to the closed polyline through
/// (vx[i], vy[i]), i = 0..nverts-1 (edge nverts-1 -> 0 included).
void min_dist_sq_to_polyline(const double* px, const double* py, std::size_t npts,
                             const double* vx, const double* vy, std::size_t nverts,
                             double* out_d2);

/// Winding-number inside test against the same closed polyline; out[i] = 1
/// when the winding number is nonzero.
void winding_inside(const double* px, const double* py, std::size_t npts,
                    const double* vx, const double* vy, std::size_t nverts,
                    std::uint8_t* out_inside);

// Forced-backend entry points, used by the equivalence tests.
void min_dist_sq_to_polyline_scalar(const double* px, const double* py, std::size_t npts,
                                    const double* vx, const double* vy, std::size_t nverts,
                                    double* out_d2);
void winding_inside_scalar(const double* px, const double* py, std::size_t npts,
                           const double* vx, const double* vy, std::size_t nverts,
                           std::uint8_t* out_inside);
#if defined(CHEEGERLAB_HAVE_AVX2)
void min_dist_sq_to_polyline_avx2(const double* px, const double* py, std::size_t npts,
                                  const double* vx, const double* vy, std::size_t nverts,
                                  double* out_d2);
void winding_inside_avx2(const double* px, const double* py, std::size_t npts,
                         const double* vx, const double* vy, std::size_t nverts,
                         std::uint8_t* out_inside);
#endif

}  // namespace cheegerlab::kernels
