#ifndef FARLOC_VSH_HPP
#define FARLOC_VSH_HPP

#include <array>
#include <span>
#include <vector>

#include "farloc/sphere_grid.hpp"
#include "farloc/tangent_field.hpp"
#include "farloc/vec3.hpp"
#include "farloc/wave.hpp"

namespace farloc {

// Scalar and vector spherical harmonics.
//
// Y_n^m are fully normalized (orthonormal on S^2) with the Condon-Shortley
// phase. The tangential basis
//   U_n^m = Grad Y_n^m / sqrt(n(n+1)),   V_n^m = theta x U_n^m
// is orthonormal in T^2(S^2). The surface gradient is evaluated from the
// associated-Legendre derivative recurrence; nodes at the poles use the
// analytic limits (only |m| = 1 is nonzero there).

enum class VshFamily { U, V };

struct VshIndex {
    int n = 1;
    int m = 0;
    VshFamily family = VshFamily::U;
};

/// Orthonormal complex spherical harmonic Y_n^m at a unit direction.
Complex sph_harm(int n, int m, const Vec3& theta);

/// U_n^m or V_n^m at a single unit direction.
CVec3 vsh_point(const VshIndex& idx, const Vec3& theta);

/// Sample a vector spherical harmonic on a grid.
TangentField vsh_eval(const VshIndex& idx, std::shared_ptr<const SphereGrid> grid);

/// First-order expansion coefficients of a far field: a_m pairs with U_1^m
/// (electric part), b_m with V_1^m (magnetic part), m = -1, 0, 1. The scale
/// factor carries an (omega rho)^3-style prefactor when one is known.
struct DipoleCoefficients {
    std::array<Complex, 3> a{};
    std::array<Complex, 3> b{};
    double scale = 1.0;
};

/// Node-wise phase e^{i omega (theta_inc - theta_k) . z}: the factor that
/// translates a far-field pattern from the origin to center z.
std::vector<Complex> phase_shift(const SphereGrid& grid, const IncidentWave& wave, const Vec3& z);

/// Six inner products <A, phase * U_1^m>, <A, phase * V_1^m>, m = -1, 0, 1.
/// The grid's exactness degree must be at least 4. scale is set to 1.
DipoleCoefficients project_first_order(const TangentField& A, std::span<const Complex> phase);

/// Convenience overload with phase = 1 (component at the origin).
DipoleCoefficients project_first_order(const TangentField& A);

} // namespace farloc

#endif
