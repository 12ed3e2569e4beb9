#ifndef FARLOC_FORWARD_HPP
#define FARLOC_FORWARD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "farloc/mie.hpp"
#include "farloc/sphere_grid.hpp"
#include "farloc/tangent_field.hpp"
#include "farloc/vsh.hpp"
#include "farloc/wave.hpp"

namespace farloc {

/// Scatterer geometry: an exact sphere (Mie synthesis) or a small generic
/// component given directly by its first-order far-field coefficients.
struct ShapeSpec {
    enum class Kind { Sphere, Dipole };
    Kind kind = Kind::Sphere;
    double radius = 0.0;       // Sphere
    DipoleCoefficients coeffs; // Dipole
    Material material;         // Sphere synthesis; ignored for Dipole

    static ShapeSpec sphere(double radius, const Material& material);
    static ShapeSpec dipole(const DipoleCoefficients& coeffs);

    /// Extent used for trim radii; 0 for point-like dipole components.
    double diameter() const { return kind == Kind::Sphere ? 2.0 * radius : 0.0; }
};

struct SceneComponent {
    ShapeSpec shape;
    Vec3 center;
};

/// Multi-component scatterer scene under one detecting plane wave. The
/// synthesized pattern is the sum of translated single-component patterns,
/// which models sparse scenes; validity degrades as O(1/L) in the minimum
/// pairwise center distance L, so scenes with L below one wavelength are
/// permitted but worth flagging (see scene_min_separation).
struct Scene {
    IncidentWave wave;
    std::vector<SceneComponent> components;
};

/// Minimum pairwise center distance; +inf with fewer than two components.
double scene_min_separation(const Scene& scene);

/// scale * sum_m a_m U_1^m + b_m V_1^m: exactly first-order by construction.
TangentField dipole_farfield(const DipoleCoefficients& coeffs,
                             std::shared_ptr<const SphereGrid> grid);

/// Node-wise multiplication by e^{i omega (theta_inc - theta) . z}; moves a
/// component's far field from the origin to center z. Preserves the T^2 norm.
TangentField translate_farfield(const TangentField& A, const Vec3& z, const IncidentWave& wave);

/// Far field of a single shape centered at the origin.
TangentField reference_farfield(const ShapeSpec& shape, const IncidentWave& wave,
                                std::shared_ptr<const SphereGrid> grid);

/// Sum of translated component patterns.
TangentField synthesize_scene(const Scene& scene, std::shared_ptr<const SphereGrid> grid);

/// Point-wise noise: per node and per Cartesian component, adds
/// delta * zeta1 * max|A| * exp(i 2 pi zeta2) with zeta1, zeta2 ~ U(-1,1)
/// from a counter-based generator (same output for any evaluation order).
/// delta = 0 returns the input bit-identically.
TangentField add_noise(const TangentField& A, double delta, std::uint64_t seed);

Scene load_scene(const std::string& path);
void save_scene(const std::string& path, const Scene& scene);

} // namespace farloc

#endif
