#ifndef FARLOC_MIE_HPP
#define FARLOC_MIE_HPP

#include <memory>
#include <vector>

#include "farloc/sphere_grid.hpp"
#include "farloc/tangent_field.hpp"
#include "farloc/wave.hpp"

namespace farloc {

/// Multipole coefficients (a_n electric, b_n magnetic, n = 1..size) of a
/// sphere of the given radius centered at the origin. n_terms = 0 picks the
/// truncation adaptively and verifies tail convergence.
struct MieCoefficients {
    std::vector<Complex> a;
    std::vector<Complex> b;
};

MieCoefficients mie_coefficients(double radius, const Material& material, double omega,
                                 int n_terms = 0);

/// Electric far-field pattern of a sphere centered at the origin, sampled on
/// the grid. Exact (series) solution; the scattered field satisfies
/// E^+ = e^{i omega |x|}/|x| A(x/|x|) + O(|x|^-2).
TangentField mie_farfield(double radius, const Material& material, const IncidentWave& wave,
                          std::shared_ptr<const SphereGrid> grid, int n_terms = 0);

} // namespace farloc

#endif
