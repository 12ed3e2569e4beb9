#ifndef FARLOC_SPHERE_GRID_HPP
#define FARLOC_SPHERE_GRID_HPP

#include <memory>
#include <vector>

#include "farloc/vec3.hpp"

namespace farloc {

/// Quadrature grid on the unit sphere. Nodes are unit vectors, weights carry
/// the 4*pi normalization so that sum(weights) equals the sphere area and
/// sum_k w_k f(theta_k) approximates the surface integral of f.
struct SphereGrid {
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int exactness_degree = 0; // spherical polynomials up to this degree integrate exactly

    std::size_t size() const { return nodes.size(); }
};

/// Lebedev-Laikov rule with the given point count. Supported sizes: 6, 14, 26,
/// 38, 50, 74, 86, 110, 146, 170, 194, 302, 590. Throws std::invalid_argument
/// for anything else, listing the supported sizes.
SphereGrid build_lebedev(int n_points);

std::shared_ptr<const SphereGrid> make_lebedev(int n_points);

const std::vector<int>& supported_lebedev_sizes();

} // namespace farloc

#endif
