#ifndef FARLOC_TEST_UTIL_HPP
#define FARLOC_TEST_UTIL_HPP

#include <cstdint>
#include <random>

#include "farloc/tangent_field.hpp"

namespace farloc::testing {

// deterministic pseudo-random tangential field (normal parts projected out)
inline TangentField random_tangent_field(std::shared_ptr<const SphereGrid> grid,
                                         std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    TangentField f(std::move(grid));
    for (std::size_t k = 0; k < f.grid->size(); ++k) {
        CVec3 v{{dist(rng), dist(rng)}, {dist(rng), dist(rng)}, {dist(rng), dist(rng)}};
        const Vec3& th = f.grid->nodes[k];
        const Complex radial = dot(v, th);
        f.values[k] = v - CVec3{radial * th.x, radial * th.y, radial * th.z};
    }
    return f;
}

} // namespace farloc::testing

#endif
