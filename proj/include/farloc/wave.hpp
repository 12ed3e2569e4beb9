#ifndef FARLOC_WAVE_HPP
#define FARLOC_WAVE_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "farloc/vec3.hpp"

namespace farloc {

/// Time-harmonic detecting plane wave E^i(x) = p exp(i omega x . theta_inc).
/// Lengths are in wavelengths; the default omega = 2*pi corresponds to unit
/// wavelength.
struct IncidentWave {
    double omega = 2.0 * std::numbers::pi;
    Vec3 theta_inc{1.0, 0.0, 0.0};
    Vec3 p{0.0, 0.0, 1.0};

    double wavelength() const { return 2.0 * std::numbers::pi / omega; }

    void validate() const {
        if (!(omega > 0.0)) throw std::invalid_argument("IncidentWave: omega must be > 0");
        if (std::abs(norm(theta_inc) - 1.0) > 1e-12)
            throw std::invalid_argument("IncidentWave: theta_inc must be a unit vector");
        if (std::abs(dot(p, theta_inc)) > 1e-14 * std::max(1.0, norm(p)))
            throw std::invalid_argument("IncidentWave: polarization must satisfy p . theta_inc = 0");
    }
};

struct Material {
    enum class Kind { PEC, Medium };
    Kind kind = Kind::PEC;
    double eps = 1.0;   // Medium only
    double mu = 1.0;    // Medium only
    double sigma = 0.0; // Medium only

    static Material pec() { return {}; }
    static Material medium(double eps, double mu = 1.0, double sigma = 0.0) {
        Material m;
        m.kind = Kind::Medium;
        m.eps = eps;
        m.mu = mu;
        m.sigma = sigma;
        m.validate();
        return m;
    }

    void validate() const {
        if (kind == Kind::Medium) {
            if (!(eps > 0.0) || !(mu > 0.0) || sigma < 0.0)
                throw std::invalid_argument("Material: medium needs eps > 0, mu > 0, sigma >= 0");
        }
    }
};

} // namespace farloc

#endif
