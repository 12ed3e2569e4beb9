#ifndef FARLOC_TESTS_MIE_ORACLE_HPP
#define FARLOC_TESTS_MIE_ORACLE_HPP

// Independent Mie reference for the forward oracle tests. Deliberately coded
// on a different route than the library: spherical Bessel functions from
// their power series (complex argument included), Neumann functions by upward
// recurrence from closed forms, scattering coefficients as direct quotients
// of Bessel values (no logarithmic-derivative recursion), and the angular
// sums assembled from associated Legendre values with explicit trigonometry.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "farloc/tangent_field.hpp"
#include "farloc/wave.hpp"

namespace farloc::testing {

inline Complex bessel_j_series(int n, Complex z) {
    Complex lead{1.0, 0.0};
    for (int k = 1; k <= n; ++k) lead *= z / (2.0 * k + 1.0);
    // lead = z^n / (2n+1)!!
    Complex term = lead, sum = lead;
    const Complex z2 = -0.5 * z * z;
    for (int k = 1; k < 80; ++k) {
        term *= z2 / (k * (2.0 * n + 2.0 * k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-30 * std::abs(sum)) break;
    }
    return sum;
}

inline std::vector<double> bessel_y_upward(int nmax, double x) {
    std::vector<double> y(nmax + 2);
    y[0] = -std::cos(x) / x;
    y[1] = -std::cos(x) / (x * x) - std::sin(x) / x;
    for (int n = 1; n <= nmax; ++n) y[n + 1] = (2.0 * n + 1.0) / x * y[n] - y[n - 1];
    y.resize(nmax + 1);
    return y;
}

struct OracleCoefficients {
    std::vector<Complex> a, b;
};

inline OracleCoefficients oracle_mie_coefficients(double radius, const Material& mat, double omega,
                                                  int nmax) {
    const double x = omega * radius;
    std::vector<Complex> jx(nmax + 1), hx(nmax + 1);
    const auto yx = bessel_y_upward(nmax, x);
    for (int n = 0; n <= nmax; ++n) {
        jx[n] = bessel_j_series(n, {x, 0.0});
        hx[n] = jx[n] + Complex{0.0, 1.0} * yx[n];
    }
    const auto psi_prime = [&](int n) { return x * jx[n - 1] - static_cast<double>(n) * jx[n]; };
    const auto xi_prime = [&](int n) { return x * hx[n - 1] - static_cast<double>(n) * hx[n]; };

    OracleCoefficients c;
    c.a.resize(nmax);
    c.b.resize(nmax);
    if (mat.kind == Material::Kind::PEC) {
        for (int n = 1; n <= nmax; ++n) {
            c.a[n - 1] = psi_prime(n) / xi_prime(n);
            c.b[n - 1] = (x * jx[n]) / (x * hx[n]);
        }
        return c;
    }

    const Complex eps_c{mat.eps, mat.sigma / omega};
    Complex m = std::sqrt(eps_c * mat.mu);
    if (m.imag() < 0.0) m = -m;
    const double mu1 = mat.mu;
    const Complex mx = m * x;
    std::vector<Complex> jmx(nmax + 1);
    for (int n = 0; n <= nmax; ++n) jmx[n] = bessel_j_series(n, mx);
    const auto psi_prime_m = [&](int n) {
        return mx * jmx[n - 1] - static_cast<double>(n) * jmx[n];
    };

    for (int n = 1; n <= nmax; ++n) {
        const Complex num_a = m * m * jmx[n] * psi_prime(n) - mu1 * jx[n] * psi_prime_m(n);
        const Complex den_a = m * m * jmx[n] * xi_prime(n) - mu1 * hx[n] * psi_prime_m(n);
        const Complex num_b = mu1 * jmx[n] * psi_prime(n) - jx[n] * psi_prime_m(n);
        const Complex den_b = mu1 * jmx[n] * xi_prime(n) - hx[n] * psi_prime_m(n);
        c.a[n - 1] = num_a / den_a;
        c.b[n - 1] = num_b / den_b;
    }
    return c;
}

inline TangentField oracle_mie_farfield(double radius, const Material& mat,
                                        const IncidentWave& wave,
                                        std::shared_ptr<const SphereGrid> grid, int nmax) {
    const auto coeff = oracle_mie_coefficients(radius, mat, wave.omega, nmax);
    const double e0 = norm(wave.p);
    TangentField f(std::move(grid));
    if (e0 == 0.0) return f;

    const Vec3 e1 = normalized(wave.p);
    const Vec3 e3 = wave.theta_inc;
    const Vec3 e2 = cross(e3, e1);
    const Complex amp = Complex{0.0, e0 / wave.omega};

    for (std::size_t idx = 0; idx < f.grid->size(); ++idx) {
        const Vec3& th = f.grid->nodes[idx];
        const double lx = dot(th, e1), ly = dot(th, e2), lz = dot(th, e3);
        const double theta_s = std::acos(std::clamp(lz, -1.0, 1.0));
        const double st = std::sin(theta_s);

        CVec3 a_loc;
        if (st < 1e-9) {
            Complex s{0.0, 0.0};
            for (int n = 1; n <= nmax; ++n) {
                const double fac = 0.5 * (2.0 * n + 1.0);
                if (lz > 0.0)
                    s += fac * (coeff.a[n - 1] + coeff.b[n - 1]);
                else
                    s += fac * ((n % 2 == 0) ? 1.0 : -1.0) * (coeff.a[n - 1] - coeff.b[n - 1]);
            }
            const Complex val = (lz > 0.0 ? amp : -amp) * s;
            a_loc = {val, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
        } else {
            const double phi = std::atan2(ly, lx);
            const double ct = std::cos(theta_s);
            // associated Legendre P_n^1 (no phase), pi_n = P_n^1/sin,
            // tau_n = (n ct P_n^1 - (n+1) P_{n-1}^1)/sin
            std::vector<double> p1(nmax + 1, 0.0);
            p1[1] = st;
            if (nmax >= 2) p1[2] = 3.0 * st * ct;
            for (int n = 2; n < nmax; ++n)
                p1[n + 1] = ((2.0 * n + 1.0) * ct * p1[n] - (n + 1.0) * p1[n - 1]) / n;

            Complex s1{0.0, 0.0}, s2{0.0, 0.0};
            for (int n = 1; n <= nmax; ++n) {
                const double pi_n = p1[n] / st;
                const double tau_n = (n * ct * p1[n] - (n + 1.0) * p1[n - 1]) / st;
                const double fn = (2.0 * n + 1.0) / (n * (n + 1.0));
                s1 += fn * (coeff.a[n - 1] * pi_n + coeff.b[n - 1] * tau_n);
                s2 += fn * (coeff.a[n - 1] * tau_n + coeff.b[n - 1] * pi_n);
            }
            const Vec3 theta_hat{ct * std::cos(phi), ct * std::sin(phi), -st};
            const Vec3 phi_hat{-std::sin(phi), std::cos(phi), 0.0};
            const Complex ctheta = amp * std::cos(phi) * s2;
            const Complex cphi = -(amp * std::sin(phi) * s1);
            a_loc = {ctheta * theta_hat.x + cphi * phi_hat.x,
                     ctheta * theta_hat.y + cphi * phi_hat.y, ctheta * theta_hat.z};
        }
        f.values[idx] = {a_loc.x * e1.x + a_loc.y * e2.x + a_loc.z * e3.x,
                         a_loc.x * e1.y + a_loc.y * e2.y + a_loc.z * e3.y,
                         a_loc.x * e1.z + a_loc.y * e2.z + a_loc.z * e3.z};
    }
    return f;
}

} // namespace farloc::testing

#endif
