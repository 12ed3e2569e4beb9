// Mie series for a homogeneous sphere (PEC or penetrable, possibly lossy and
// magnetic) in vacuum. Conventions: time factor e^{-i omega t}, incident
// field p e^{i omega x . d}, far field normalized by e^{i omega r}/r.
//
// Coefficients use the logarithmic-derivative form: with psi/xi the
// Riccati-Bessel functions at x = omega*rho, D_n the logarithmic derivative
// of psi at m*x, m the relative refractive index and mu1 the relative
// permeability,
//   a_n = (m psi_n' - mu1 D_n psi_n) / (m xi_n' - mu1 D_n xi_n)
//   b_n = (mu1 psi_n' - m D_n psi_n) / (mu1 xi_n' - m D_n xi_n)
// and for the perfect conductor a_n = psi_n'/xi_n', b_n = psi_n/xi_n.

#include "farloc/mie.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace farloc {

namespace {

struct RiccatiBessel {
    std::vector<double> psi, dpsi;
    std::vector<Complex> xi, dxi; // xi_n = psi_n - i chi_n
};

// psi_n by downward recurrence (normalized to psi_0 = sin x), chi_n upward.
RiccatiBessel riccati_bessel(double x, int nmax) {
    RiccatiBessel rb;
    rb.psi.resize(nmax + 1);
    rb.dpsi.resize(nmax + 1);
    rb.xi.resize(nmax + 1);
    rb.dxi.resize(nmax + 1);

    const int nstart = nmax + 15 + static_cast<int>(x);
    std::vector<double> j(nstart + 2, 0.0);
    j[nstart + 1] = 0.0;
    j[nstart] = 1e-290;
    for (int n = nstart; n >= 1; --n) {
        j[n - 1] = (2.0 * n + 1.0) / x * j[n] - j[n + 1];
        if (std::abs(j[n - 1]) > 1e250) {
            for (int k = n - 1; k <= nstart + 1; ++k) j[k] *= 1e-250;
        }
    }
    const double scale = (std::sin(x) / x) / j[0];
    std::vector<double> chi(nmax + 1);
    chi[0] = std::cos(x);
    if (nmax >= 1) chi[1] = std::cos(x) / x + std::sin(x);
    for (int n = 1; n < nmax; ++n) chi[n + 1] = (2.0 * n + 1.0) / x * chi[n] - chi[n - 1];

    for (int n = 0; n <= nmax; ++n) {
        rb.psi[n] = x * j[n] * scale;
        rb.xi[n] = Complex{rb.psi[n], -chi[n]};
    }
    rb.dpsi[0] = std::cos(x);
    rb.dxi[0] = Complex{std::cos(x), std::sin(x)};
    for (int n = 1; n <= nmax; ++n) {
        rb.dpsi[n] = rb.psi[n - 1] - n / x * rb.psi[n];
        rb.dxi[n] = rb.xi[n - 1] - n / x * rb.xi[n];
    }
    return rb;
}

// Logarithmic derivative D_n(z) = psi_n'(z)/psi_n(z) by downward recurrence.
std::vector<Complex> log_derivative(Complex z, int nmax) {
    const int nstart = nmax + 16 + static_cast<int>(std::abs(z));
    std::vector<Complex> d(nstart + 1, Complex{0.0, 0.0});
    for (int n = nstart; n >= 1; --n) {
        const Complex r = static_cast<double>(n) / z;
        d[n - 1] = r - 1.0 / (d[n] + r);
    }
    d.resize(nmax + 1);
    return d;
}

int default_terms(double x) {
    return std::max(8, static_cast<int>(std::ceil(x + 8.0 * std::cbrt(x) + 10.0)));
}

} // namespace

MieCoefficients mie_coefficients(double radius, const Material& material, double omega,
                                 int n_terms) {
    if (!(radius > 0.0)) throw std::invalid_argument("mie_coefficients: radius must be > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("mie_coefficients: omega must be > 0");
    material.validate();

    const double x = omega * radius;
    const bool adaptive = n_terms <= 0;
    constexpr int kCeiling = 300;
    int nmax = adaptive ? std::min(default_terms(x), kCeiling) : n_terms;

    for (;;) {
        MieCoefficients c;
        c.a.resize(nmax);
        c.b.resize(nmax);
        const auto rb = riccati_bessel(x, nmax);

        if (material.kind == Material::Kind::PEC) {
            for (int n = 1; n <= nmax; ++n) {
                c.a[n - 1] = rb.dpsi[n] / rb.dxi[n];
                c.b[n - 1] = rb.psi[n] / rb.xi[n];
            }
        } else {
            const Complex eps_c{material.eps, material.sigma / omega};
            Complex m = std::sqrt(eps_c * material.mu);
            if (m.imag() < 0.0) m = -m;
            const double mu1 = material.mu;
            const auto d = log_derivative(m * x, nmax);
            for (int n = 1; n <= nmax; ++n) {
                c.a[n - 1] = (m * rb.dpsi[n] - mu1 * d[n] * rb.psi[n]) /
                             (m * rb.dxi[n] - mu1 * d[n] * rb.xi[n]);
                c.b[n - 1] = (mu1 * rb.dpsi[n] - m * d[n] * rb.psi[n]) /
                             (mu1 * rb.dxi[n] - m * d[n] * rb.xi[n]);
            }
        }

        if (!adaptive) return c;

        double peak = 0.0;
        for (int n = 0; n < nmax; ++n) peak = std::max(peak, std::abs(c.a[n]) + std::abs(c.b[n]));
        const double tail = std::abs(c.a[nmax - 1]) + std::abs(c.b[nmax - 1]);
        if (peak == 0.0 || tail <= 1e-14 * peak) return c;
        if (nmax >= kCeiling) {
            std::ostringstream msg;
            msg << "mie_coefficients: series not converged at n_max = " << nmax
                << " (last increment " << tail / peak << " relative)";
            throw std::runtime_error(msg.str());
        }
        nmax = std::min(kCeiling, nmax + nmax / 2 + 5);
    }
}

TangentField mie_farfield(double radius, const Material& material, const IncidentWave& wave,
                          std::shared_ptr<const SphereGrid> grid, int n_terms) {
    wave.validate();
    const auto coeff = mie_coefficients(radius, material, wave.omega, n_terms);
    const int nmax = static_cast<int>(coeff.a.size());
    const double k = wave.omega;
    const double e0 = norm(wave.p);

    TangentField f(std::move(grid));
    if (e0 == 0.0) return f;

    // Local frame: incident direction along e3, polarization along e1.
    const Vec3 e1 = normalized(wave.p);
    const Vec3 e3 = wave.theta_inc;
    const Vec3 e2 = cross(e3, e1);

    // Pole sums: forward S0 = 1/2 sum (2n+1)(a_n + b_n),
    // backward T = 1/2 sum (2n+1)(-1)^n (a_n - b_n).
    Complex s_fwd{0.0, 0.0}, s_back{0.0, 0.0};
    for (int n = 1; n <= nmax; ++n) {
        const double c = 0.5 * (2.0 * n + 1.0);
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        s_fwd += c * (coeff.a[n - 1] + coeff.b[n - 1]);
        s_back += c * sgn * (coeff.a[n - 1] - coeff.b[n - 1]);
    }

    const Complex amp = Complex{0.0, 1.0} / k * e0;

    for (std::size_t idx = 0; idx < f.grid->size(); ++idx) {
        const Vec3& th = f.grid->nodes[idx];
        const Vec3 loc{dot(th, e1), dot(th, e2), dot(th, e3)};
        const double st = std::hypot(loc.x, loc.y);
        CVec3 a_loc;
        if (st < 1e-9) {
            const Complex s = (loc.z > 0.0) ? amp * s_fwd : -(amp * s_back);
            a_loc = {s, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
        } else {
            const double ct = loc.z;
            const double cp = loc.x / st;
            const double sp = loc.y / st;
            // pi_n, tau_n recurrences (pole-regular polynomials in ct)
            Complex s1{0.0, 0.0}, s2{0.0, 0.0};
            double pi_nm1 = 0.0, pi_n = 1.0;
            for (int n = 1; n <= nmax; ++n) {
                const double tau_n = n * ct * pi_n - (n + 1.0) * pi_nm1;
                const double fn = (2.0 * n + 1.0) / (n * (n + 1.0));
                s1 += fn * (coeff.a[n - 1] * pi_n + coeff.b[n - 1] * tau_n);
                s2 += fn * (coeff.a[n - 1] * tau_n + coeff.b[n - 1] * pi_n);
                const double pi_np1 = ((2.0 * n + 1.0) * ct * pi_n - (n + 1.0) * pi_nm1) / n;
                pi_nm1 = pi_n;
                pi_n = pi_np1;
            }
            const Vec3 theta_hat{ct * cp, ct * sp, -st};
            const Vec3 phi_hat{-sp, cp, 0.0};
            const Complex ctheta = amp * cp * s2;
            const Complex cphi = -(amp * sp * s1);
            a_loc = {ctheta * theta_hat.x + cphi * phi_hat.x,
                     ctheta * theta_hat.y + cphi * phi_hat.y, ctheta * theta_hat.z};
        }
        // back to global Cartesian components
        f.values[idx] = {a_loc.x * e1.x + a_loc.y * e2.x + a_loc.z * e3.x,
                         a_loc.x * e1.y + a_loc.y * e2.y + a_loc.z * e3.y,
                         a_loc.x * e1.z + a_loc.y * e2.z + a_loc.z * e3.z};
    }
    return f;
}

} // namespace farloc
