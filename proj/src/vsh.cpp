#include "farloc/vsh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace farloc {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Normalized associated Legendre P_n^m(ct) with Condon-Shortley phase, so
// that Y_n^m = P_n^m(cos(theta)) e^{i m phi} is orthonormal on S^2 (m >= 0).
// Returns P_n^m and P_{n-1}^m (the latter 0 when n == m).
struct LegendrePair {
    double pn;
    double pnm1;
};

LegendrePair legendre_norm(int n, int m, double ct, double st) {
    double pmm = 1.0 / std::sqrt(kFourPi);
    for (int k = 1; k <= m; ++k) pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * st;
    if (n == m) return {pmm, 0.0};
    double prev = pmm;                              // P_m^m
    double cur = std::sqrt(2.0 * m + 3.0) * ct * pmm; // P_{m+1}^m
    for (int k = m + 2; k <= n; ++k) {
        const double denom = static_cast<double>(k) * k - static_cast<double>(m) * m;
        const double alpha = std::sqrt((4.0 * k * k - 1.0) / denom);
        const double beta =
            std::sqrt((2.0 * k + 1.0) * ((k - 1.0) * (k - 1.0) - static_cast<double>(m) * m) /
                      ((2.0 * k - 3.0) * denom));
        const double next = alpha * ct * cur - beta * prev;
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

// d/dtheta P_n^m(cos theta) away from the poles.
double legendre_dtheta(int n, int m, double ct, double st, const LegendrePair& p) {
    const double e = std::sqrt((static_cast<double>(n) * n - static_cast<double>(m) * m) *
                               (2.0 * n + 1.0) / (2.0 * n - 1.0));
    return (n * ct * p.pn - e * p.pnm1) / st;
}

Complex azimuthal_power(double cp, double sp, int m) {
    // (cos phi + i sin phi)^m for m >= 0
    Complex e{cp, sp};
    Complex out{1.0, 0.0};
    for (int k = 0; k < m; ++k) out *= e;
    return out;
}

void check_index(int n, int m) {
    if (n < 0) throw std::invalid_argument("spherical harmonic: degree n must be >= 0");
    if (std::abs(m) > n) throw std::invalid_argument("spherical harmonic: |m| must be <= n");
}

// Grad Y_n^m at the poles: nonzero only for |m| = 1. The south-pole value is
// the north-pole one times (-1)^{n+1} (antipodal map parity on tangent fields).
CVec3 grad_y_at_pole(int n, int m, bool north) {
    if (m != 1 && m != -1) return {};
    const double u = -0.5 * std::sqrt(static_cast<double>(n) * (n + 1.0) * (2.0 * n + 1.0) / kFourPi);
    const double sgn = north ? 1.0 : ((n % 2 == 0) ? -1.0 : 1.0);
    if (m == 1) return {Complex{sgn * u, 0.0}, Complex{0.0, sgn * u}, Complex{0.0, 0.0}};
    return {Complex{-sgn * u, 0.0}, Complex{0.0, sgn * u}, Complex{0.0, 0.0}};
}

CVec3 grad_sph_harm(int n, int m, const Vec3& theta) {
    const double st = std::hypot(theta.x, theta.y);
    if (st < 1e-9) return grad_y_at_pole(n, m, theta.z > 0.0);

    const int am = std::abs(m);
    const double ct = theta.z;
    const double cp = theta.x / st;
    const double sp = theta.y / st;

    const auto p = legendre_norm(n, am, ct, st);
    const double dp = legendre_dtheta(n, am, ct, st, p);

    Complex eim = azimuthal_power(cp, sp, am);
    double parity = 1.0;
    if (m < 0) {
        eim = std::conj(eim);
        parity = (am % 2 == 0) ? 1.0 : -1.0;
    }

    const Complex dtheta_part = parity * dp * eim;
    // (i m / sin theta) Y_n^m; zero for m = 0.
    const Complex dphi_part =
        (m == 0) ? Complex{0.0, 0.0} : parity * Complex{0.0, static_cast<double>(m)} * (p.pn / st) * eim;

    const Vec3 theta_hat{ct * cp, ct * sp, -st};
    const Vec3 phi_hat{-sp, cp, 0.0};
    return {dtheta_part * theta_hat.x + dphi_part * phi_hat.x,
            dtheta_part * theta_hat.y + dphi_part * phi_hat.y,
            dtheta_part * theta_hat.z + dphi_part * phi_hat.z};
}

} // namespace

Complex sph_harm(int n, int m, const Vec3& theta) {
    check_index(n, m);
    const int am = std::abs(m);
    const double st = std::hypot(theta.x, theta.y);
    const double ct = theta.z;
    const auto p = legendre_norm(n, am, ct, st);
    if (am == 0) return {p.pn, 0.0};
    if (st == 0.0) return {0.0, 0.0};
    Complex eim = azimuthal_power(theta.x / st, theta.y / st, am);
    double parity = 1.0;
    if (m < 0) {
        eim = std::conj(eim);
        parity = (am % 2 == 0) ? 1.0 : -1.0;
    }
    return parity * p.pn * eim;
}

CVec3 vsh_point(const VshIndex& idx, const Vec3& theta) {
    check_index(idx.n, idx.m);
    if (idx.n < 1) throw std::invalid_argument("vector spherical harmonic: degree n must be >= 1");
    const double scale = 1.0 / std::sqrt(static_cast<double>(idx.n) * (idx.n + 1.0));
    CVec3 u = Complex{scale, 0.0} * grad_sph_harm(idx.n, idx.m, theta);
    if (idx.family == VshFamily::U) return u;
    return cross(theta, u);
}

TangentField vsh_eval(const VshIndex& idx, std::shared_ptr<const SphereGrid> grid) {
    TangentField f(std::move(grid));
    for (std::size_t k = 0; k < f.grid->size(); ++k) f.values[k] = vsh_point(idx, f.grid->nodes[k]);
    return f;
}

std::vector<Complex> phase_shift(const SphereGrid& grid, const IncidentWave& wave, const Vec3& z) {
    std::vector<Complex> phase(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double arg = wave.omega * dot(wave.theta_inc - grid.nodes[k], z);
        phase[k] = {std::cos(arg), std::sin(arg)};
    }
    return phase;
}

DipoleCoefficients project_first_order(const TangentField& A, std::span<const Complex> phase) {
    if (A.grid->exactness_degree < 4)
        throw std::invalid_argument("project_first_order: grid exactness degree must be >= 4");
    if (!phase.empty() && phase.size() != A.grid->size())
        throw std::invalid_argument("project_first_order: phase size does not match grid");

    DipoleCoefficients c;
    for (int mi = 0; mi < 3; ++mi) {
        const int m = mi - 1;
        Complex au{0.0, 0.0}, bv{0.0, 0.0};
        for (std::size_t k = 0; k < A.grid->size(); ++k) {
            const Vec3& node = A.grid->nodes[k];
            const CVec3 u = vsh_point({1, m, VshFamily::U}, node);
            const CVec3 v = vsh_point({1, m, VshFamily::V}, node);
            Complex f = A.grid->weights[k];
            if (!phase.empty()) f *= std::conj(phase[k]);
            au += f * cdot(A.values[k], u);
            bv += f * cdot(A.values[k], v);
        }
        c.a[mi] = au;
        c.b[mi] = bv;
    }
    c.scale = 1.0;
    return c;
}

DipoleCoefficients project_first_order(const TangentField& A) {
    return project_first_order(A, std::span<const Complex>{});
}

} // namespace farloc
