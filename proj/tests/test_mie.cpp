#include <doctest.h>

#include <cmath>
#include <numbers>

#include "farloc/mie.hpp"
#include "farloc/vsh.hpp"
#include "mie_oracle.hpp"

using namespace farloc;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_t2_distance(const TangentField& a, const TangentField& b) {
    TangentField diff(a.grid);
    for (std::size_t k = 0; k < diff.values.size(); ++k)
        diff.values[k] = a.values[k] - b.values[k];
    return t2_norm(diff) / t2_norm(a);
}

// First-order coefficients of the transverse projection of a real unit
// vector q: the electric-dipole pattern q - theta (theta . q).
std::array<Complex, 3> dipole_map(const Vec3& q) {
    const double c1 = std::sqrt(4.0 * kPi / 3.0);
    const double c0 = std::sqrt(8.0 * kPi / 3.0);
    return {Complex{c1 * q.x, c1 * q.y}, Complex{c0 * q.z, 0.0}, Complex{-c1 * q.x, c1 * q.y}};
}

} // namespace

TEST_CASE("small PEC sphere reproduces the Rayleigh coefficients") {
    const double x = 0.01;
    const auto c = mie_coefficients(x / (2.0 * kPi), Material::pec(), 2.0 * kPi);
    const Complex a1_expect{0.0, -2.0 / 3.0 * x * x * x};
    const Complex b1_expect{0.0, 1.0 / 3.0 * x * x * x};
    CHECK(std::abs(c.a[0] - a1_expect) < 1e-3 * std::abs(a1_expect));
    CHECK(std::abs(c.b[0] - b1_expect) < 1e-3 * std::abs(b1_expect));
}

TEST_CASE("far field matches the independently coded reference") {
    const auto grid = make_lebedev(590);
    const IncidentWave wave; // omega = 2 pi, theta' = e1, p = e3

    SUBCASE("PEC sphere, radius 0.2") {
        const TangentField main = mie_farfield(0.2, Material::pec(), wave, grid);
        const TangentField ref = testing::oracle_mie_farfield(0.2, Material::pec(), wave, grid, 25);
        CHECK(rel_t2_distance(main, ref) < 1e-8);
    }
    SUBCASE("dielectric sphere, eps = 4") {
        const Material mat = Material::medium(4.0);
        const TangentField main = mie_farfield(0.2, mat, wave, grid);
        const TangentField ref = testing::oracle_mie_farfield(0.2, mat, wave, grid, 27);
        CHECK(rel_t2_distance(main, ref) < 1e-8);
    }
    SUBCASE("lossy magnetic sphere") {
        const Material mat = Material::medium(2.5, 1.8, 1.2);
        const TangentField main = mie_farfield(0.3, mat, wave, grid);
        const TangentField ref = testing::oracle_mie_farfield(0.3, mat, wave, grid, 30);
        CHECK(rel_t2_distance(main, ref) < 1e-8);
    }
}

TEST_CASE("halving a small radius scales the norm by one eighth") {
    const auto grid = make_lebedev(302);
    const IncidentWave wave;
    const double n1 = t2_norm(mie_farfield(0.04, Material::pec(), wave, grid));
    const double n2 = t2_norm(mie_farfield(0.02, Material::pec(), wave, grid));
    CHECK(n1 / n2 == doctest::Approx(8.0).epsilon(0.05));
}

TEST_CASE("norm is invariant under co-rotation of incidence and polarization") {
    const auto grid = make_lebedev(590);
    const IncidentWave w1;
    IncidentWave w2;
    w2.theta_inc = normalized({1.0, 1.0, 0.3});
    w2.p = normalized(cross(w2.theta_inc, Vec3{0.0, 0.0, 1.0}));
    const double n1 = t2_norm(mie_farfield(0.25, Material::pec(), w1, grid));
    const double n2 = t2_norm(mie_farfield(0.25, Material::pec(), w2, grid));
    CHECK(std::abs(n1 - n2) < 1e-9 * n1);
}

TEST_CASE("far fields are tangential") {
    const auto grid = make_lebedev(110);
    const IncidentWave wave;
    CHECK(max_normal_fraction(mie_farfield(0.35, Material::pec(), wave, grid)) < 1e-12);
    CHECK(max_normal_fraction(mie_farfield(0.35, Material::medium(4.0), wave, grid)) < 1e-12);
}

TEST_CASE("series is stable under extra terms") {
    const auto grid = make_lebedev(302);
    const IncidentWave wave;
    const int n_auto = static_cast<int>(mie_coefficients(0.6, Material::pec(), wave.omega).a.size());
    const TangentField f1 = mie_farfield(0.6, Material::pec(), wave, grid);
    const TangentField f2 = mie_farfield(0.6, Material::pec(), wave, grid, n_auto + 5);
    CHECK(rel_t2_distance(f1, f2) < 1e-10);
}

TEST_CASE("projection of a small PEC sphere matches the analytic dipole limit") {
    const auto grid = make_lebedev(302);
    const IncidentWave wave; // d = e1, p = e3
    const double rho = 0.01;
    const double x = wave.omega * rho;

    const auto c = project_first_order(mie_farfield(rho, Material::pec(), wave, grid));

    const double amp_e = wave.omega * wave.omega * rho * rho * rho; // omega^2 rho^3
    const auto ea = dipole_map(wave.p);
    const auto eb = dipole_map(cross(wave.theta_inc, wave.p));
    double scale_err = 0.0;
    for (int i = 0; i < 3; ++i) {
        scale_err = std::max(scale_err, std::abs(c.a[i] - amp_e * ea[i]));
        scale_err = std::max(scale_err, std::abs(c.b[i] - 0.5 * amp_e * eb[i]));
    }
    // remainder of the low-frequency expansion is O((omega rho)^2) relative
    CHECK(scale_err < 5.0 * x * x * amp_e);
    CHECK(scale_err < 0.05 * amp_e);
}

TEST_CASE("invalid inputs are rejected") {
    const auto grid = make_lebedev(26);
    CHECK_THROWS_AS(mie_farfield(0.0, Material::pec(), IncidentWave{}, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(mie_farfield(-1.0, Material::pec(), IncidentWave{}, grid),
                    std::invalid_argument);
    IncidentWave bad;
    bad.p = {1.0, 0.0, 0.0}; // parallel to theta_inc
    CHECK_THROWS_AS(mie_farfield(0.2, Material::pec(), bad, grid), std::invalid_argument);
}

TEST_CASE("a sphere beyond the truncation ceiling reports non-convergence") {
    CHECK_THROWS_WITH_AS(mie_coefficients(50.0, Material::pec(), 2.0 * kPi),
                         doctest::Contains("not converged"), std::runtime_error);
}
