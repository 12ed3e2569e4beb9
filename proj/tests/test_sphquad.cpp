#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "farloc/sphere_grid.hpp"
#include "farloc/tangent_field.hpp"
#include "farloc/vsh.hpp"
#include "test_util.hpp"

using namespace farloc;

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

TEST_CASE("lebedev grids satisfy the quadrature invariants") {
    for (int n : {26, 110, 302, 590}) {
        const SphereGrid g = build_lebedev(n);
        CHECK(static_cast<int>(g.size()) == n);

        double wsum = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            CHECK(std::abs(norm(g.nodes[k]) - 1.0) < 1e-14);
            CHECK(g.weights[k] > 0.0);
            wsum += g.weights[k];
        }
        CHECK(std::abs(wsum - kFourPi) < 1e-12);
    }
    CHECK(build_lebedev(590).exactness_degree == 41);
}

TEST_CASE("302-point rule integrates the degree-2 moment exactly") {
    const SphereGrid g = build_lebedev(302);
    double acc = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) acc += g.weights[k] * g.nodes[k].z * g.nodes[k].z;
    CHECK(std::abs(acc - kFourPi / 3.0) < 1e-12);
}

TEST_CASE("unsupported rule size reports the supported ones") {
    CHECK_THROWS_WITH_AS(build_lebedev(100), doctest::Contains("590"), std::invalid_argument);
}

TEST_CASE("scalar harmonics integrate orthonormally up to the declared degree") {
    for (int size : {26, 110, 302, 590}) {
        const SphereGrid g = build_lebedev(size);
        const auto gram = [&](int n, int m, int n2, int m2) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < g.size(); ++k)
                acc += g.weights[k] * sph_harm(n, m, g.nodes[k]) *
                       std::conj(sph_harm(n2, m2, g.nodes[k]));
            return acc;
        };
        // products of degree n + n' up to the rule's exactness degree
        const int n = g.exactness_degree / 2;
        CHECK(std::abs(gram(n, n / 2, n, n / 2) - 1.0) < 1e-10);
        CHECK(std::abs(gram(n, -n, n, -n) - 1.0) < 1e-10);
        CHECK(std::abs(gram(n - 1, 1, n, 1)) < 1e-10);
        CHECK(std::abs(gram(n, 0, n, 2)) < 1e-10);
    }
}

TEST_CASE("t2 inner product: orthonormal basis elements") {
    const auto grid = make_lebedev(110);
    const TangentField u10 = vsh_eval({1, 0, VshFamily::U}, grid);
    const TangentField v10 = vsh_eval({1, 0, VshFamily::V}, grid);
    const TangentField u11 = vsh_eval({1, 1, VshFamily::U}, grid);

    CHECK(std::abs(t2_inner(u10, u10) - 1.0) < 1e-10);
    CHECK(std::abs(t2_inner(u10, v10)) < 1e-10);
    CHECK(std::abs(t2_norm(u11) - 1.0) < 1e-10);
}

TEST_CASE("t2 inner product: zero field, homogeneity, conjugate symmetry") {
    const auto grid = make_lebedev(26);
    const TangentField zero(grid);
    const TangentField u = testing::random_tangent_field(grid, 11);
    const TangentField v = testing::random_tangent_field(grid, 12);

    CHECK(t2_inner(zero, u) == Complex{0.0, 0.0});
    CHECK(t2_norm(zero) == 0.0);
    CHECK(std::abs(t2_norm(Complex{2.0, 0.0} * u) - 2.0 * t2_norm(u)) < 1e-12);
    CHECK(std::abs(t2_inner(u, v) - std::conj(t2_inner(v, u))) < 1e-12);
}

TEST_CASE("t2 inner product is sesquilinear and satisfies Cauchy-Schwarz") {
    const auto grid = make_lebedev(26);
    const TangentField u = testing::random_tangent_field(grid, 21);
    const TangentField v = testing::random_tangent_field(grid, 22);
    const TangentField w = testing::random_tangent_field(grid, 23);
    const Complex alpha{0.7, -1.3};

    // linear in the first argument
    const Complex lhs = t2_inner(alpha * u + w, v);
    const Complex rhs = alpha * t2_inner(u, v) + t2_inner(w, v);
    CHECK(std::abs(lhs - rhs) < 1e-12);

    // conjugate-linear in the second
    const Complex lhs2 = t2_inner(u, alpha * v);
    const Complex rhs2 = std::conj(alpha) * t2_inner(u, v);
    CHECK(std::abs(lhs2 - rhs2) < 1e-12);

    CHECK(std::abs(t2_inner(u, v)) <= t2_norm(u) * t2_norm(v) + 1e-12);
}

TEST_CASE("mismatched grids are rejected") {
    const TangentField a(make_lebedev(26));
    const TangentField b(make_lebedev(110));
    CHECK_THROWS_AS(t2_inner(a, b), std::invalid_argument);
}

TEST_CASE("tangent field text round trip is bit-identical") {
    const auto grid = make_lebedev(26);
    const TangentField f = testing::random_tangent_field(grid, 99);

    std::stringstream ss;
    write_tangent_field(ss, f);
    const TangentField g = read_tangent_field(ss, grid);

    for (std::size_t k = 0; k < f.values.size(); ++k) {
        CHECK(f.values[k].x == g.values[k].x);
        CHECK(f.values[k].y == g.values[k].y);
        CHECK(f.values[k].z == g.values[k].z);
    }
}

TEST_CASE("reading onto the wrong grid fails") {
    const TangentField f = testing::random_tangent_field(make_lebedev(26), 5);
    std::stringstream ss;
    write_tangent_field(ss, f);
    CHECK_THROWS(read_tangent_field(ss, make_lebedev(110)));
}
