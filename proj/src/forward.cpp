#include "farloc/forward.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace farloc {

ShapeSpec ShapeSpec::sphere(double radius, const Material& material) {
    if (!(radius > 0.0)) throw std::invalid_argument("ShapeSpec: sphere radius must be > 0");
    material.validate();
    ShapeSpec s;
    s.kind = Kind::Sphere;
    s.radius = radius;
    s.material = material;
    return s;
}

ShapeSpec ShapeSpec::dipole(const DipoleCoefficients& coeffs) {
    for (const auto& c : coeffs.a)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("ShapeSpec: dipole coefficients must be finite");
    for (const auto& c : coeffs.b)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("ShapeSpec: dipole coefficients must be finite");
    if (!(coeffs.scale > 0.0)) throw std::invalid_argument("ShapeSpec: dipole scale must be > 0");
    ShapeSpec s;
    s.kind = Kind::Dipole;
    s.coeffs = coeffs;
    return s;
}

double scene_min_separation(const Scene& scene) {
    double l = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < scene.components.size(); ++i)
        for (std::size_t j = i + 1; j < scene.components.size(); ++j)
            l = std::min(l, norm(scene.components[i].center - scene.components[j].center));
    return l;
}

TangentField dipole_farfield(const DipoleCoefficients& coeffs,
                             std::shared_ptr<const SphereGrid> grid) {
    TangentField f(std::move(grid));
    for (std::size_t k = 0; k < f.grid->size(); ++k) {
        const Vec3& th = f.grid->nodes[k];
        CVec3 v;
        for (int mi = 0; mi < 3; ++mi) {
            const int m = mi - 1;
            v += coeffs.a[mi] * vsh_point({1, m, VshFamily::U}, th);
            v += coeffs.b[mi] * vsh_point({1, m, VshFamily::V}, th);
        }
        f.values[k] = Complex{coeffs.scale, 0.0} * v;
    }
    return f;
}

TangentField translate_farfield(const TangentField& A, const Vec3& z, const IncidentWave& wave) {
    const auto phase = phase_shift(*A.grid, wave, z);
    TangentField out(A.grid);
    for (std::size_t k = 0; k < A.values.size(); ++k) out.values[k] = phase[k] * A.values[k];
    return out;
}

TangentField reference_farfield(const ShapeSpec& shape, const IncidentWave& wave,
                                std::shared_ptr<const SphereGrid> grid) {
    if (shape.kind == ShapeSpec::Kind::Sphere)
        return mie_farfield(shape.radius, shape.material, wave, std::move(grid));
    return dipole_farfield(shape.coeffs, std::move(grid));
}

TangentField synthesize_scene(const Scene& scene, std::shared_ptr<const SphereGrid> grid) {
    scene.wave.validate();
    TangentField total(grid);
    for (const auto& comp : scene.components) {
        const TangentField ref = reference_farfield(comp.shape, scene.wave, grid);
        const auto phase = phase_shift(*grid, scene.wave, comp.center);
        for (std::size_t k = 0; k < total.values.size(); ++k)
            total.values[k] += phase[k] * ref.values[k];
    }
    return total;
}

namespace {

std::uint64_t mix64(std::uint64_t v) {
    v += 0x9E3779B97F4A7C15ull;
    v = (v ^ (v >> 30)) * 0xBF58476D1CE4E5B9ull;
    v = (v ^ (v >> 27)) * 0x94D049BB133111EBull;
    return v ^ (v >> 31);
}

// uniform on [-1, 1), keyed by (seed, node, component, slot)
double uniform_pm1(std::uint64_t seed, std::uint64_t node, std::uint64_t comp,
                   std::uint64_t slot) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ (node * 0x9E3779B97F4A7C15ull));
    h = mix64(h ^ (comp * 0xC2B2AE3D27D4EB4Full));
    h = mix64(h ^ (slot * 0x165667B19E3779F9ull));
    const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

} // namespace

TangentField add_noise(const TangentField& A, double delta, std::uint64_t seed) {
    if (delta < 0.0) throw std::invalid_argument("add_noise: delta must be >= 0");
    if (delta == 0.0) return A;

    const double amp = delta * max_abs(A);
    TangentField out(A.grid);
    for (std::size_t k = 0; k < A.values.size(); ++k) {
        Complex pert[3];
        for (int c = 0; c < 3; ++c) {
            const double zeta1 = uniform_pm1(seed, k, c, 0);
            const double zeta2 = uniform_pm1(seed, k, c, 1);
            const double arg = 2.0 * std::numbers::pi * zeta2;
            pert[c] = amp * zeta1 * Complex{std::cos(arg), std::sin(arg)};
        }
        out.values[k] = {A.values[k].x + pert[0], A.values[k].y + pert[1],
                         A.values[k].z + pert[2]};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scene files
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

Vec3 vec3_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw std::runtime_error(std::string("scene file: ") + what + " must be a 3-array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::runtime_error("scene file: complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Material material_from_json(const json& j) {
    Material m;
    const std::string kind = j.value("kind", "pec");
    if (kind == "pec") {
        m.kind = Material::Kind::PEC;
    } else if (kind == "medium") {
        m.kind = Material::Kind::Medium;
        m.eps = j.value("eps", 1.0);
        m.mu = j.value("mu", 1.0);
        m.sigma = j.value("sigma", 0.0);
        m.validate();
    } else {
        throw std::runtime_error("scene file: material kind must be 'pec' or 'medium'");
    }
    return m;
}

json material_to_json(const Material& m) {
    if (m.kind == Material::Kind::PEC) return json{{"kind", "pec"}};
    return json{{"kind", "medium"}, {"eps", m.eps}, {"mu", m.mu}, {"sigma", m.sigma}};
}

IncidentWave wave_from_json(const json& j) {
    IncidentWave w;
    if (j.contains("omega")) w.omega = j["omega"].get<double>();
    if (j.contains("theta_inc")) w.theta_inc = vec3_from_json(j["theta_inc"], "wave.theta_inc");
    if (j.contains("p")) w.p = vec3_from_json(j["p"], "wave.p");
    w.validate();
    return w;
}

ShapeSpec shape_from_json(const json& j, const Material& material) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "sphere") return ShapeSpec::sphere(j.at("radius").get<double>(), material);
    if (kind == "dipole") {
        const json& jc = j.at("coeffs");
        DipoleCoefficients c;
        for (int i = 0; i < 3; ++i) {
            c.a[i] = complex_from_json(jc.at("a").at(i));
            c.b[i] = complex_from_json(jc.at("b").at(i));
        }
        c.scale = jc.value("scale", 1.0);
        return ShapeSpec::dipole(c);
    }
    throw std::runtime_error("scene file: shape kind must be 'sphere' or 'dipole'");
}

} // namespace

Scene load_scene(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open scene file: " + path);
    json j;
    is >> j;

    Scene scene;
    if (j.contains("wave")) scene.wave = wave_from_json(j["wave"]);
    for (const auto& jc : j.value("components", json::array())) {
        Material material; // PEC unless specified
        if (jc.contains("material")) material = material_from_json(jc["material"]);
        SceneComponent comp;
        comp.shape = shape_from_json(jc.at("shape"), material);
        comp.center = vec3_from_json(jc.at("center"), "component center");
        scene.components.push_back(comp);
    }
    return scene;
}

void save_scene(const std::string& path, const Scene& scene) {
    json j;
    j["wave"] = {{"omega", scene.wave.omega},
                 {"theta_inc", {scene.wave.theta_inc.x, scene.wave.theta_inc.y, scene.wave.theta_inc.z}},
                 {"p", {scene.wave.p.x, scene.wave.p.y, scene.wave.p.z}}};
    j["components"] = json::array();
    for (const auto& comp : scene.components) {
        json jc;
        if (comp.shape.kind == ShapeSpec::Kind::Sphere) {
            jc["shape"] = {{"kind", "sphere"}, {"radius", comp.shape.radius}};
        } else {
            json coeffs;
            coeffs["a"] = json::array();
            coeffs["b"] = json::array();
            for (int i = 0; i < 3; ++i) {
                coeffs["a"].push_back(complex_to_json(comp.shape.coeffs.a[i]));
                coeffs["b"].push_back(complex_to_json(comp.shape.coeffs.b[i]));
            }
            coeffs["scale"] = comp.shape.coeffs.scale;
            jc["shape"] = {{"kind", "dipole"}, {"coeffs", coeffs}};
        }
        jc["material"] = material_to_json(comp.shape.material);
        jc["center"] = {comp.center.x, comp.center.y, comp.center.z};
        j["components"].push_back(jc);
    }

    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write scene file: " + path);
    os << j.dump(2) << "\n";
}

} // namespace farloc
