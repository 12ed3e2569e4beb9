#include "farloc/library_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace farloc {

namespace {

using nlohmann::json;

ShapeSpec shape_spec_from_json(const json& j) {
    Material material;
    if (j.contains("material")) {
        const json& jm = j["material"];
        const std::string kind = jm.value("kind", "pec");
        if (kind == "medium")
            material = Material::medium(jm.value("eps", 1.0), jm.value("mu", 1.0),
                                        jm.value("sigma", 0.0));
    }
    const json& js = j.at("shape");
    const std::string kind = js.at("kind").get<std::string>();
    if (kind == "sphere") return ShapeSpec::sphere(js.at("radius").get<double>(), material);
    if (kind == "dipole") {
        DipoleCoefficients c;
        const json& jc = js.at("coeffs");
        for (int i = 0; i < 3; ++i) {
            c.a[i] = {jc.at("a").at(i).at(0).get<double>(), jc.at("a").at(i).at(1).get<double>()};
            c.b[i] = {jc.at("b").at(i).at(0).get<double>(), jc.at("b").at(i).at(1).get<double>()};
        }
        c.scale = jc.value("scale", 1.0);
        return ShapeSpec::dipole(c);
    }
    throw std::runtime_error("library description: shape kind must be 'sphere' or 'dipole'");
}

} // namespace

std::vector<LibraryEntrySpec> load_library_description(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open library description: " + path);
    json j;
    is >> j;
    std::vector<LibraryEntrySpec> entries;
    for (const auto& je : j.at("entries")) {
        LibraryEntrySpec e;
        e.id = je.at("id").get<std::string>();
        e.shape = shape_spec_from_json(je);
        e.trim_radius = je.value("trim_radius", -1.0);
        entries.push_back(std::move(e));
    }
    if (entries.empty()) throw std::runtime_error("library description has no entries: " + path);
    return entries;
}

ReferenceLibrary build_reference_library(const std::vector<LibraryEntrySpec>& entries,
                                         const IncidentWave& wave,
                                         std::shared_ptr<const SphereGrid> grid) {
    ReferenceLibrary lib;
    for (const auto& spec : entries) {
        ReferenceEntry entry;
        entry.id = spec.id;
        entry.farfield = reference_farfield(spec.shape, wave, grid);
        entry.norm = t2_norm(entry.farfield);
        entry.trim_radius = spec.trim_radius >= 0.0
                                ? spec.trim_radius
                                : spec.shape.diameter() + 0.25 * wave.wavelength();
        lib.entries.push_back(std::move(entry));
    }
    return order_references(std::move(lib));
}

void save_reference_library(const std::string& index_path, const ReferenceLibrary& lib,
                            const IncidentWave& wave, int n_lebedev) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(index_path).parent_path();

    json j;
    j["lebedev"] = n_lebedev;
    j["wave"] = {{"omega", wave.omega},
                 {"theta_inc", {wave.theta_inc.x, wave.theta_inc.y, wave.theta_inc.z}},
                 {"p", {wave.p.x, wave.p.y, wave.p.z}}};
    j["entries"] = json::array();
    for (const auto& entry : lib.entries) {
        const std::string fname = entry.id + ".ffp";
        save_tangent_field((dir / fname).string(), entry.farfield);
        j["entries"].push_back({{"id", entry.id},
                                {"farfield", fname},
                                {"norm", entry.norm},
                                {"trim_radius", entry.trim_radius}});
    }
    std::ofstream os(index_path);
    if (!os) throw std::runtime_error("cannot write library index: " + index_path);
    os << j.dump(2) << "\n";
}

LoadedLibrary load_reference_library(const std::string& index_path) {
    namespace fs = std::filesystem;
    std::ifstream is(index_path);
    if (!is) throw std::runtime_error("cannot open library index: " + index_path);
    json j;
    is >> j;

    LoadedLibrary out;
    out.n_lebedev = j.value("lebedev", 590);
    if (j.contains("wave")) {
        const json& jw = j["wave"];
        out.wave.omega = jw.value("omega", out.wave.omega);
        if (jw.contains("theta_inc"))
            out.wave.theta_inc = {jw["theta_inc"][0].get<double>(), jw["theta_inc"][1].get<double>(),
                                  jw["theta_inc"][2].get<double>()};
        if (jw.contains("p"))
            out.wave.p = {jw["p"][0].get<double>(), jw["p"][1].get<double>(),
                          jw["p"][2].get<double>()};
        out.wave.validate();
    }

    const auto grid = make_lebedev(out.n_lebedev);
    const fs::path dir = fs::path(index_path).parent_path();
    for (const auto& je : j.at("entries")) {
        ReferenceEntry entry;
        entry.id = je.at("id").get<std::string>();
        entry.farfield = load_tangent_field((dir / je.at("farfield").get<std::string>()).string(),
                                            grid);
        entry.norm = je.value("norm", t2_norm(entry.farfield));
        entry.trim_radius = je.at("trim_radius").get<double>();
        out.lib.entries.push_back(std::move(entry));
    }
    return out;
}

} // namespace farloc
