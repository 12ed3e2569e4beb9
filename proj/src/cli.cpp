#include "farloc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

#include "farloc/exports.hpp"
#include "farloc/forward.hpp"
#include "farloc/library_io.hpp"
#include "farloc/locate.hpp"

namespace farloc::cli {

namespace {

using nlohmann::json;

json config_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["scene"] = c.scene_path;
    j["library"] = c.library_path;
    j["data"] = c.data_path;
    j["out"] = c.output_path;
    j["fields"] = c.field_paths;
    j["mesh_min"] = {c.mesh_min.x, c.mesh_min.y, c.mesh_min.z};
    j["mesh_max"] = {c.mesh_max.x, c.mesh_max.y, c.mesh_max.z};
    j["h"] = c.h;
    j["lebedev"] = c.n_lebedev;
    j["delta"] = c.delta;
    j["seed"] = c.seed;
    j["threshold"] = c.threshold;
    j["eps_accept"] = c.eps_accept;
    j["min_sep"] = c.min_sep;
    j["tol"] = c.tol;
    j["refine"] = c.refine;
    j["wave"] = {{"omega", c.wave.omega},
                 {"theta_inc", {c.wave.theta_inc.x, c.wave.theta_inc.y, c.wave.theta_inc.z}},
                 {"p", {c.wave.p.x, c.wave.p.y, c.wave.p.z}}};
    return j;
}

void write_manifest(const RunConfig& c, const std::vector<std::string>& outputs) {
    json j;
    j["tool"] = "farloc";
    j["version"] = kVersion;
    j["config"] = config_json(c);
    j["outputs"] = outputs;
    const std::string path = c.output_path + ".manifest.json";
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write manifest: " + path);
    os << j.dump(2) << "\n";
}

SamplingMesh mesh_from(const RunConfig& c) { return {c.mesh_min, c.mesh_max, c.h}; }

void print_peaks(std::ostream& out, const PeakList& peaks) {
    if (peaks.peaks.empty()) {
        out << "no peaks found\n";
        return;
    }
    for (const auto& p : peaks.peaks) {
        out << "peak (" << p.location.x << ", " << p.location.y << ", " << p.location.z
            << ")  value " << p.value;
        if (p.reference_id) out << "  reference " << *p.reference_id;
        out << "\n";
    }
}

IncidentWave wave_for(const RunConfig& c) {
    if (!c.scene_path.empty()) return load_scene(c.scene_path).wave;
    c.wave.validate();
    return c.wave;
}

int cmd_synthesize(const RunConfig& c, std::ostream& out) {
    if (c.scene_path.empty() || c.output_path.empty())
        throw std::runtime_error("synthesize needs --scene and --out");
    const Scene scene = load_scene(c.scene_path);
    const double sep = scene_min_separation(scene);
    if (sep < scene.wave.wavelength())
        out << "warning: component separation " << sep
            << " is below one wavelength; sparse-scene synthesis degrades as O(1/L)\n";

    const auto grid = make_lebedev(c.n_lebedev);
    TangentField field = synthesize_scene(scene, grid);
    field = add_noise(field, c.delta, c.seed);
    save_tangent_field(c.output_path, field);
    write_manifest(c, {c.output_path});
    out << "wrote " << c.output_path << " (" << grid->size() << " nodes, delta " << c.delta
        << ", seed " << c.seed << ")\n";
    return 0;
}

int cmd_locate_s(const RunConfig& c, std::ostream& out) {
    if (c.data_path.empty() || c.output_path.empty())
        throw std::runtime_error("locate-s needs --data and --out");
    const IncidentWave wave = wave_for(c);
    const TangentField data = load_tangent_field(c.data_path);
    const SamplingMesh mesh = mesh_from(c);
    const double min_sep = c.min_sep > 0.0 ? c.min_sep : 0.5 * wave.wavelength();

    IndicatorField field = indicator_s(data, wave, mesh);
    normalize_indicator(field);
    PeakList peaks = find_peaks(field, c.threshold, min_sep);
    if (c.refine)
        for (auto& p : peaks.peaks) p.location = refine_peak_s(data, wave, p.location, mesh.h);

    const std::string vtk = c.output_path + ".vtk";
    const std::string csv = c.output_path + ".csv";
    const std::string pk = c.output_path + "_peaks.csv";
    write_vtk(vtk, field);
    write_indicator_csv(csv, field);
    write_peaks_csv(pk, peaks);
    write_manifest(c, {vtk, csv, pk});
    print_peaks(out, peaks);
    return 0;
}

int cmd_locate_r(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.data_path.empty() || c.library_path.empty() || c.output_path.empty())
        throw std::runtime_error("locate-r needs --data, --library and --out");
    LoadedLibrary loaded = load_reference_library(c.library_path);
    if (loaded.lib.entries.empty()) throw std::runtime_error("reference library is empty");
    loaded.lib = order_references(std::move(loaded.lib));
    const auto report = check_distinctness(loaded.lib, c.tol);
    if (!report.ok)
        err << "warning: reference library violates the distinctness assumption at tol " << c.tol
            << "; proceeding\n";

    const TangentField data =
        load_tangent_field(c.data_path, loaded.lib.entries.front().farfield.grid);
    const SamplingMesh mesh = mesh_from(c);
    SchemeRResult result = scheme_r(data, loaded.lib, loaded.wave, mesh, c.eps_accept, c.min_sep);
    if (c.refine) {
        for (auto& p : result.peaks.peaks) {
            const auto it = std::find_if(loaded.lib.entries.begin(), loaded.lib.entries.end(),
                                         [&](const ReferenceEntry& e) {
                                             return p.reference_id && e.id == *p.reference_id;
                                         });
            if (it != loaded.lib.entries.end())
                p.location = refine_peak_r(data, *it, loaded.wave, p.location, mesh.h);
        }
    }

    std::vector<std::string> outputs;
    for (std::size_t k = 0; k < result.passes.size(); ++k) {
        const auto& pass = result.passes[k];
        const std::string stem =
            c.output_path + "_pass" + std::to_string(k + 1) + "_" + pass.reference_id;
        write_vtk(stem + ".vtk", pass.field);
        write_indicator_csv(stem + ".csv", pass.field);
        outputs.push_back(stem + ".vtk");
        outputs.push_back(stem + ".csv");
        out << "pass " << (k + 1) << " (" << pass.reference_id << "): "
            << pass.accepted.peaks.size() << " detection(s)\n";
    }
    const std::string pk = c.output_path + "_peaks.csv";
    write_peaks_csv(pk, result.peaks);
    outputs.push_back(pk);
    write_manifest(c, outputs);
    print_peaks(out, result.peaks);
    return 0;
}

int cmd_refgen(const RunConfig& c, std::ostream& out) {
    if (c.library_path.empty() || c.output_path.empty())
        throw std::runtime_error("refgen needs --library (description) and --out (index)");
    const auto entries = load_library_description(c.library_path);
    const IncidentWave wave = wave_for(c);
    const auto grid = make_lebedev(c.n_lebedev);
    const ReferenceLibrary lib = build_reference_library(entries, wave, grid);
    save_reference_library(c.output_path, lib, wave, c.n_lebedev);
    write_manifest(c, {c.output_path});
    out << "library of " << lib.entries.size() << " reference pattern(s), ordered by norm:\n";
    for (const auto& e : lib.entries)
        out << "  " << e.id << "  norm " << e.norm << "  trim radius " << e.trim_radius << "\n";
    return 0;
}

int cmd_check_lib(const RunConfig& c, std::ostream& out) {
    if (c.library_path.empty()) throw std::runtime_error("check-lib needs --library");
    const LoadedLibrary loaded = load_reference_library(c.library_path);
    const auto report = check_distinctness(loaded.lib, c.tol);
    out << "distinctness report (tol " << c.tol << "):\n";
    for (const auto& pr : report.pairs) {
        out << "  " << loaded.lib.entries[pr.first].id << " vs "
            << loaded.lib.entries[pr.second].id << ": relative distance " << pr.rel_distance
            << (pr.flagged ? "  VIOLATION" : "") << "\n";
    }
    if (report.pairs.empty()) out << "  single-entry library, nothing to compare\n";
    out << (report.ok ? "library satisfies the distinctness assumption\n"
                      : "library VIOLATES the distinctness assumption\n");
    return 0;
}

int cmd_composite(const RunConfig& c, std::ostream& out) {
    if (c.field_paths.size() < 1 || c.output_path.empty())
        throw std::runtime_error("composite needs --fields (VTK inputs) and --out");
    std::vector<IndicatorField> fields;
    for (const auto& path : c.field_paths) fields.push_back(read_vtk(path));
    const IndicatorField combined = composite_indicator(fields);
    const std::string vtk = c.output_path + ".vtk";
    const std::string csv = c.output_path + ".csv";
    write_vtk(vtk, combined);
    write_indicator_csv(csv, combined);
    write_manifest(c, {vtk, csv});
    out << "combined " << fields.size() << " field(s) into " << vtk << "\n";
    return 0;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "synthesize") return cmd_synthesize(config, out);
        if (config.command == "locate-s") return cmd_locate_s(config, out);
        if (config.command == "locate-r") return cmd_locate_r(config, out, err);
        if (config.command == "refgen") return cmd_refgen(config, out);
        if (config.command == "check-lib") return cmd_check_lib(config, out);
        if (config.command == "composite") return cmd_composite(config, out);
        throw std::runtime_error("unknown command: " + config.command);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace farloc::cli
