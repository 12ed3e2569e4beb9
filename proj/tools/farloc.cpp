// farloc command-line front end: scene synthesis, reference-library
// generation, and the two single-measurement locating pipelines.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "farloc/cli.hpp"

namespace {

farloc::Vec3 parse_triplet(const std::string& s, const std::string& flag) {
    farloc::Vec3 v;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> v.x >> c1 >> v.y >> c2 >> v.z) || c1 != ',' || c2 != ',')
        throw CLI::ValidationError(flag, "expected x,y,z");
    return v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Far-field synthesis and single-measurement scatterer locating"};
    app.set_help_flag("--help", "print help"); // keep -h free for the mesh spacing flag
    app.set_version_flag("--version", farloc::cli::kVersion);
    app.require_subcommand(1);

    farloc::cli::RunConfig cfg;
    std::string mesh_min = "-2,-2,-2", mesh_max = "2,2,2";
    std::string theta_inc = "1,0,0", pol = "0,0,1";

    const auto subcommand = [&](const std::string& name, const std::string& desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->set_help_flag("--help", "print help");
        return cmd;
    };
    const auto add_wave_flags = [&](CLI::App* cmd) {
        cmd->add_option("--omega", cfg.wave.omega, "angular frequency (default 2*pi)");
        cmd->add_option("--theta-inc", theta_inc, "impinging direction x,y,z");
        cmd->add_option("--p", pol, "polarization x,y,z (p . theta_inc = 0)");
    };
    const auto add_mesh_flags = [&](CLI::App* cmd) {
        cmd->add_option("--mesh-min", mesh_min, "sampling box lower corner x,y,z");
        cmd->add_option("--mesh-max", mesh_max, "sampling box upper corner x,y,z");
        cmd->add_option("--h", cfg.h, "mesh spacing (default 0.05)");
    };

    auto* syn = subcommand("synthesize", "synthesize the far-field pattern of a scene");
    syn->add_option("--scene", cfg.scene_path, "scene JSON file")->required();
    syn->add_option("--out", cfg.output_path, "output far-field table")->required();
    syn->add_option("--lebedev", cfg.n_lebedev, "measurement rule size (default 590)");
    syn->add_option("--delta", cfg.delta, "relative noise level (default 0)");
    syn->add_option("--seed", cfg.seed, "noise seed (default 0)");

    auto* ls = subcommand("locate-s", "locate small scatterers from one measurement");
    ls->add_option("--data", cfg.data_path, "measured far-field table")->required();
    ls->add_option("--out", cfg.output_path, "output prefix")->required();
    ls->add_option("--scene", cfg.scene_path, "scene JSON supplying the wave parameters");
    ls->add_option("--threshold", cfg.threshold, "peak cut-off (default 0.7)");
    ls->add_option("--min-sep", cfg.min_sep, "peak separation (default half wavelength)");
    ls->add_flag("--refine", cfg.refine, "refine peaks locally at h = 0.01");
    add_mesh_flags(ls);
    add_wave_flags(ls);

    auto* lr = subcommand("locate-r", "locate regular-size scatterers via a library");
    lr->add_option("--data", cfg.data_path, "measured far-field table")->required();
    lr->add_option("--library", cfg.library_path, "library index JSON (from refgen)")->required();
    lr->add_option("--out", cfg.output_path, "output prefix")->required();
    lr->add_option("--eps-accept", cfg.eps_accept, "acceptance band |I_r - 1| (default 0.2)");
    lr->add_option("--min-sep", cfg.min_sep, "peak separation (default half wavelength)");
    lr->add_option("--tol", cfg.tol, "distinctness tolerance (default 1e-3)");
    lr->add_flag("--refine", cfg.refine, "refine peaks locally at h = 0.01");
    add_mesh_flags(lr);

    auto* rg = subcommand("refgen", "compute and store reference far fields");
    rg->add_option("--library", cfg.library_path, "library description JSON")->required();
    rg->add_option("--out", cfg.output_path, "output library index JSON")->required();
    rg->add_option("--lebedev", cfg.n_lebedev, "measurement rule size (default 590)");
    rg->add_option("--scene", cfg.scene_path, "scene JSON supplying the wave parameters");
    add_wave_flags(rg);

    auto* ck = subcommand("check-lib", "verify the library distinctness assumption");
    ck->add_option("--library", cfg.library_path, "library index JSON")->required();
    ck->add_option("--tol", cfg.tol, "distinctness tolerance (default 1e-3)");

    auto* cp = subcommand("composite", "node-wise max of stored indicator fields");
    cp->add_option("--fields", cfg.field_paths, "input VTK files")->required();
    cp->add_option("--out", cfg.output_path, "output prefix")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.mesh_min = parse_triplet(mesh_min, "--mesh-min");
        cfg.mesh_max = parse_triplet(mesh_max, "--mesh-max");
        cfg.wave.theta_inc = farloc::normalized(parse_triplet(theta_inc, "--theta-inc"));
        cfg.wave.p = parse_triplet(pol, "--p");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    for (auto* cmd : {syn, ls, lr, rg, ck, cp}) {
        if (cmd->parsed()) {
            cfg.command = cmd->get_name();
            break;
        }
    }
    return farloc::cli::run(cfg, std::cout, std::cerr);
}
