#ifndef FARLOC_CLI_HPP
#define FARLOC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "farloc/vec3.hpp"
#include "farloc/wave.hpp"

namespace farloc::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Configuration for one CLI run. Defaults mirror the usual experimental
/// setup: unit wavelength (omega = 2 pi), polarization e3, incidence e1,
/// sampling domain [-2, 2]^3, 590-point measurement grid.
struct RunConfig {
    std::string command; // synthesize | locate-s | locate-r | refgen | check-lib | composite

    std::string scene_path;
    std::string library_path;
    std::string data_path;
    std::string output_path;
    std::vector<std::string> field_paths; // composite inputs

    Vec3 mesh_min{-2.0, -2.0, -2.0};
    Vec3 mesh_max{2.0, 2.0, 2.0};
    double h = 0.05;
    int n_lebedev = 590;
    double delta = 0.0;
    std::uint64_t seed = 0;
    double threshold = 0.7;
    double eps_accept = 0.2;
    double min_sep = 0.0; // 0: half a wavelength
    double tol = 1e-3;    // check-lib distinctness tolerance
    bool refine = false;  // local h = 0.01 refinement pass around peaks

    IncidentWave wave; // used when no scene/library supplies one
};

/// Execute one command; artifacts land on disk next to output_path, and a
/// manifest (config echo + version + seed) is written alongside them.
/// Returns 0 on success, nonzero after printing a one-line diagnostic.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace farloc::cli

#endif
