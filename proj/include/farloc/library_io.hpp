#ifndef FARLOC_LIBRARY_IO_HPP
#define FARLOC_LIBRARY_IO_HPP

#include <string>
#include <vector>

#include "farloc/forward.hpp"
#include "farloc/locate.hpp"

namespace farloc {

/// One admissible reference scatterer, before its far field is computed.
struct LibraryEntrySpec {
    std::string id;
    ShapeSpec shape;
    double trim_radius = -1.0; // < 0: shape diameter plus a quarter wavelength
};

/// Load the entries of a library description file (JSON).
std::vector<LibraryEntrySpec> load_library_description(const std::string& path);

/// Compute the reference far fields for a description, ordered by
/// nonincreasing norm. Default trim radius is diameter(Sigma_k) + lambda/4.
ReferenceLibrary build_reference_library(const std::vector<LibraryEntrySpec>& entries,
                                         const IncidentWave& wave,
                                         std::shared_ptr<const SphereGrid> grid);

/// Persist a computed library: an index JSON at index_path plus one far-field
/// table per entry next to it (entry id + ".ffp").
void save_reference_library(const std::string& index_path, const ReferenceLibrary& lib,
                            const IncidentWave& wave, int n_lebedev);

struct LoadedLibrary {
    ReferenceLibrary lib;
    IncidentWave wave;
    int n_lebedev = 590;
};

LoadedLibrary load_reference_library(const std::string& index_path);

} // namespace farloc

#endif
