#ifndef FARLOC_LOCATE_HPP
#define FARLOC_LOCATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "farloc/tangent_field.hpp"
#include "farloc/vec3.hpp"
#include "farloc/wave.hpp"

namespace farloc {

/// Regular cubic sampling mesh over [lower, upper] with spacing h; node count
/// per axis is floor((upper-lower)/h) + 1. Values are stored x-fastest.
struct SamplingMesh {
    Vec3 lower{-2.0, -2.0, -2.0};
    Vec3 upper{2.0, 2.0, 2.0};
    double h = 0.05;

    SamplingMesh() = default;
    SamplingMesh(const Vec3& lo, const Vec3& hi, double spacing);
    static SamplingMesh from_counts(const Vec3& lo, double spacing, int nx, int ny, int nz);

    int nx = 81, ny = 81, nz = 81;
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny * nz; }
    std::size_t index(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(nx) * (j + static_cast<std::size_t>(ny) * k);
    }
    Vec3 node(int i, int j, int k) const {
        return {lower.x + i * h, lower.y + j * h, lower.z + k * h};
    }

    bool same_as(const SamplingMesh& o) const;
};

/// Scalar indicator values on a sampling mesh.
struct IndicatorField {
    SamplingMesh mesh;
    std::vector<double> values;
    bool normalized = false;
};

/// Rescale to [0, 1] with max = 1 (no-op on an identically zero field).
void normalize_indicator(IndicatorField& field);

struct ReferenceEntry {
    std::string id;
    TangentField farfield;
    double norm = 0.0;
    double trim_radius = 0.0;
};

/// Admissible reference scatterers with precomputed far-field patterns,
/// ordered by nonincreasing norm for the recursive scheme.
struct ReferenceLibrary {
    std::vector<ReferenceEntry> entries;
};

struct Peak {
    Vec3 location;
    double value = 0.0;
    std::optional<std::string> reference_id;
};

struct PeakList {
    std::vector<Peak> peaks;
};

/// Small-scatterer indicator: at each mesh node z,
///   I_s(z) = sum_m |<A, e^{i w (d - theta) . z} U_1^m>|^2
///          + |<A, e^{i w (d - theta) . z} V_1^m>|^2, divided by ||A||^2.
/// Un-normalized values; throws on a zero far field.
IndicatorField indicator_s(const TangentField& A, const IncidentWave& wave,
                           const SamplingMesh& mesh);

/// K^j = ||A_j||^2 / ||A_total||^2 for each component pattern.
std::vector<double> k_values(const TangentField& total, const std::vector<TangentField>& components);

/// Regular-size indicator for one reference:
///   I_r(z) = |<A, e^{i w (d - theta) . z} A_ref>| / ||A_ref||^2.
IndicatorField indicator_r(const TangentField& A, const ReferenceEntry& ref,
                           const IncidentWave& wave, const SamplingMesh& mesh);

/// Companion field |I_r(z) - 1|, whose minima mark matched references.
IndicatorField deviation_from_one(const IndicatorField& field);

/// Sort entries by nonincreasing norm (stable).
ReferenceLibrary order_references(ReferenceLibrary lib);

/// Pairwise relative T^2 distances between library patterns; pairs below tol
/// violate the generic distinctness assumption.
struct DistinctnessReport {
    struct PairDistance {
        std::size_t first = 0, second = 0;
        double rel_distance = 0.0;
        bool flagged = false;
    };
    std::vector<PairDistance> pairs;
    double tol = 0.0;
    bool ok = true;
};

DistinctnessReport check_distinctness(const ReferenceLibrary& lib, double tol);

/// Strict 26-neighborhood maxima with value >= threshold, thinned by greedy
/// non-maximum suppression at radius min_sep (larger value wins; exact ties
/// go to the lexicographically smaller node index). Requires a normalized
/// field.
PeakList find_peaks(const IndicatorField& field, double threshold, double min_sep);

/// Scheme S: normalize indicator_s over the mesh, then find_peaks. min_sep <= 0
/// selects the default half-wavelength separation.
PeakList scheme_s(const TangentField& A, const IncidentWave& wave, const SamplingMesh& mesh,
                  double threshold = 0.7, double min_sep = 0.0);

/// One Scheme R pass over the active mesh region, for inspection/export.
struct SchemeRPass {
    std::string reference_id;
    IndicatorField field; // normalized over the active region, 0 where trimmed
    PeakList accepted;
};

struct SchemeRResult {
    PeakList peaks; // all accepted detections with reference assignments
    std::vector<SchemeRPass> passes;
};

/// Scheme R: walk the ordered library; for each entry compute its indicator
/// over the active mesh, accept local maxima with |I_r(z) - 1| <= eps_accept
/// as components of that reference shape, trim a ball of the entry's trim
/// radius around each detection, and continue until the mesh is exhausted or
/// the entries run out. The library must be ordered (see order_references).
SchemeRResult scheme_r(const TangentField& A, const ReferenceLibrary& lib,
                       const IncidentWave& wave, const SamplingMesh& mesh,
                       double eps_accept = 0.2, double min_sep = 0.0);

/// Node-wise maximum of indicator fields on a common mesh.
IndicatorField composite_indicator(const std::vector<IndicatorField>& fields);

/// Value at the mesh node nearest to a point (for diagnostics).
double value_at(const IndicatorField& field, const Vec3& point);

/// Re-run indicator_s on a small box around a peak at a finer spacing and
/// return the refined argmax location.
Vec3 refine_peak_s(const TangentField& A, const IncidentWave& wave, const Vec3& peak,
                   double coarse_h, double fine_h = 0.01);

/// Same for indicator_r (argmax of the matched filter).
Vec3 refine_peak_r(const TangentField& A, const ReferenceEntry& ref, const IncidentWave& wave,
                   const Vec3& peak, double coarse_h, double fine_h = 0.01);

} // namespace farloc

#endif
