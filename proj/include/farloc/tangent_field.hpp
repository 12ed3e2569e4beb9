#ifndef FARLOC_TANGENT_FIELD_HPP
#define FARLOC_TANGENT_FIELD_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "farloc/sphere_grid.hpp"
#include "farloc/vec3.hpp"

namespace farloc {

/// Complex 3-vector field sampled on a sphere grid. Far-field patterns are
/// tangential (theta . v = 0 at every node); noisy data may carry a small
/// normal part, so tangentiality is a checkable property rather than a
/// construction-time constraint (see max_normal_fraction).
struct TangentField {
    std::shared_ptr<const SphereGrid> grid;
    std::vector<CVec3> values;

    TangentField() = default;
    explicit TangentField(std::shared_ptr<const SphereGrid> g)
        : grid(std::move(g)), values(grid->size()) {}
    TangentField(std::shared_ptr<const SphereGrid> g, std::vector<CVec3> v);
};

/// True when u and v are sampled on the same grid (same object, or identical
/// node sets to 1e-14).
bool same_grid(const TangentField& u, const TangentField& v);

/// <u,v> = sum_k w_k u(theta_k) . conj(v(theta_k)); conjugate-symmetric.
/// Throws std::invalid_argument on mismatched grids.
Complex t2_inner(const TangentField& u, const TangentField& v);

double t2_norm(const TangentField& u);

/// max over nodes of the Euclidean magnitude |v(theta)|.
double max_abs(const TangentField& u);

/// max_k |theta_k . v(theta_k)| / max_k |v(theta_k)|; 0 for the zero field.
double max_normal_fraction(const TangentField& u);

TangentField operator+(const TangentField& a, const TangentField& b);
TangentField operator*(const Complex& s, const TangentField& a);

/// Plain-text table, one row per node:
///   theta_x theta_y theta_z Re(vx) Im(vx) Re(vy) Im(vy) Re(vz) Im(vz)
/// whitespace-separated, 17 significant digits (lossless round trip).
void write_tangent_field(std::ostream& os, const TangentField& f);
void save_tangent_field(const std::string& path, const TangentField& f);

/// Read a field written by write_tangent_field onto the given grid; node
/// directions in the file must match the grid within 1e-12.
TangentField read_tangent_field(std::istream& is, std::shared_ptr<const SphereGrid> grid);
TangentField load_tangent_field(const std::string& path, std::shared_ptr<const SphereGrid> grid);

/// Read a field inferring the Lebedev rule from the row count.
TangentField load_tangent_field(const std::string& path);

} // namespace farloc

#endif
