#include "farloc/exports.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace farloc {

namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_vtk(const std::string& path, const IndicatorField& field,
               const std::string& array_name) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    const auto& m = field.mesh;
    os << "# vtk DataFile Version 3.0\n";
    os << "farloc indicator field\n";
    os << "ASCII\n";
    os << "DATASET STRUCTURED_POINTS\n";
    os << "DIMENSIONS " << m.nx << " " << m.ny << " " << m.nz << "\n";
    os << "ORIGIN " << num17(m.lower.x) << " " << num17(m.lower.y) << " " << num17(m.lower.z)
       << "\n";
    os << "SPACING " << num17(m.h) << " " << num17(m.h) << " " << num17(m.h) << "\n";
    os << "POINT_DATA " << field.values.size() << "\n";
    os << "SCALARS " << array_name << " double 1\n";
    os << "LOOKUP_TABLE default\n";
    for (std::size_t idx = 0; idx < field.values.size(); ++idx) {
        os << num17(field.values[idx]);
        os << (((idx + 1) % 6 == 0) ? '\n' : ' ');
    }
    if (field.values.size() % 6 != 0) os << "\n";
    if (!os) throw std::runtime_error("write failed: " + path);
}

IndicatorField read_vtk(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);

    int nx = 0, ny = 0, nz = 0;
    Vec3 origin;
    double hx = 0, hy = 0, hz = 0;
    std::size_t n_points = 0;
    bool structured = false;

    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "DATASET") {
            std::string kind;
            ls >> kind;
            structured = (kind == "STRUCTURED_POINTS");
        } else if (key == "DIMENSIONS") {
            ls >> nx >> ny >> nz;
        } else if (key == "ORIGIN") {
            ls >> origin.x >> origin.y >> origin.z;
        } else if (key == "SPACING") {
            ls >> hx >> hy >> hz;
        } else if (key == "POINT_DATA") {
            ls >> n_points;
        } else if (key == "LOOKUP_TABLE") {
            break;
        }
    }
    if (!structured || nx < 1 || ny < 1 || nz < 1 || !(hx > 0))
        throw std::runtime_error("not a structured-points VTK file: " + path);
    if (std::abs(hx - hy) > 1e-12 || std::abs(hx - hz) > 1e-12)
        throw std::runtime_error("anisotropic spacing not supported: " + path);
    if (n_points != static_cast<std::size_t>(nx) * ny * nz)
        throw std::runtime_error("POINT_DATA count does not match DIMENSIONS: " + path);

    IndicatorField field;
    field.mesh = SamplingMesh::from_counts(origin, hx, nx, ny, nz);
    field.values.resize(n_points);
    for (std::size_t idx = 0; idx < n_points; ++idx) {
        if (!(is >> field.values[idx]))
            throw std::runtime_error("truncated VTK scalar data: " + path);
    }
    double peak = 0.0;
    for (double v : field.values) peak = std::max(peak, v);
    field.normalized = peak <= 1.0 + 1e-12;
    return field;
}

void write_indicator_csv(const std::string& path, const IndicatorField& field) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << "x,y,z,value\n";
    const auto& m = field.mesh;
    for (int k = 0; k < m.nz; ++k)
        for (int j = 0; j < m.ny; ++j)
            for (int i = 0; i < m.nx; ++i) {
                const Vec3 p = m.node(i, j, k);
                os << num17(p.x) << "," << num17(p.y) << "," << num17(p.z) << ","
                   << num17(field.values[m.index(i, j, k)]) << "\n";
            }
    if (!os) throw std::runtime_error("write failed: " + path);
}

void write_peaks_csv(const std::string& path, const PeakList& peaks) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << "x,y,z,value,reference_id\n";
    for (const auto& p : peaks.peaks) {
        os << num17(p.location.x) << "," << num17(p.location.y) << "," << num17(p.location.z)
           << "," << num17(p.value) << "," << p.reference_id.value_or("") << "\n";
    }
    if (!os) throw std::runtime_error("write failed: " + path);
}

} // namespace farloc
