#include "farloc/tangent_field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace farloc {

TangentField::TangentField(std::shared_ptr<const SphereGrid> g, std::vector<CVec3> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid->size())
        throw std::invalid_argument("TangentField: value count does not match grid size");
}

bool same_grid(const TangentField& u, const TangentField& v) {
    if (u.grid == v.grid) return true;
    if (!u.grid || !v.grid || u.grid->size() != v.grid->size()) return false;
    for (std::size_t k = 0; k < u.grid->size(); ++k) {
        if (norm(u.grid->nodes[k] - v.grid->nodes[k]) > 1e-14) return false;
    }
    return true;
}

Complex t2_inner(const TangentField& u, const TangentField& v) {
    if (!same_grid(u, v)) throw std::invalid_argument("t2_inner: fields live on different grids");
    Complex acc{0.0, 0.0};
    const auto& w = u.grid->weights;
    for (std::size_t k = 0; k < u.values.size(); ++k) acc += w[k] * cdot(u.values[k], v.values[k]);
    return acc;
}

double t2_norm(const TangentField& u) {
    double acc = 0.0;
    const auto& w = u.grid->weights;
    for (std::size_t k = 0; k < u.values.size(); ++k) acc += w[k] * abs2(u.values[k]);
    return std::sqrt(acc);
}

double max_abs(const TangentField& u) {
    double m = 0.0;
    for (const auto& v : u.values) m = std::max(m, abs2(v));
    return std::sqrt(m);
}

double max_normal_fraction(const TangentField& u) {
    const double m = max_abs(u);
    if (m == 0.0) return 0.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < u.values.size(); ++k) {
        worst = std::max(worst, std::abs(dot(u.values[k], u.grid->nodes[k])));
    }
    return worst / m;
}

TangentField operator+(const TangentField& a, const TangentField& b) {
    if (!same_grid(a, b)) throw std::invalid_argument("TangentField +: mismatched grids");
    TangentField out(a.grid);
    for (std::size_t k = 0; k < a.values.size(); ++k) out.values[k] = a.values[k] + b.values[k];
    return out;
}

TangentField operator*(const Complex& s, const TangentField& a) {
    TangentField out(a.grid);
    for (std::size_t k = 0; k < a.values.size(); ++k) out.values[k] = s * a.values[k];
    return out;
}

namespace {

void format_row(std::ostream& os, const Vec3& n, const CVec3& v) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%.17g %.17g %.17g %.17g %.17g %.17g %.17g %.17g %.17g\n", n.x, n.y, n.z,
                  v.x.real(), v.x.imag(), v.y.real(), v.y.imag(), v.z.real(), v.z.imag());
    os << buf;
}

} // namespace

void write_tangent_field(std::ostream& os, const TangentField& f) {
    for (std::size_t k = 0; k < f.values.size(); ++k)
        format_row(os, f.grid->nodes[k], f.values[k]);
}

void save_tangent_field(const std::string& path, const TangentField& f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_tangent_field(os, f);
    if (!os) throw std::runtime_error("write failed: " + path);
}

TangentField read_tangent_field(std::istream& is, std::shared_ptr<const SphereGrid> grid) {
    TangentField f(std::move(grid));
    std::string line;
    std::size_t k = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (k >= f.grid->size()) throw std::runtime_error("tangent field file has too many rows");
        std::istringstream row(line);
        Vec3 n;
        double re[3], im[3];
        if (!(row >> n.x >> n.y >> n.z >> re[0] >> im[0] >> re[1] >> im[1] >> re[2] >> im[2]))
            throw std::runtime_error("malformed tangent field row: " + line);
        if (norm(n - f.grid->nodes[k]) > 1e-12)
            throw std::runtime_error("tangent field node does not match the quadrature grid");
        f.values[k] = {{re[0], im[0]}, {re[1], im[1]}, {re[2], im[2]}};
        ++k;
    }
    if (k != f.grid->size()) throw std::runtime_error("tangent field file has too few rows");
    return f;
}

TangentField load_tangent_field(const std::string& path, std::shared_ptr<const SphereGrid> grid) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_tangent_field(is, std::move(grid));
}

TangentField load_tangent_field(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::size_t rows = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    const auto& sizes = supported_lebedev_sizes();
    if (std::find(sizes.begin(), sizes.end(), static_cast<int>(rows)) == sizes.end())
        throw std::runtime_error("row count " + std::to_string(rows) +
                                 " does not match any supported Lebedev rule");
    is.clear();
    is.seekg(0);
    return read_tangent_field(is, make_lebedev(static_cast<int>(rows)));
}

} // namespace farloc
