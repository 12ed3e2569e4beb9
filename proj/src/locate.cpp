#include "farloc/locate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "farloc/vsh.hpp"

namespace farloc {

SamplingMesh::SamplingMesh(const Vec3& lo, const Vec3& hi, double spacing)
    : lower(lo), upper(hi), h(spacing) {
    if (!(h > 0.0)) throw std::invalid_argument("SamplingMesh: spacing must be > 0");
    if (!(upper.x > lower.x) || !(upper.y > lower.y) || !(upper.z > lower.z))
        throw std::invalid_argument("SamplingMesh: upper must exceed lower component-wise");
    // guard the count against spacing values that are not exact binary fractions
    nx = static_cast<int>(std::floor((upper.x - lower.x) / h + 1e-9)) + 1;
    ny = static_cast<int>(std::floor((upper.y - lower.y) / h + 1e-9)) + 1;
    nz = static_cast<int>(std::floor((upper.z - lower.z) / h + 1e-9)) + 1;
}

SamplingMesh SamplingMesh::from_counts(const Vec3& lo, double spacing, int nx_, int ny_, int nz_) {
    if (!(spacing > 0.0) || nx_ < 1 || ny_ < 1 || nz_ < 1)
        throw std::invalid_argument("SamplingMesh: bad spacing or node counts");
    SamplingMesh m;
    m.lower = lo;
    m.h = spacing;
    m.nx = nx_;
    m.ny = ny_;
    m.nz = nz_;
    m.upper = {lo.x + (nx_ - 1) * spacing, lo.y + (ny_ - 1) * spacing, lo.z + (nz_ - 1) * spacing};
    return m;
}

bool SamplingMesh::same_as(const SamplingMesh& o) const {
    return nx == o.nx && ny == o.ny && nz == o.nz && std::abs(h - o.h) < 1e-12 &&
           norm(lower - o.lower) < 1e-12;
}

void normalize_indicator(IndicatorField& field) {
    double peak = 0.0;
    for (double v : field.values) peak = std::max(peak, v);
    if (peak > 0.0)
        for (double& v : field.values) v /= peak;
    field.normalized = true;
}

namespace {

// ---------------------------------------------------------------------------
// Phase-sweep engine
//
// For every mesh node z evaluate s_m(z) = sum_k g_m[k] e^{i omega theta_k . z}
// for a handful of per-quadrature-node profiles g_m. The plane-wave phase
// factorizes per axis, so each node costs three table lookups and complex
// multiply-accumulates. Output nodes are written by exactly one thread and in
// a fixed summation order, so results do not depend on the schedule.
// ---------------------------------------------------------------------------

struct AxisTable {
    std::vector<double> re, im; // [i * K + k]
};

AxisTable build_axis_table(const SphereGrid& grid, double omega, double origin, double h, int n,
                           double Vec3::* comp) {
    const std::size_t K = grid.size();
    AxisTable t;
    t.re.resize(static_cast<std::size_t>(n) * K);
    t.im.resize(static_cast<std::size_t>(n) * K);
    for (int i = 0; i < n; ++i) {
        const double coord = origin + i * h;
        for (std::size_t k = 0; k < K; ++k) {
            const double arg = omega * (grid.nodes[k].*comp) * coord;
            t.re[i * K + k] = std::cos(arg);
            t.im[i * K + k] = std::sin(arg);
        }
    }
    return t;
}

// reduce(sums) -> scalar, sums = array of M complex accumulators
template <typename Reduce>
std::vector<double> sweep(const SphereGrid& grid, double omega, const SamplingMesh& mesh,
                          const std::vector<std::vector<Complex>>& profiles, Reduce reduce) {
    const std::size_t K = grid.size();
    const std::size_t M = profiles.size();
    for (const auto& g : profiles)
        if (g.size() != K) throw std::invalid_argument("sweep: profile size mismatch");

    const AxisTable ax = build_axis_table(grid, omega, mesh.lower.x, mesh.h, mesh.nx, &Vec3::x);
    const AxisTable ay = build_axis_table(grid, omega, mesh.lower.y, mesh.h, mesh.ny, &Vec3::y);
    const AxisTable az = build_axis_table(grid, omega, mesh.lower.z, mesh.h, mesh.nz, &Vec3::z);

    std::vector<double> gr(M * K), gi(M * K);
    for (std::size_t m = 0; m < M; ++m)
        for (std::size_t k = 0; k < K; ++k) {
            gr[m * K + k] = profiles[m][k].real();
            gi[m * K + k] = profiles[m][k].imag();
        }

    std::vector<double> out(mesh.size());

    const auto run_slabs = [&](int l_begin, int l_end) {
        std::vector<double> cr(M * K), ci(M * K);
        std::vector<Complex> sums(M);
        for (int l = l_begin; l < l_end; ++l) {
            const double* zr = &az.re[static_cast<std::size_t>(l) * K];
            const double* zi = &az.im[static_cast<std::size_t>(l) * K];
            for (int j = 0; j < mesh.ny; ++j) {
                const double* yr = &ay.re[static_cast<std::size_t>(j) * K];
                const double* yi = &ay.im[static_cast<std::size_t>(j) * K];
                for (std::size_t m = 0; m < M; ++m) {
                    for (std::size_t k = 0; k < K; ++k) {
                        const double pr = yr[k] * zr[k] - yi[k] * zi[k];
                        const double pi = yr[k] * zi[k] + yi[k] * zr[k];
                        cr[m * K + k] = gr[m * K + k] * pr - gi[m * K + k] * pi;
                        ci[m * K + k] = gr[m * K + k] * pi + gi[m * K + k] * pr;
                    }
                }
                for (int i = 0; i < mesh.nx; ++i) {
                    const double* xr = &ax.re[static_cast<std::size_t>(i) * K];
                    const double* xi = &ax.im[static_cast<std::size_t>(i) * K];
                    for (std::size_t m = 0; m < M; ++m) {
                        double sr = 0.0, si = 0.0;
                        const double* mr = &cr[m * K];
                        const double* mi = &ci[m * K];
                        for (std::size_t k = 0; k < K; ++k) {
                            sr += mr[k] * xr[k] - mi[k] * xi[k];
                            si += mr[k] * xi[k] + mi[k] * xr[k];
                        }
                        sums[m] = {sr, si};
                    }
                    out[mesh.index(i, j, l)] = reduce(sums);
                }
            }
        }
    };

    unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, mesh.nz);
    if (n_threads <= 1) {
        run_slabs(0, mesh.nz);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (mesh.nz + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            const int b = static_cast<int>(t) * chunk;
            const int e = std::min(mesh.nz, b + chunk);
            if (b < e) pool.emplace_back(run_slabs, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

std::vector<Complex> weighted_profile(const TangentField& A, const TangentField& B) {
    std::vector<Complex> g(A.grid->size());
    for (std::size_t k = 0; k < g.size(); ++k)
        g[k] = A.grid->weights[k] * cdot(A.values[k], B.values[k]);
    return g;
}

} // namespace

IndicatorField indicator_s(const TangentField& A, const IncidentWave& wave,
                           const SamplingMesh& mesh) {
    const double norm_a = t2_norm(A);
    if (norm_a <= 0.0) throw std::invalid_argument("indicator_s: far field is identically zero");
    const double inv_norm2 = 1.0 / (norm_a * norm_a);

    std::vector<std::vector<Complex>> profiles;
    profiles.reserve(6);
    for (int mi = -1; mi <= 1; ++mi)
        profiles.push_back(weighted_profile(A, vsh_eval({1, mi, VshFamily::U}, A.grid)));
    for (int mi = -1; mi <= 1; ++mi)
        profiles.push_back(weighted_profile(A, vsh_eval({1, mi, VshFamily::V}, A.grid)));

    IndicatorField field;
    field.mesh = mesh;
    field.values = sweep(*A.grid, wave.omega, mesh, profiles, [&](const std::vector<Complex>& s) {
        double acc = 0.0;
        for (const auto& v : s) acc += std::norm(v);
        return acc * inv_norm2;
    });
    return field;
}

std::vector<double> k_values(const TangentField& total,
                             const std::vector<TangentField>& components) {
    const double norm_total = t2_norm(total);
    if (norm_total <= 0.0) throw std::invalid_argument("k_values: total far field is zero");
    std::vector<double> ks;
    ks.reserve(components.size());
    for (const auto& comp : components) {
        const double n = t2_norm(comp);
        ks.push_back((n * n) / (norm_total * norm_total));
    }
    return ks;
}

IndicatorField indicator_r(const TangentField& A, const ReferenceEntry& ref,
                           const IncidentWave& wave, const SamplingMesh& mesh) {
    if (!(ref.norm > 0.0)) throw std::invalid_argument("indicator_r: reference norm must be > 0");
    if (!same_grid(A, ref.farfield))
        throw std::invalid_argument("indicator_r: data and reference live on different grids");
    const double inv_norm2 = 1.0 / (ref.norm * ref.norm);

    std::vector<std::vector<Complex>> profiles{weighted_profile(A, ref.farfield)};
    IndicatorField field;
    field.mesh = mesh;
    field.values = sweep(*A.grid, wave.omega, mesh, profiles,
                         [&](const std::vector<Complex>& s) { return std::abs(s[0]) * inv_norm2; });
    return field;
}

IndicatorField deviation_from_one(const IndicatorField& field) {
    IndicatorField out;
    out.mesh = field.mesh;
    out.values.reserve(field.values.size());
    for (double v : field.values) out.values.push_back(std::abs(v - 1.0));
    out.normalized = false;
    return out;
}

ReferenceLibrary order_references(ReferenceLibrary lib) {
    std::stable_sort(lib.entries.begin(), lib.entries.end(),
                     [](const ReferenceEntry& a, const ReferenceEntry& b) { return a.norm > b.norm; });
    return lib;
}

DistinctnessReport check_distinctness(const ReferenceLibrary& lib, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("check_distinctness: tol must be > 0");
    DistinctnessReport report;
    report.tol = tol;
    for (std::size_t i = 0; i < lib.entries.size(); ++i) {
        for (std::size_t j = i + 1; j < lib.entries.size(); ++j) {
            const auto& fi = lib.entries[i].farfield;
            const auto& fj = lib.entries[j].farfield;
            TangentField diff(fi.grid);
            for (std::size_t k = 0; k < diff.values.size(); ++k)
                diff.values[k] = fi.values[k] - fj.values[k];
            const double scale = std::max(t2_norm(fi), t2_norm(fj));
            const double rel = scale > 0.0 ? t2_norm(diff) / scale : 0.0;
            const bool flagged = rel < tol;
            report.pairs.push_back({i, j, rel, flagged});
            if (flagged) report.ok = false;
        }
    }
    return report;
}

namespace {

struct Candidate {
    int i, j, k;
    double value;
};

bool candidate_before(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    return std::tuple(a.i, a.j, a.k) < std::tuple(b.i, b.j, b.k);
}

// strict maximum over the (up to) 26 neighbors that satisfy `considered`
template <typename Considered>
std::vector<Candidate> local_maxima(const IndicatorField& field, double threshold,
                                    Considered considered) {
    std::vector<Candidate> cands;
    const auto& mesh = field.mesh;
    for (int k = 0; k < mesh.nz; ++k) {
        for (int j = 0; j < mesh.ny; ++j) {
            for (int i = 0; i < mesh.nx; ++i) {
                if (!considered(mesh.index(i, j, k))) continue;
                const double v = field.values[mesh.index(i, j, k)];
                if (v < threshold) continue;
                bool is_max = true;
                for (int dk = -1; dk <= 1 && is_max; ++dk) {
                    for (int dj = -1; dj <= 1 && is_max; ++dj) {
                        for (int di = -1; di <= 1 && is_max; ++di) {
                            if (di == 0 && dj == 0 && dk == 0) continue;
                            const int ii = i + di, jj = j + dj, kk = k + dk;
                            if (ii < 0 || jj < 0 || kk < 0 || ii >= mesh.nx || jj >= mesh.ny ||
                                kk >= mesh.nz)
                                continue;
                            const std::size_t nidx = mesh.index(ii, jj, kk);
                            if (!considered(nidx)) continue;
                            if (field.values[nidx] >= v) is_max = false;
                        }
                    }
                }
                if (is_max) cands.push_back({i, j, k, v});
            }
        }
    }
    std::sort(cands.begin(), cands.end(), candidate_before);
    return cands;
}

PeakList suppress(const std::vector<Candidate>& cands, const SamplingMesh& mesh, double min_sep) {
    PeakList out;
    for (const auto& c : cands) {
        const Vec3 loc = mesh.node(c.i, c.j, c.k);
        bool keep = true;
        for (const auto& p : out.peaks) {
            if (norm(p.location - loc) < min_sep) {
                keep = false;
                break;
            }
        }
        if (keep) out.peaks.push_back({loc, c.value, std::nullopt});
    }
    return out;
}

} // namespace

PeakList find_peaks(const IndicatorField& field, double threshold, double min_sep) {
    if (!field.normalized)
        throw std::invalid_argument("find_peaks: field must be normalized to [0,1]");
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw std::invalid_argument("find_peaks: threshold must lie in (0,1)");
    if (min_sep < field.mesh.h)
        throw std::invalid_argument("find_peaks: min_sep must be at least the mesh spacing");
    const auto cands = local_maxima(field, threshold, [](std::size_t) { return true; });
    return suppress(cands, field.mesh, min_sep);
}

PeakList scheme_s(const TangentField& A, const IncidentWave& wave, const SamplingMesh& mesh,
                  double threshold, double min_sep) {
    if (min_sep <= 0.0) min_sep = 0.5 * wave.wavelength();
    IndicatorField field = indicator_s(A, wave, mesh);
    normalize_indicator(field);
    return find_peaks(field, threshold, min_sep);
}

SchemeRResult scheme_r(const TangentField& A, const ReferenceLibrary& lib,
                       const IncidentWave& wave, const SamplingMesh& mesh, double eps_accept,
                       double min_sep) {
    if (min_sep <= 0.0) min_sep = 0.5 * wave.wavelength();
    for (std::size_t i = 1; i < lib.entries.size(); ++i)
        if (lib.entries[i - 1].norm < lib.entries[i].norm)
            throw std::invalid_argument(
                "scheme_r: library must be ordered by nonincreasing norm (order_references)");

    SchemeRResult result;
    std::vector<char> active(mesh.size(), 1);
    std::size_t n_active = mesh.size();

    for (const auto& ref : lib.entries) {
        if (n_active == 0) break;
        const IndicatorField raw = indicator_r(A, ref, wave, mesh);

        // plot normalization uses the max over the region active this pass
        double pass_max = 0.0;
        for (std::size_t idx = 0; idx < mesh.size(); ++idx)
            if (active[idx]) pass_max = std::max(pass_max, raw.values[idx]);

        // detections: active local maxima of the raw matched filter with
        // value within eps_accept of 1 (Cauchy-Schwarz equality at a match)
        auto cands = local_maxima(raw, 0.0, [&](std::size_t idx) { return active[idx] != 0; });
        std::erase_if(cands,
                      [&](const Candidate& c) { return std::abs(c.value - 1.0) > eps_accept; });
        PeakList accepted = suppress(cands, mesh, min_sep);
        for (auto& p : accepted.peaks) p.reference_id = ref.id;

        SchemeRPass pass;
        pass.reference_id = ref.id;
        pass.field.mesh = mesh;
        pass.field.values.resize(mesh.size());
        for (std::size_t idx = 0; idx < mesh.size(); ++idx)
            pass.field.values[idx] = (active[idx] && pass_max > 0.0) ? raw.values[idx] / pass_max : 0.0;
        pass.field.normalized = true;
        pass.accepted = accepted;

        // trim the detected components (plus margin) from the active region
        for (const auto& p : accepted.peaks) {
            for (int k = 0; k < mesh.nz; ++k)
                for (int j = 0; j < mesh.ny; ++j)
                    for (int i = 0; i < mesh.nx; ++i) {
                        const std::size_t idx = mesh.index(i, j, k);
                        if (active[idx] && norm(mesh.node(i, j, k) - p.location) <= ref.trim_radius) {
                            active[idx] = 0;
                            --n_active;
                        }
                    }
        }

        result.passes.push_back(std::move(pass));
        for (const auto& p : accepted.peaks) result.peaks.peaks.push_back(p);
    }
    return result;
}

IndicatorField composite_indicator(const std::vector<IndicatorField>& fields) {
    if (fields.empty()) throw std::invalid_argument("composite_indicator: no fields");
    for (const auto& f : fields)
        if (!f.mesh.same_as(fields.front().mesh))
            throw std::invalid_argument("composite_indicator: fields live on different meshes");
    IndicatorField out = fields.front();
    for (std::size_t fi = 1; fi < fields.size(); ++fi)
        for (std::size_t idx = 0; idx < out.values.size(); ++idx)
            out.values[idx] = std::max(out.values[idx], fields[fi].values[idx]);
    out.normalized = std::all_of(fields.begin(), fields.end(),
                                 [](const IndicatorField& f) { return f.normalized; });
    return out;
}

double value_at(const IndicatorField& field, const Vec3& point) {
    const auto& mesh = field.mesh;
    const auto clamp_idx = [](double t, int n) {
        return std::clamp(static_cast<int>(std::lround(t)), 0, n - 1);
    };
    const int i = clamp_idx((point.x - mesh.lower.x) / mesh.h, mesh.nx);
    const int j = clamp_idx((point.y - mesh.lower.y) / mesh.h, mesh.ny);
    const int k = clamp_idx((point.z - mesh.lower.z) / mesh.h, mesh.nz);
    return field.values[mesh.index(i, j, k)];
}

namespace {

Vec3 argmax_location(const IndicatorField& field) {
    std::size_t best = 0;
    for (std::size_t idx = 1; idx < field.values.size(); ++idx)
        if (field.values[idx] > field.values[best]) best = idx;
    const auto& mesh = field.mesh;
    const int i = static_cast<int>(best % mesh.nx);
    const int j = static_cast<int>((best / mesh.nx) % mesh.ny);
    const int k = static_cast<int>(best / (static_cast<std::size_t>(mesh.nx) * mesh.ny));
    return mesh.node(i, j, k);
}

} // namespace

Vec3 refine_peak_s(const TangentField& A, const IncidentWave& wave, const Vec3& peak,
                   double coarse_h, double fine_h) {
    const double half = 2.0 * coarse_h;
    const SamplingMesh fine({peak.x - half, peak.y - half, peak.z - half},
                            {peak.x + half, peak.y + half, peak.z + half}, fine_h);
    return argmax_location(indicator_s(A, wave, fine));
}

Vec3 refine_peak_r(const TangentField& A, const ReferenceEntry& ref, const IncidentWave& wave,
                   const Vec3& peak, double coarse_h, double fine_h) {
    const double half = 2.0 * coarse_h;
    const SamplingMesh fine({peak.x - half, peak.y - half, peak.z - half},
                            {peak.x + half, peak.y + half, peak.z + half}, fine_h);
    return argmax_location(indicator_r(A, ref, wave, fine));
}

} // namespace farloc
