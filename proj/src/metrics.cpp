#include "monostat/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "monostat/errors.hpp"
#include "monostat/geometry.hpp"

namespace monostat {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool flat(const HeightField& field) {
    return field.h_range < 1e-12 * std::max(1.0, field.h_max);
}

} // namespace

double self_righting_energy(const HeightField& field) {
    if (flat(field)) return 0.0;
    double sum = 0.0;
    for (double h : field.h) sum += h - field.h_min;
    return sum / static_cast<double>(field.h.size());
}

double steepness(const HeightField& field) {
    if (flat(field)) return 0.0;
    const auto& dirs = *field.dirs;
    double sum = 0.0;
    long edges = 0;
    for (int i = 0; i < dirs.size(); ++i) {
        for (int j : dirs.knn[i]) {
            if (j <= i) continue;
            double arc = std::acos(
                std::clamp(dot(dirs.directions[i], dirs.directions[j]), -1.0, 1.0));
            if (arc <= 0.0) continue;
            sum += std::abs(field.h[i] - field.h[j]) / arc;
            ++edges;
        }
    }
    return edges > 0 ? sum / static_cast<double>(edges) : 0.0;
}

MetricsReport compute_metrics(const HeightField& field, const TriMesh& mesh) {
    MetricsReport m;
    m.h_range = flat(field) ? 0.0 : field.h_range;
    m.sre = self_righting_energy(field);
    m.steepness = steepness(field);
    m.asymmetry = asymmetry(mesh);
    if (!flat(field)) {
        const Vec3& dmin = field.dirs->directions[field.argmin];
        const Vec3& dmax = field.dirs->directions[field.argmax];
        m.su_angle_deg = std::acos(std::clamp(dot(dmin, dmax), -1.0, 1.0)) * 180.0 / kPi;
    }
    return m;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 3)
        throw Error("pearson: need at least 3 paired samples");
    const double n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double da = a[i] - ma, db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0) throw Error("pearson: zero variance");
    return sab / std::sqrt(saa * sbb);
}

double tradeoff_correlation(const std::vector<MetricsReport>& entries) {
    std::vector<double> h, s;
    for (const auto& e : entries) {
        h.push_back(e.h_range);
        s.push_back(e.sre);
    }
    return pearson(h, s);
}

} // namespace monostat
