#include "monostat/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "monostat/errors.hpp"
#include "monostat/geometry.hpp"

namespace monostat {

void RunConfig::validate() const {
    if (directions < 100) throw Error("config: directions must be >= 100");
    if (knn < 1) throw Error("config: knn must be positive");
    if (n_theta < 8 || n_phi < 16) throw Error("config: mesh resolution too low");
    if (thresholds.empty()) throw Error("config: need at least one threshold");
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw Error("config: thresholds must be ascending");
    for (double t : thresholds)
        if (!(t > 0.0 && t <= 0.5)) throw Error("config: thresholds must be in (0, 0.5]");
}

std::vector<CatalogEntry> builtin_catalog() {
    struct Row {
        Family family;
        int k;
        double beta, coeff;
        double h_range, sre, steep, asym, su;
    };
    // Type, beta, coeff, then the published metric columns in catalog order
    // (sorted by surface asymmetry).
    static const Row rows[13] = {
        {Family::RadialF3, 1, 0.008, 0.016, 0.020, 0.010, 0.008, 0.0041, 99.0},
        {Family::RadialF3, 1, 0.010, 0.011, 0.024, 0.012, 0.010, 0.0051, 99.0},
        {Family::RadialF3, 1, 0.005, 0.036, 0.034, 0.017, 0.013, 0.0060, 92.0},
        {Family::RadialF3, 1, 0.015, 0.011, 0.035, 0.018, 0.014, 0.0076, 99.0},
        {Family::RadialF4, 1, 0.015, 0.062, 0.039, 0.020, 0.016, 0.0098, 132.0},
        {Family::ExtendedPhase, 1, 0.023, 0.234, 0.051, 0.028, 0.023, 0.0113, 154.0},
        {Family::RadialF3, 1, 0.023, 0.023, 0.056, 0.029, 0.023, 0.0118, 98.0},
        {Family::RadialF3, 1, 0.023, 0.024, 0.056, 0.030, 0.023, 0.0118, 99.0},
        {Family::ExtendedPhase, 2, 0.032, 0.138, 0.064, 0.035, 0.029, 0.0160, 137.0},
        {Family::RadialF4, 1, 0.023, 0.129, 0.066, 0.036, 0.028, 0.0168, 57.0},
        {Family::RadialF4, 1, 0.023, 0.212, 0.083, 0.046, 0.035, 0.0211, 124.0},
        {Family::ExtendedPhase, 3, 0.052, -0.055, 0.099, 0.056, 0.047, 0.0259, 143.0},
        {Family::RadialF4, 1, 0.035, 0.274, 0.117, 0.067, 0.052, 0.0296, 124.0},
    };

    std::vector<CatalogEntry> out;
    out.reserve(13);
    for (int i = 0; i < 13; ++i) {
        CatalogEntry e;
        e.index = i + 1;
        e.spec.family = rows[i].family;
        e.spec.harmonic = rows[i].k;
        e.spec.beta = rows[i].beta;
        e.spec.coeff = rows[i].coeff;
        e.published = {rows[i].h_range, rows[i].sre, rows[i].steep, rows[i].asym,
                       rows[i].su};
        out.push_back(e);
    }
    return out;
}

void reproduce(CatalogEntry& entry, const RunConfig& config,
               std::shared_ptr<const DirectionSet> dirs, const CatalogTolerances& tol) {
    entry.reproduced = false;
    entry.error.clear();
    entry.verdicts.clear();
    try {
        TriMesh mesh = generate_mesh(entry.spec, config.n_theta, config.n_phi);
        HeightField field = height_field(mesh, dirs);
        entry.ecs_report = ecs_from_field(field, config.thresholds);
        entry.measured = compute_metrics(field, mesh);
        entry.convexity_ratio = convexity_ratio(mesh);
        entry.com_violation = norm(analytic_com(entry.spec).second);
        entry.reproduced = true;
    } catch (const Error& e) {
        entry.error = e.what();
    }

    auto near_abs = [](double got, double want, double tol_abs) {
        return std::abs(got - want) <= tol_abs;
    };
    auto near_rel = [](double got, double want, double tol_rel) {
        return std::abs(got - want) <= tol_rel * std::abs(want);
    };

    bool ok = entry.reproduced;
    entry.verdicts["ecs"] = ok && !entry.ecs_report.degenerate &&
                            entry.ecs_report.mono_at_all_thresholds();
    entry.verdicts["h_range"] =
        ok && near_abs(entry.measured.h_range, entry.published.h_range, tol.h_range_abs);
    entry.verdicts["sre"] = ok && near_rel(entry.measured.sre, entry.published.sre,
                                           tol.sre_rel);
    entry.verdicts["asymmetry"] = ok && near_rel(entry.measured.asymmetry,
                                                 entry.published.asymmetry,
                                                 tol.asymmetry_rel);
    entry.verdicts["su_angle"] = ok && near_abs(entry.measured.su_angle_deg,
                                                entry.published.su_angle_deg,
                                                tol.su_angle_abs_deg);
    entry.verdicts["convex"] = ok && entry.convexity_ratio > kConvexityThreshold;

    entry.pass = true;
    for (const auto& [name, verdict] : entry.verdicts) entry.pass = entry.pass && verdict;
}

CatalogReport reproduce_all(const RunConfig& config, const CatalogTolerances& tol) {
    config.validate();
    CatalogReport report;
    report.config = config;
    report.entries = builtin_catalog();

    auto dirs = std::make_shared<DirectionSet>(
        fibonacci_sphere(config.directions, config.knn));
    for (auto& entry : report.entries) {
        reproduce(entry, config, dirs, tol);
        if (entry.pass) ++report.passed;
    }

    std::vector<MetricsReport> reproduced;
    double phase_sum = 0.0, radial_sum = 0.0;
    int phase_n = 0, radial_n = 0;
    double sre_lo = 0.0, sre_hi = 0.0, asym_lo = 0.0, asym_hi = 0.0;
    bool first = true;
    for (const auto& e : report.entries) {
        if (!e.reproduced) continue;
        reproduced.push_back(e.measured);
        if (e.spec.family == Family::ExtendedPhase) {
            phase_sum += e.measured.sre;
            ++phase_n;
        } else {
            radial_sum += e.measured.sre;
            ++radial_n;
        }
        if (first) {
            sre_lo = sre_hi = e.measured.sre;
            asym_lo = asym_hi = e.measured.asymmetry;
            first = false;
        } else {
            sre_lo = std::min(sre_lo, e.measured.sre);
            sre_hi = std::max(sre_hi, e.measured.sre);
            asym_lo = std::min(asym_lo, e.measured.asymmetry);
            asym_hi = std::max(asym_hi, e.measured.asymmetry);
        }
    }
    if (reproduced.size() >= 3) report.correlation = tradeoff_correlation(reproduced);
    if (sre_lo > 0.0) report.sre_ratio = sre_hi / sre_lo;
    if (asym_lo > 0.0) report.asymmetry_ratio = asym_hi / asym_lo;
    if (phase_n > 0) report.phase_mean_sre = phase_sum / phase_n;
    if (radial_n > 0) report.radial_mean_sre = radial_sum / radial_n;
    return report;
}

} // namespace monostat
