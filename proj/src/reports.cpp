#include "monostat/reports.hpp"

#include <fstream>
#include <sstream>

#include "monostat/errors.hpp"

namespace monostat {

Json to_json(const RunConfig& config) {
    return Json{{"directions", config.directions},
                {"knn", config.knn},
                {"thresholds", config.thresholds},
                {"n_theta", config.n_theta},
                {"n_phi", config.n_phi},
                {"seed", config.seed}};
}

Json to_json(const SurfaceSpec& spec) {
    Json j{{"family", family_name(spec.family)},
           {"beta", spec.beta},
           {"coeff", spec.coeff}};
    if (spec.family == Family::ExtendedPhase) j["harmonic"] = spec.harmonic;
    return j;
}

Json to_json(const ECSReport& report) {
    Json merged = Json::object();
    for (const auto& [t, count] : report.merged_count_by_threshold) {
        std::ostringstream key;
        key << t;
        merged[key.str()] = count;
    }
    return Json{{"raw_basin_count", report.raw_basin_count},
                {"merged_count_by_threshold", merged},
                {"default_ecs", report.default_ecs},
                {"su_angle_deg", report.su_angle_deg},
                {"degenerate", report.degenerate},
                {"h_min", report.h_min},
                {"h_max", report.h_max},
                {"h_range", report.h_range},
                {"sink_heights", report.sink_heights}};
}

Json to_json(const MetricsReport& metrics) {
    return Json{{"h_range", metrics.h_range},
                {"sre", metrics.sre},
                {"steepness", metrics.steepness},
                {"steepness_definition", kSteepnessDefinition},
                {"asymmetry", metrics.asymmetry},
                {"su_angle_deg", metrics.su_angle_deg}};
}

Json to_json(const std::vector<SweepRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        arr.push_back(Json{{"beta", r.beta},
                           {"admissible", r.admissible},
                           {"degenerate", r.degenerate},
                           {"raw_basins", r.raw_basins},
                           {"ecs", r.ecs},
                           {"convex", r.convex},
                           {"convexity_ratio", r.convexity_ratio},
                           {"h_range", r.h_range}});
    }
    return arr;
}

Json to_json(const FeasibilityMap& map) {
    Json cells = Json::array();
    for (std::size_t i = 0; i < map.cells.size(); ++i) {
        const auto& c = map.cells[i];
        cells.push_back(Json{{"beta", c.beta},
                             {"coeff", c.coeff},
                             {"admissible", c.admissible},
                             {"degenerate", c.degenerate},
                             {"default_ecs", c.default_ecs},
                             {"mono", c.mono},
                             {"convexity_ratio", c.convexity_ratio},
                             {"com_violation", c.com_violation},
                             {"component", map.component_of[i]}});
    }
    return Json{{"betas", map.betas},
                {"coeffs", map.coeffs},
                {"components", map.components},
                {"cells", cells}};
}

Json to_json(const OptimizationResult& result) {
    Json trace = Json::array();
    for (const auto& g : result.trace) {
        trace.push_back(Json{{"generation", g.generation},
                             {"best_objective", g.best_objective},
                             {"best_beta", g.best_beta},
                             {"best_coeff", g.best_coeff},
                             {"feasible_found", g.feasible_found}});
    }
    Json j{{"seed", result.seed},
           {"success", result.success},
           {"generations_run", result.generations_run},
           {"best", to_json(result.best)},
           {"best_objective", result.best_objective},
           {"best_report", to_json(result.best_report)},
           {"trace", trace}};
    if (result.feasible) {
        j["feasible"] = Json{{"spec", to_json(result.feasible->spec)},
                             {"report", to_json(result.feasible->report)},
                             {"convexity_ratio", result.feasible->convexity_ratio},
                             {"com_violation", result.feasible->com_violation},
                             {"objective", result.feasible->objective}};
    }
    return j;
}

Json to_json(const CatalogEntry& entry) {
    Json published{{"h_range", entry.published.h_range},
                   {"sre", entry.published.sre},
                   {"steepness", entry.published.steepness},
                   {"asymmetry", entry.published.asymmetry},
                   {"su_angle_deg", entry.published.su_angle_deg},
                   {"provenance", "published"}};
    Json j{{"index", entry.index},
           {"spec", to_json(entry.spec)},
           {"published", published},
           {"reproduced", entry.reproduced}};
    if (!entry.error.empty()) j["error"] = entry.error;
    if (entry.reproduced) {
        j["measured"] = to_json(entry.measured);
        j["ecs"] = to_json(entry.ecs_report);
        j["convexity_ratio"] = entry.convexity_ratio;
        j["com_violation"] = entry.com_violation;
    }
    Json verdicts = Json::object();
    for (const auto& [name, ok] : entry.verdicts) verdicts[name] = ok;
    j["verdicts"] = verdicts;
    j["pass"] = entry.pass;
    return j;
}

Json to_json(const CatalogReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) entries.push_back(to_json(e));
    return Json{{"config", to_json(report.config)},
                {"entries", entries},
                {"aggregate",
                 Json{{"correlation", report.correlation},
                      {"sre_ratio", report.sre_ratio},
                      {"asymmetry_ratio", report.asymmetry_ratio},
                      {"phase_mean_sre", report.phase_mean_sre},
                      {"radial_mean_sre", report.radial_mean_sre},
                      {"passed", report.passed}}}};
}

void write_report(const Json& payload, const std::string& path) {
    Json doc{{"schema_version", 1}, {"report", payload}};
    write_text(doc.dump(2) + "\n", path);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "beta,admissible,degenerate,raw_basins,ecs,convex,convexity_ratio,h_range\n";
    for (const auto& r : rows) {
        out << r.beta << ',' << (r.admissible ? 1 : 0) << ',' << (r.degenerate ? 1 : 0)
            << ',' << r.raw_basins << ',' << r.ecs << ',' << (r.convex ? 1 : 0) << ','
            << r.convexity_ratio << ',' << r.h_range << '\n';
    }
    return out.str();
}

std::string map_csv(const FeasibilityMap& map) {
    std::ostringstream out;
    out << "beta,coeff,admissible,degenerate,default_ecs,mono,convexity_ratio,"
           "com_violation,component\n";
    for (std::size_t i = 0; i < map.cells.size(); ++i) {
        const auto& c = map.cells[i];
        out << c.beta << ',' << c.coeff << ',' << (c.admissible ? 1 : 0) << ','
            << (c.degenerate ? 1 : 0) << ',' << c.default_ecs << ',' << (c.mono ? 1 : 0)
            << ',' << c.convexity_ratio << ',' << c.com_violation << ','
            << map.component_of[i] << '\n';
    }
    return out.str();
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path);
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

} // namespace monostat
