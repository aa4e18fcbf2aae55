#pragma once

#include <map>
#include <string>
#include <vector>

#include "monostat/config.hpp"
#include "monostat/metrics.hpp"
#include "monostat/oracle.hpp"
#include "monostat/surfaces.hpp"

namespace monostat {

struct PublishedMetrics {
    double h_range = 0.0;
    double sre = 0.0;
    double steepness = 0.0;
    double asymmetry = 0.0;
    double su_angle_deg = 0.0;
};

// Verdict tolerances: ECS = 1 at every threshold is the hard gate; metric
// tolerances absorb unstated mesh resolution and sampling in the source data.
struct CatalogTolerances {
    double h_range_abs = 0.002;
    double sre_rel = 0.10;
    double asymmetry_rel = 0.10;
    double su_angle_abs_deg = 10.0;
};

struct CatalogEntry {
    int index = 0; // 1..13
    SurfaceSpec spec;
    PublishedMetrics published;

    bool reproduced = false;
    std::string error; // populated when reproduction failed outright
    MetricsReport measured;
    ECSReport ecs_report;
    double convexity_ratio = 0.0;
    double com_violation = 0.0;
    std::map<std::string, bool> verdicts;
    bool pass = false;
};

// The thirteen verified instances with their published metric columns.
std::vector<CatalogEntry> builtin_catalog();

// Full pipeline on one entry: mesh at config resolution, oracle at every
// threshold, all metrics, verdicts. Never throws; failures land in `error`
// and fail the verdicts.
void reproduce(CatalogEntry& entry, const RunConfig& config,
               std::shared_ptr<const DirectionSet> dirs,
               const CatalogTolerances& tol = {});

struct CatalogReport {
    std::vector<CatalogEntry> entries;
    double correlation = 0.0;     // pearson(h_range, sre) over reproduced entries
    double sre_ratio = 0.0;       // max/min reproduced SRE
    double asymmetry_ratio = 0.0; // max/min reproduced asymmetry
    double phase_mean_sre = 0.0;
    double radial_mean_sre = 0.0;
    int passed = 0;
    RunConfig config;
};

CatalogReport reproduce_all(const RunConfig& config, const CatalogTolerances& tol = {});

} // namespace monostat
