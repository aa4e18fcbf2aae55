#pragma once

#include <vector>

#include "monostat/oracle.hpp"

namespace monostat {

struct MetricsReport {
    double h_range = 0.0;
    double sre = 0.0;       // self-righting energy: mean COM height drop
    double steepness = 0.0; // mean |dh| / arc over kNN edges (see note below)
    double asymmetry = 0.0; // CV of radial vertex distances
    double su_angle_deg = 0.0;
};

// Definition used for the steepness column: mean over all unique kNN graph
// edges of |h_i - h_j| divided by the geodesic arc between the directions.
// No closed-form reference exists for this column; only its monotone growth
// with h-range is meaningful.
inline constexpr const char* kSteepnessDefinition =
    "mean |dh|/arc over kNN edges";

// Mean over sampled directions of h(d) - h_min. Degenerate fields yield 0.
double self_righting_energy(const HeightField& field);

double steepness(const HeightField& field);

// All five metrics for one body.
MetricsReport compute_metrics(const HeightField& field, const TriMesh& mesh);

// Pearson correlation between h_range and sre across entries (>= 3).
double tradeoff_correlation(const std::vector<MetricsReport>& entries);

double pearson(const std::vector<double>& a, const std::vector<double>& b);

} // namespace monostat
