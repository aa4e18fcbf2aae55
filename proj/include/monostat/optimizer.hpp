#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monostat/oracle.hpp"
#include "monostat/surfaces.hpp"

namespace monostat {

// Oracle settings for one evaluation tier. The optimizer runs a reduced tier
// inside the population loop and a full tier for verification.
struct OracleConfig {
    int directions = 5000;
    int knn = 12;
    int n_theta = 100;
    int n_phi = 200;
    std::vector<double> thresholds = kDefaultThresholds;
    double azimuth_offset = 0.0;
    int quadrature_order = 64;
};

inline OracleConfig reduced_oracle_config() {
    OracleConfig c;
    c.directions = 2000;
    c.n_theta = 80;
    c.n_phi = 160;
    c.thresholds = {0.01};
    c.quadrature_order = 32;
    return c;
}

struct ObjectiveBreakdown {
    double value = 0.0;
    double gap = 0.0;             // second-lowest raw sink minus lowest
    double convexity_ratio = 1.0;
    double com_violation = 0.0;   // |analytic com|
    int raw_basins = 0;
    double h_range = 0.0;
    bool admissible = true;
    bool degenerate = false;
};

// Height gap between the two lowest raw drainage basins, plus penalties for
// convexity (< 0.999) and COM-constraint violation (> 1e-7), both weighted
// by 1e3 * h_range_scale. Inadmissible specs get the 1e6 sentinel.
ObjectiveBreakdown objective_detail(const SurfaceSpec& spec, const OracleConfig& config,
                                    std::shared_ptr<const DirectionSet> dirs);

double objective(const SurfaceSpec& spec, const OracleConfig& config);

struct OptimizationProblem {
    Family family = Family::ExtendedPhase;
    int harmonic = 1;
    double beta_min = 0.01, beta_max = 0.08;
    double coeff_min = 0.0, coeff_max = 0.5;
    double penalty_weight = 1e3;
    std::uint64_t seed = 1;
    int population = 32;
    int max_generations = 200;
    OracleConfig inner = reduced_oracle_config();
    OracleConfig verify = {};
};

struct GenerationStats {
    int generation = 0;
    double best_objective = 0.0;
    double best_beta = 0.0;
    double best_coeff = 0.0;
    bool feasible_found = false;
};

struct VerifiedSolution {
    SurfaceSpec spec;
    ECSReport report;            // full-tier, fresh direction set
    double convexity_ratio = 0.0;
    double com_violation = 0.0;
    double objective = 0.0;      // inner-tier objective of the candidate
};

struct OptimizationResult {
    SurfaceSpec best;            // lowest objective seen
    double best_objective = 0.0;
    ECSReport best_report;       // full-tier report for `best`
    std::optional<VerifiedSolution> feasible; // oracle-confirmed ECS = 1
    bool success = false;        // a verified ECS=1 spec was found
    std::vector<GenerationStats> trace;
    std::uint64_t seed = 0;
    int generations_run = 0;
};

// DE/rand/1/bin over (beta, coeff). Population 32, dithered mutation in
// [0.5, 1.0], crossover 0.9. Success is oracle-confirmed: a candidate only
// counts once ECS = 1 holds at every verify-tier threshold on a fresh
// direction set. Runs to the generation limit unless the best objective
// drops below 1e-6 with a confirmed solution in hand.
OptimizationResult differential_evolution(const OptimizationProblem& problem);

struct SweepRow {
    double beta = 0.0;
    bool admissible = true;
    bool degenerate = false;
    int raw_basins = 0;
    int ecs = 0;               // merged count at 1%
    bool convex = false;
    double convexity_ratio = 0.0;
    double h_range = 0.0;
};

std::vector<SweepRow> beta_sweep(Family family, const std::vector<double>& betas,
                                 const OracleConfig& config = {});

struct FeasibilityCell {
    double beta = 0.0;
    double coeff = 0.0;
    bool admissible = true;
    bool degenerate = false;
    int default_ecs = 0;
    bool mono = false; // ECS = 1 at every threshold and convex
    double convexity_ratio = 0.0;
    double com_violation = 0.0;
};

struct FeasibilityMap {
    std::vector<double> betas;
    std::vector<double> coeffs;
    std::vector<FeasibilityCell> cells; // row-major, beta index major
    int components = 0;                 // 4-neighborhood components of mono cells
    std::vector<int> component_of;      // per cell, -1 when not mono

    const FeasibilityCell& at(int bi, int ci) const {
        return cells[static_cast<std::size_t>(bi) * coeffs.size() + ci];
    }
};

FeasibilityMap feasibility_map(Family family, int harmonic,
                               const std::vector<double>& beta_grid,
                               const std::vector<double>& coeff_grid,
                               const OracleConfig& config = {});

// a:b:step inclusive grid helper for CLI and tests.
std::vector<double> grid_range(double lo, double hi, double step);

} // namespace monostat
