#include "monostat/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "monostat/errors.hpp"
#include "monostat/geometry.hpp"

namespace monostat {

namespace {

constexpr double kSentinel = 1e6;

// Portable uniform doubles straight from the engine's raw 64-bit draws, so
// traces do not depend on the standard library's distribution internals.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

void parallel_for(int n, const std::function<void(int)>& body) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = static_cast<int>(w); i < n; i += static_cast<int>(workers))
                body(i);
        });
    }
    for (auto& t : pool) t.join();
}

SurfaceSpec make_spec(const OptimizationProblem& p, double beta, double coeff) {
    SurfaceSpec s;
    s.family = p.family;
    s.harmonic = p.harmonic;
    s.beta = beta;
    s.coeff = coeff;
    return s;
}

} // namespace

ObjectiveBreakdown objective_detail(const SurfaceSpec& spec, const OracleConfig& config,
                                    std::shared_ptr<const DirectionSet> dirs) {
    ObjectiveBreakdown out;
    try {
        spec.validate();
    } catch (const Error&) {
        out.admissible = false;
        out.value = kSentinel;
        return out;
    }

    if (spec.is_sphere()) {
        out.degenerate = true;
        out.raw_basins = 1;
        return out; // physically indifferent body, nothing to optimize
    }
    if (!is_admissible(spec, config.n_theta, config.n_phi)) {
        out.admissible = false;
        out.value = kSentinel;
        return out;
    }

    TriMesh mesh;
    HeightField field;
    try {
        mesh = generate_mesh(spec, config.n_theta, config.n_phi);
        field = height_field(mesh, std::move(dirs));
    } catch (const NonPositiveRadiusError&) {
        out.admissible = false;
        out.value = kSentinel;
        return out;
    }
    out.h_range = field.h_range;

    try {
        BasinLabeling labeling = label_basins(field);
        out.raw_basins = static_cast<int>(labeling.sinks.size());
        if (out.raw_basins >= 2) {
            std::vector<double> hs;
            hs.reserve(labeling.sinks.size());
            for (const auto& [node, h] : labeling.sinks) hs.push_back(h);
            std::partial_sort(hs.begin(), hs.begin() + 2, hs.end());
            out.gap = hs[1] - hs[0];
        }
    } catch (const DegenerateFlatError&) {
        out.degenerate = true;
        out.raw_basins = 1;
        return out;
    }

    out.convexity_ratio = convex_by_dihedral(mesh) ? 1.0 : convexity_ratio(mesh);
    out.com_violation = norm(analytic_com(spec, config.quadrature_order).second);

    double scale = 1e3 * std::max(field.h_range, 1e-3);
    out.value = out.gap +
                scale * std::max(0.0, kConvexityThreshold - out.convexity_ratio) +
                scale * std::max(0.0, out.com_violation - 1e-7);
    return out;
}

double objective(const SurfaceSpec& spec, const OracleConfig& config) {
    auto dirs = std::make_shared<DirectionSet>(
        fibonacci_sphere(config.directions, config.knn, config.azimuth_offset));
    return objective_detail(spec, config, dirs).value;
}

OptimizationResult differential_evolution(const OptimizationProblem& problem) {
    if (problem.beta_min > problem.beta_max || problem.coeff_min > problem.coeff_max)
        throw Error("differential_evolution: bounds must be ordered");
    if (problem.population < 4) throw Error("differential_evolution: population >= 4");

    const int np = problem.population;
    std::mt19937_64 rng(problem.seed);
    auto inner_dirs = std::make_shared<DirectionSet>(fibonacci_sphere(
        problem.inner.directions, problem.inner.knn, problem.inner.azimuth_offset));
    // Fresh spiral offset for verification so success never reuses the
    // optimization direction set.
    OracleConfig verify_cfg = problem.verify;
    verify_cfg.azimuth_offset += 0.5;
    auto verify_dirs = std::make_shared<DirectionSet>(fibonacci_sphere(
        verify_cfg.directions, verify_cfg.knn, verify_cfg.azimuth_offset));

    auto clamp_param = [](double v, double lo, double hi) {
        return std::min(hi, std::max(lo, v));
    };

    std::vector<double> beta(np), coeff(np);
    std::vector<ObjectiveBreakdown> score(np);
    for (int i = 0; i < np; ++i) {
        beta[i] = problem.beta_min + (problem.beta_max - problem.beta_min) * uniform01(rng);
        coeff[i] =
            problem.coeff_min + (problem.coeff_max - problem.coeff_min) * uniform01(rng);
    }
    parallel_for(np, [&](int i) {
        score[i] = objective_detail(make_spec(problem, beta[i], coeff[i]), problem.inner,
                                    inner_dirs);
    });

    OptimizationResult result;
    result.seed = problem.seed;

    std::set<std::pair<double, double>> verification_attempts;

    auto verify_candidate = [&](int idx) {
        SurfaceSpec spec = make_spec(problem, beta[idx], coeff[idx]);
        if (spec.is_sphere()) return; // degenerate, flagged via the report instead
        if (!verification_attempts.emplace(spec.beta, spec.coeff).second) return;
        try {
            TriMesh mesh = generate_mesh(spec, verify_cfg.n_theta, verify_cfg.n_phi);
            ECSReport report = ecs(mesh, verify_dirs, verify_cfg.thresholds);
            if (report.degenerate || !report.mono_at_all_thresholds()) return;
            double ratio = convexity_ratio(mesh);
            if (!(ratio > kConvexityThreshold)) return;
            VerifiedSolution sol;
            sol.spec = spec;
            sol.report = report;
            sol.convexity_ratio = ratio;
            sol.com_violation = norm(analytic_com(spec, verify_cfg.quadrature_order).second);
            sol.objective = score[idx].value;
            result.feasible = sol;
            result.success = true;
        } catch (const Error&) {
            // verification failure just means the candidate is not accepted
        }
    };

    auto best_index = [&]() {
        int bi = 0;
        for (int i = 1; i < np; ++i)
            if (score[i].value < score[bi].value) bi = i;
        return bi;
    };

    auto consider_verification = [&]() {
        int cand = -1;
        for (int i = 0; i < np; ++i) {
            if (score[i].degenerate || !score[i].admissible) continue;
            if (score[i].raw_basins != 1) continue;
            if (cand < 0 || score[i].value < score[cand].value) cand = i;
        }
        if (cand < 0) return;
        if (result.feasible && !(score[cand].value < result.feasible->objective - 1e-12))
            return; // only improvements are worth a full-tier run
        verify_candidate(cand);
    };

    consider_verification();

    int generation = 0;
    for (; generation < problem.max_generations; ++generation) {
        int bi = best_index();
        result.trace.push_back({generation, score[bi].value, beta[bi], coeff[bi],
                                result.success});
        if (score[bi].value < 1e-6 && result.success) break;

        // Pre-generate every random draw for the generation, then evaluate
        // trials in parallel; tie-breaking never depends on thread timing.
        double f = 0.5 + 0.5 * uniform01(rng); // dithered mutation factor
        const double cr = 0.9;
        std::vector<double> tb(np), tc(np);
        for (int i = 0; i < np; ++i) {
            int r1, r2, r3;
            do { r1 = static_cast<int>(rng() % np); } while (r1 == i);
            do { r2 = static_cast<int>(rng() % np); } while (r2 == i || r2 == r1);
            do { r3 = static_cast<int>(rng() % np); } while (r3 == i || r3 == r1 || r3 == r2);
            double mb = beta[r1] + f * (beta[r2] - beta[r3]);
            double mc = coeff[r1] + f * (coeff[r2] - coeff[r3]);
            int forced = static_cast<int>(rng() % 2);
            bool cross_b = uniform01(rng) < cr || forced == 0;
            bool cross_c = uniform01(rng) < cr || forced == 1;
            tb[i] = clamp_param(cross_b ? mb : beta[i], problem.beta_min, problem.beta_max);
            tc[i] = clamp_param(cross_c ? mc : coeff[i], problem.coeff_min,
                                problem.coeff_max);
        }
        std::vector<ObjectiveBreakdown> trial_score(np);
        parallel_for(np, [&](int i) {
            trial_score[i] = objective_detail(make_spec(problem, tb[i], tc[i]),
                                              problem.inner, inner_dirs);
        });
        for (int i = 0; i < np; ++i) {
            if (trial_score[i].value <= score[i].value) {
                beta[i] = tb[i];
                coeff[i] = tc[i];
                score[i] = trial_score[i];
            }
        }
        consider_verification();
    }
    result.generations_run = generation;

    int bi = best_index();
    result.best = make_spec(problem, beta[bi], coeff[bi]);
    result.best_objective = score[bi].value;
    if (score[bi].admissible && !score[bi].degenerate) {
        try {
            TriMesh mesh = generate_mesh(result.best, verify_cfg.n_theta, verify_cfg.n_phi);
            result.best_report = ecs(mesh, verify_dirs, verify_cfg.thresholds);
        } catch (const Error&) {
        }
    } else if (score[bi].degenerate) {
        result.best_report.degenerate = true;
        result.best_report.raw_basin_count = 1;
        result.best_report.default_ecs = 1;
    }
    return result;
}

std::vector<SweepRow> beta_sweep(Family family, const std::vector<double>& betas,
                                 const OracleConfig& config) {
    auto dirs = std::make_shared<DirectionSet>(
        fibonacci_sphere(config.directions, config.knn, config.azimuth_offset));
    std::vector<SweepRow> rows;
    rows.reserve(betas.size());
    for (double b : betas) {
        SweepRow row;
        row.beta = b;
        SurfaceSpec spec;
        spec.family = family;
        spec.beta = b;
        try {
            spec.validate();
            if (spec.is_sphere()) {
                row.degenerate = true;
                row.raw_basins = 1;
                row.ecs = 1;
                row.convex = true;
                row.convexity_ratio = 1.0;
                rows.push_back(row);
                continue;
            }
            if (!is_admissible(spec, config.n_theta, config.n_phi)) {
                row.admissible = false;
                rows.push_back(row);
                continue;
            }
            TriMesh mesh = generate_mesh(spec, config.n_theta, config.n_phi);
            ECSReport report = ecs(mesh, dirs, config.thresholds);
            row.degenerate = report.degenerate;
            row.raw_basins = report.raw_basin_count;
            row.ecs = report.default_ecs;
            row.h_range = report.h_range;
            row.convexity_ratio = convexity_ratio(mesh);
            row.convex = row.convexity_ratio > kConvexityThreshold;
        } catch (const NonPositiveRadiusError&) {
            row.admissible = false;
        }
        rows.push_back(row);
    }
    return rows;
}

FeasibilityMap feasibility_map(Family family, int harmonic,
                               const std::vector<double>& beta_grid,
                               const std::vector<double>& coeff_grid,
                               const OracleConfig& config) {
    if (beta_grid.empty() || coeff_grid.empty())
        throw Error("feasibility_map: empty grid");
    auto dirs = std::make_shared<DirectionSet>(
        fibonacci_sphere(config.directions, config.knn, config.azimuth_offset));

    FeasibilityMap map;
    map.betas = beta_grid;
    map.coeffs = coeff_grid;
    const int nb = static_cast<int>(beta_grid.size());
    const int nc = static_cast<int>(coeff_grid.size());
    map.cells.resize(static_cast<std::size_t>(nb) * nc);

    parallel_for(nb * nc, [&](int idx) {
        int bi = idx / nc, ci = idx % nc;
        FeasibilityCell& cell = map.cells[idx];
        cell.beta = beta_grid[bi];
        cell.coeff = coeff_grid[ci];
        SurfaceSpec spec;
        spec.family = family;
        spec.harmonic = harmonic;
        spec.beta = cell.beta;
        spec.coeff = cell.coeff;
        try {
            spec.validate();
            if (spec.is_sphere()) {
                cell.degenerate = true;
                cell.default_ecs = 1;
                cell.convexity_ratio = 1.0;
                return;
            }
            if (!is_admissible(spec, config.n_theta, config.n_phi)) {
                cell.admissible = false;
                return;
            }
            TriMesh mesh = generate_mesh(spec, config.n_theta, config.n_phi);
            ECSReport report = ecs(mesh, dirs, config.thresholds);
            cell.degenerate = report.degenerate;
            cell.default_ecs = report.default_ecs;
            cell.convexity_ratio = convexity_ratio(mesh);
            cell.com_violation = norm(analytic_com(spec, config.quadrature_order).second);
            cell.mono = !report.degenerate && report.mono_at_all_thresholds() &&
                        cell.convexity_ratio > kConvexityThreshold;
        } catch (const Error&) {
            cell.admissible = false;
        }
    });

    // 4-neighborhood components over mono cells, renumbered in scan order.
    map.component_of.assign(map.cells.size(), -1);
    std::vector<int> parent(map.cells.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto mono_at = [&](int bi, int ci) {
        return map.cells[static_cast<std::size_t>(bi) * nc + ci].mono;
    };
    for (int bi = 0; bi < nb; ++bi) {
        for (int ci = 0; ci < nc; ++ci) {
            if (!mono_at(bi, ci)) continue;
            int idx = bi * nc + ci;
            if (bi + 1 < nb && mono_at(bi + 1, ci)) unite(idx, idx + nc);
            if (ci + 1 < nc && mono_at(bi, ci + 1)) unite(idx, idx + 1);
        }
    }
    int next_id = 0;
    std::vector<int> id_of_root(map.cells.size(), -1);
    for (int idx = 0; idx < nb * nc; ++idx) {
        if (!map.cells[idx].mono) continue;
        int root = find(idx);
        if (id_of_root[root] < 0) id_of_root[root] = next_id++;
        map.component_of[idx] = id_of_root[root];
    }
    map.components = next_id;
    return map;
}

std::vector<double> grid_range(double lo, double hi, double step) {
    if (step <= 0.0) throw Error("grid_range: step must be positive");
    std::vector<double> out;
    for (double v = lo; v <= hi + 0.5 * step; v += step) out.push_back(v);
    return out;
}

} // namespace monostat
