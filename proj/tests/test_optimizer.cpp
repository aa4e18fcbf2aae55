#include <doctest.h>

#include <cmath>
#include <memory>

#include "monostat/optimizer.hpp"

using namespace monostat;

namespace {

OracleConfig small_config() {
    OracleConfig c;
    c.directions = 500;
    c.n_theta = 24;
    c.n_phi = 48;
    c.thresholds = {0.01};
    c.quadrature_order = 24;
    return c;
}

std::shared_ptr<const DirectionSet> dirs_for(const OracleConfig& c) {
    return std::make_shared<DirectionSet>(
        fibonacci_sphere(c.directions, c.knn, c.azimuth_offset));
}

} // namespace

TEST_CASE("objective on reference bodies") {
    OracleConfig config = reduced_oracle_config();
    auto dirs = dirs_for(config);

    SUBCASE("a verified mono-monostatic radial body scores zero") {
        SurfaceSpec s{Family::RadialF3, 0.008, 0.016, 1};
        ObjectiveBreakdown b = objective_detail(s, config, dirs);
        CHECK(b.admissible);
        CHECK(b.raw_basins >= 1);
        if (b.raw_basins == 1) {
            CHECK(b.value == doctest::Approx(0.0).epsilon(1e-12));
        } else {
            CHECK(b.value < 1e-4); // residual gap only
        }
        CHECK(b.com_violation < 1e-7);
        CHECK(b.convexity_ratio > 0.999);
    }

    SUBCASE("eta phase at beta 0.05 has a small two-basin gap") {
        SurfaceSpec s{Family::EtaPhase, 0.05, 0.0, 1};
        ObjectiveBreakdown b = objective_detail(s, config, dirs);
        CHECK(b.admissible);
        CHECK(b.raw_basins >= 2);
        CHECK(b.gap > 1e-4);
        CHECK(b.gap < 5e-3);
    }

    SUBCASE("non-convex spec is dominated by the convexity penalty") {
        SurfaceSpec s{Family::EtaPhase, 0.10, 0.0, 1};
        ObjectiveBreakdown b = objective_detail(s, config, dirs);
        CHECK(b.convexity_ratio <= 0.999);
        double penalty = b.value - b.gap;
        CHECK(penalty > b.gap);
        CHECK(penalty > 0.01);
    }

    SUBCASE("sphere spec is degenerate with objective zero") {
        SurfaceSpec s{Family::EtaPhase, 0.0, 0.0, 1};
        ObjectiveBreakdown b = objective_detail(s, config, dirs);
        CHECK(b.degenerate);
        CHECK(b.value == 0.0);
    }

    SUBCASE("inadmissible spec gets the sentinel") {
        SurfaceSpec s{Family::RadialF3, 0.0, -3.0, 1};
        ObjectiveBreakdown b = objective_detail(s, config, dirs);
        CHECK_FALSE(b.admissible);
        CHECK(b.value == doctest::Approx(1e6));
    }
}

TEST_CASE("differential evolution is seed-reproducible") {
    OptimizationProblem p;
    p.family = Family::RadialF4;
    p.beta_min = p.beta_max = 0.023;
    p.coeff_min = 0.0;
    p.coeff_max = 0.3;
    p.population = 8;
    p.max_generations = 4;
    p.seed = 99;
    p.inner = small_config();
    p.verify = small_config();

    OptimizationResult a = differential_evolution(p);
    OptimizationResult b = differential_evolution(p);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].best_objective == b.trace[i].best_objective);
        CHECK(a.trace[i].best_beta == b.trace[i].best_beta);
        CHECK(a.trace[i].best_coeff == b.trace[i].best_coeff);
    }
    CHECK(a.best.beta == b.best.beta);
    CHECK(a.best.coeff == b.best.coeff);
    CHECK(a.best_objective == b.best_objective);
    CHECK(a.success == b.success);
}

TEST_CASE("degenerate sphere-only problem") {
    OptimizationProblem p;
    p.family = Family::EtaPhase;
    p.beta_min = p.beta_max = 0.0;
    p.coeff_min = p.coeff_max = 0.0;
    p.population = 4;
    p.max_generations = 2;
    p.inner = small_config();
    p.verify = small_config();
    OptimizationResult r = differential_evolution(p);
    CHECK(r.best_objective == 0.0);
    CHECK(r.best_report.degenerate);
    CHECK(r.best_report.default_ecs == 1);
    CHECK_FALSE(r.success); // a sphere is indifferent, not verified mono-monostatic
}

TEST_CASE("beta sweep rows") {
    OracleConfig config = small_config();
    auto rows = beta_sweep(Family::EtaPhase, {0.0, 0.05}, config);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].degenerate);
    CHECK_FALSE(rows[1].degenerate);
    CHECK(rows[1].admissible);
    CHECK(rows[1].h_range > 0.0);
}

TEST_CASE("grid helper is inclusive") {
    auto g = grid_range(0.0, 0.3, 0.01);
    REQUIRE(g.size() == 31);
    CHECK(g.front() == doctest::Approx(0.0));
    CHECK(g.back() == doctest::Approx(0.3));
}

TEST_CASE("feasibility map components ignore traversal order") {
    OracleConfig config = small_config();
    // tiny grid; just structure checks, the real spans run in acceptance
    auto map = feasibility_map(Family::RadialF4, 1, {0.023},
                               grid_range(0.05, 0.15, 0.05), config);
    CHECK(map.cells.size() == 3);
    int mono_cells = 0;
    for (const auto& c : map.cells) mono_cells += c.mono ? 1 : 0;
    if (mono_cells > 0) CHECK(map.components >= 1);
    for (std::size_t i = 0; i < map.cells.size(); ++i)
        CHECK((map.component_of[i] >= 0) == map.cells[i].mono);
}
