#include <doctest.h>

#include <cmath>
#include <memory>

#include "monostat/errors.hpp"
#include "monostat/metrics.hpp"
#include "monostat/surfaces.hpp"

using namespace monostat;

namespace {

std::shared_ptr<const DirectionSet> dirs_of(int n) {
    return std::make_shared<DirectionSet>(fibonacci_sphere(n));
}

HeightField linear_field(std::shared_ptr<const DirectionSet> dirs) {
    HeightField field;
    field.dirs = std::move(dirs);
    for (const auto& d : field.dirs->directions) field.h.push_back(d.z + 2.0);
    field.finalize();
    return field;
}

} // namespace

TEST_CASE("sphere metrics vanish") {
    TriMesh sphere = canonical_body(CanonicalKind::Sphere, 100);
    HeightField field = height_field(sphere, dirs_of(2000));
    CHECK(self_righting_energy(field) < 1e-3);
    CHECK(steepness(field) < 1e-3);
    MetricsReport m = compute_metrics(field, sphere);
    CHECK(m.asymmetry < 1e-10);
}

TEST_CASE("degenerate field maps to zero metrics") {
    HeightField flat;
    flat.dirs = dirs_of(500);
    flat.h.assign(flat.dirs->size(), 1.0);
    flat.finalize();
    CHECK(self_righting_energy(flat) == 0.0);
    CHECK(steepness(flat) == 0.0);
}

TEST_CASE("steepness of a linear field is resolution-stable") {
    double s1 = steepness(linear_field(dirs_of(5000)));
    double s2 = steepness(linear_field(dirs_of(20000)));
    CHECK(s1 > 0.0);
    CHECK(std::abs(s1 - s2) / s1 < 0.05);
}

TEST_CASE("sre never exceeds h_range") {
    auto dirs = dirs_of(2000);
    for (double beta : {0.02, 0.05, 0.15}) {
        SurfaceSpec s;
        s.family = Family::EtaPhase;
        s.beta = beta;
        HeightField field = height_field(generate_mesh(s, 60, 120), dirs);
        double sre = self_righting_energy(field);
        CHECK(sre >= 0.0);
        CHECK(sre <= field.h_range);
    }
}

TEST_CASE("pearson correlation") {
    SUBCASE("perfect linearity") {
        std::vector<MetricsReport> entries;
        for (double h : {0.02, 0.05, 0.08, 0.11}) {
            MetricsReport m;
            m.h_range = h;
            m.sre = 0.5 * h;
            entries.push_back(m);
        }
        CHECK(tradeoff_correlation(entries) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("an outlier breaks perfection") {
        std::vector<MetricsReport> entries(3);
        entries[0].h_range = 0.02;
        entries[0].sre = 0.01;
        entries[1].h_range = 0.05;
        entries[1].sre = 0.025;
        entries[2].h_range = 0.08;
        entries[2].sre = 0.01;
        CHECK(tradeoff_correlation(entries) < 1.0);
    }
    SUBCASE("too few entries") {
        std::vector<MetricsReport> two(2);
        CHECK_THROWS_AS(tradeoff_correlation(two), Error);
    }
}
