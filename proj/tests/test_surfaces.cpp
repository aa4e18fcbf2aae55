#include <doctest.h>

#include <cmath>
#include <random>

#include "monostat/errors.hpp"
#include "monostat/geometry.hpp"
#include "monostat/surfaces.hpp"

using namespace monostat;

namespace {
constexpr double kPi = 3.14159265358979323846;

SurfaceSpec spec_of(Family f, double beta, double coeff, int k = 1) {
    SurfaceSpec s;
    s.family = f;
    s.beta = beta;
    s.coeff = coeff;
    s.harmonic = k;
    return s;
}
} // namespace

TEST_CASE("eta endpoint values and odd symmetry") {
    CHECK(eta(kPi / 2) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(eta(0.0) == doctest::Approx(kPi));
    CHECK(eta(kPi) == doctest::Approx(-kPi));
    for (double t : {0.3, 0.9, 1.2})
        CHECK(eta(kPi - t) == doctest::Approx(-eta(t)).epsilon(1e-12));
    CHECK_THROWS_AS(eta(-0.5), Error);
    CHECK_THROWS_AS(eta(3.5), Error);
}

TEST_CASE("phase per family") {
    CHECK(phase(spec_of(Family::LinearPhase, 0.1, 0.0), 0.2) == doctest::Approx(1.0));
    CHECK(phase(spec_of(Family::ExtendedPhase, 0.02, 0.234, 1), kPi / 2) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(phase(spec_of(Family::ExtendedPhase, 0.02, 0.234, 1), 0.0) ==
          doctest::Approx(kPi));
    CHECK(phase(spec_of(Family::EtaPhase, 0.05, 0.0), 0.7) ==
          doctest::Approx(eta(0.7)));
    CHECK(phase(spec_of(Family::RadialF4, 0.02, 0.1), 0.7) ==
          doctest::Approx(eta(0.7)));
}

TEST_CASE("radius identities") {
    // beta = 0 and coeff = 0 reduce every family to the unit sphere
    for (Family f : {Family::LinearPhase, Family::EtaPhase, Family::ExtendedPhase,
                     Family::RadialF3, Family::RadialF4}) {
        SurfaceSpec s = spec_of(f, 0.0, 0.0);
        for (double t : {0.1, 1.0, 2.5})
            for (double p : {0.0, 1.7, 4.0})
                CHECK(radius(s, t, p) == doctest::Approx(1.0).epsilon(1e-14));
    }
    // polar symmetry kills the radial-f4 term at theta = 0
    CHECK(radius(spec_of(Family::RadialF4, 0.0, 0.25), 0.0, 1.3) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // direct evaluation at theta = pi/2, phi = 0 where eta vanishes
    CHECK(radius(spec_of(Family::EtaPhase, 0.05, 0.0), kPi / 2, 0.0) ==
          doctest::Approx(std::pow(1.2, 0.25)).epsilon(1e-9));
    CHECK(radius(spec_of(Family::EtaPhase, 0.05, 0.0), kPi / 2, 0.0) ==
          doctest::Approx(1.046635).epsilon(1e-6));
}

TEST_CASE("radius periodic in phi") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ut(0.0, kPi), up(0.0, 2.0 * kPi);
    SurfaceSpec specs[] = {spec_of(Family::EtaPhase, 0.05, 0.0),
                           spec_of(Family::LinearPhase, 0.08, 0.0),
                           spec_of(Family::ExtendedPhase, 0.023, 0.234, 1),
                           spec_of(Family::RadialF3, 0.008, 0.016),
                           spec_of(Family::RadialF4, 0.023, 0.129)};
    for (const auto& s : specs) {
        for (int i = 0; i < 100; ++i) {
            double t = ut(rng), p = up(rng);
            CHECK(radius(s, t, p) ==
                  doctest::Approx(radius(s, t, p + 2.0 * kPi)).epsilon(1e-12));
        }
    }
}

TEST_CASE("inadmissible spec raises") {
    // huge radial term drives r^4 negative
    SurfaceSpec bad = spec_of(Family::RadialF3, 0.0, -3.0);
    CHECK_FALSE(is_admissible(bad, 16, 32));
    CHECK_THROWS_AS(generate_mesh(bad, 16, 32), NonPositiveRadiusError);
    CHECK_THROWS_AS(radius(bad, kPi / 2, 0.0), NonPositiveRadiusError);

    SurfaceSpec negative_beta;
    negative_beta.beta = -1.0;
    CHECK_THROWS_AS(negative_beta.validate(), Error);

    SurfaceSpec bad_harmonic = spec_of(Family::ExtendedPhase, 0.02, 0.1, 5);
    CHECK_THROWS_AS(bad_harmonic.validate(), Error);
}

TEST_CASE("beta bound warnings are not errors") {
    CHECK(spec_of(Family::LinearPhase, 0.16, 0.0).warnings().size() == 1);
    CHECK(spec_of(Family::EtaPhase, 0.18, 0.0).warnings().size() == 1);
    CHECK(spec_of(Family::EtaPhase, 0.15, 0.0).warnings().empty());
    CHECK_NOTHROW(generate_mesh(spec_of(Family::LinearPhase, 0.16, 0.0), 16, 32));
}

TEST_CASE("mesh structure matches the grid formula") {
    SurfaceSpec s = spec_of(Family::EtaPhase, 0.05, 0.0);
    for (auto [nt, np] : {std::pair{8, 16}, std::pair{20, 40}}) {
        TriMesh mesh = generate_mesh(s, nt, np);
        CHECK(mesh.vertex_count() == static_cast<std::size_t>(nt * np + 2));
        CHECK(mesh.triangle_count() == static_cast<std::size_t>(2 * nt * np));
        CHECK(is_closed_manifold(mesh));
        CHECK(euler_characteristic(mesh) == 2);
        CHECK_FALSE(has_degenerate_triangles(mesh));
    }
}

TEST_CASE("sphere mesh is exact to rounding") {
    SurfaceSpec s;
    TriMesh mesh = generate_mesh(s, 80, 160);
    double worst = 0.0;
    for (const auto& v : mesh.vertices) worst = std::max(worst, std::abs(norm(v) - 1.0));
    CHECK(worst < 1e-12);
    double volume = mass_properties(mesh).volume;
    CHECK(std::abs(volume - 4.0 * kPi / 3.0) / (4.0 * kPi / 3.0) < 1e-3);
}

TEST_CASE("volume converges with resolution (Richardson)") {
    SurfaceSpec s = spec_of(Family::EtaPhase, 0.05, 0.0);
    double exact_gap_prev = 0.0;
    double v1 = mass_properties(generate_mesh(s, 16, 32)).volume;
    double v2 = mass_properties(generate_mesh(s, 32, 64)).volume;
    double v4 = mass_properties(generate_mesh(s, 64, 128)).volume;
    exact_gap_prev = std::abs(v2 - v1);
    CHECK(std::abs(v4 - v2) < exact_gap_prev);
}

TEST_CASE("canonical cube") {
    TriMesh cube = canonical_body(CanonicalKind::Cube);
    CHECK(cube.triangle_count() == 12);
    CHECK(is_closed_manifold(cube));
    MassProperties mp = mass_properties(cube);
    CHECK(mp.volume == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm(mp.com) < 1e-12);
}

TEST_CASE("canonical sphere volume") {
    TriMesh sphere = canonical_body(CanonicalKind::Sphere, 64);
    double volume = mass_properties(sphere).volume;
    CHECK(std::abs(volume - 4.0 * kPi / 3.0) / (4.0 * kPi / 3.0) < 5e-3);
}

TEST_CASE("canonical cylinder and capsule") {
    TriMesh cyl = canonical_body(CanonicalKind::Cylinder, 32);
    CHECK(is_closed_manifold(cyl));
    MassProperties mp = mass_properties(cyl);
    CHECK(norm(mp.com) < 1e-9);
    // inscribed prism approaches pi r^2 h from below
    CHECK(mp.volume < kPi * 0.25 + 1e-9);
    CHECK(mp.volume > kPi * 0.25 * 0.99);

    TriMesh cap = canonical_body(CanonicalKind::Capsule, 32);
    CHECK(is_closed_manifold(cap));
    MassProperties cp = mass_properties(cap);
    CHECK(norm(cp.com) < 1e-9);
    double exact = kPi * 0.25 * 1.0 + 4.0 / 3.0 * kPi * 0.125;
    CHECK(std::abs(cp.volume - exact) / exact < 0.01);
    double zmin = 0.0, zmax = 0.0;
    for (const auto& v : cap.vertices) {
        zmin = std::min(zmin, v.z);
        zmax = std::max(zmax, v.z);
    }
    CHECK(zmax - zmin == doctest::Approx(2.0));
}
