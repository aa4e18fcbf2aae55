#include <doctest.h>

#include <cmath>
#include <random>

#include "monostat/errors.hpp"
#include "monostat/geometry.hpp"
#include "monostat/surfaces.hpp"

using namespace monostat;

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

TEST_CASE("mass properties of the unit cube") {
    TriMesh cube = canonical_body(CanonicalKind::Cube);
    MassProperties mp = mass_properties(cube);
    CHECK(mp.volume == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm(mp.com) < 1e-12);

    SUBCASE("translation equivariance") {
        TriMesh moved = transformed(cube, Mat3{}, {0.3, 0.0, 0.0});
        MassProperties mm = mass_properties(moved);
        CHECK(mm.volume == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(mm.com.x - 0.3) < 1e-12);
        CHECK(std::abs(mm.com.y) < 1e-12);
        CHECK(std::abs(mm.com.z) < 1e-12);
    }
    SUBCASE("reference point does not matter") {
        MassProperties a = mass_properties(cube, Vec3{0, 0, 0});
        MassProperties b = mass_properties(cube, Vec3{17.0, -3.0, 2.5});
        CHECK(a.volume == doctest::Approx(b.volume).epsilon(1e-12));
        CHECK(norm(a.com - b.com) < 1e-12);
    }
}

TEST_CASE("mass properties reject broken meshes") {
    TriMesh open;
    open.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    open.triangles = {{0, 1, 2}};
    CHECK_THROWS_AS(mass_properties(open), OpenMeshError);

    TriMesh inverted = canonical_body(CanonicalKind::Cube);
    for (auto& t : inverted.triangles) std::swap(t[1], t[2]);
    CHECK_THROWS_AS(mass_properties(inverted), NegativeVolumeError);
}

TEST_CASE("sphere mesh volume near 4pi/3") {
    SurfaceSpec s;
    TriMesh mesh = generate_mesh(s, 100, 200);
    CHECK(mass_properties(mesh).volume == doctest::Approx(4.18879).epsilon(1e-3));
}

TEST_CASE("hull of cube corners discards interior point") {
    std::vector<Vec3> pts;
    for (int i = 0; i < 8; ++i)
        pts.push_back({(i & 1) ? 0.5 : -0.5, (i & 2) ? 0.5 : -0.5, (i & 4) ? 0.5 : -0.5});
    pts.push_back({0.0, 0.0, 0.0});
    TriMesh hull = convex_hull(pts);
    CHECK(hull.vertex_count() == 8);
    CHECK(is_closed_manifold(hull));
    CHECK(mass_properties(hull).volume == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hull contains every input point") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Vec3> pts;
    while (pts.size() < 100) {
        Vec3 p{u(rng), u(rng), u(rng)};
        if (norm(p) <= 1.0) pts.push_back(p);
    }
    TriMesh hull = convex_hull(pts);
    CHECK(is_closed_manifold(hull));
    for (const auto& p : pts) CHECK(point_in_hull(hull, p, 1e-10));
}

TEST_CASE("hull idempotence") {
    SurfaceSpec s;
    s.family = Family::EtaPhase;
    s.beta = 0.05;
    TriMesh mesh = generate_mesh(s, 40, 80);
    TriMesh hull = convex_hull(mesh.vertices);
    TriMesh hull2 = convex_hull(hull.vertices);
    double v1 = mass_properties(hull).volume;
    double v2 = mass_properties(hull2).volume;
    CHECK(std::abs(v1 - v2) < 1e-10);
    // hull of a convex body's vertices cannot lose volume
    CHECK(mass_properties(mesh).volume <= v1 * (1.0 + 1e-9));
}

TEST_CASE("hull rejects degenerate input") {
    std::vector<Vec3> planar;
    for (int i = 0; i < 10; ++i)
        planar.push_back({static_cast<double>(i), static_cast<double>(i % 3), 0.0});
    CHECK_THROWS_AS(convex_hull(planar), DegenerateInputError);

    std::vector<Vec3> line = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}};
    CHECK_THROWS_AS(convex_hull(line), DegenerateInputError);
}

TEST_CASE("convexity ratio") {
    TriMesh cube = canonical_body(CanonicalKind::Cube);
    CHECK(convexity_ratio(cube) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(convex_by_dihedral(cube));

    SurfaceSpec convex_spec;
    convex_spec.family = Family::EtaPhase;
    convex_spec.beta = 0.05;
    TriMesh convex_mesh = generate_mesh(convex_spec, 100, 200);
    CHECK(convexity_ratio(convex_mesh) > 0.999);

    SurfaceSpec nonconvex_spec;
    nonconvex_spec.family = Family::EtaPhase;
    nonconvex_spec.beta = 0.10;
    TriMesh nonconvex_mesh = generate_mesh(nonconvex_spec, 100, 200);
    CHECK_FALSE(convex_by_dihedral(nonconvex_mesh));
    CHECK(convexity_ratio(nonconvex_mesh) <= 0.999);
}

TEST_CASE("asymmetry") {
    TriMesh sphere = canonical_body(CanonicalKind::Sphere, 48);
    CHECK(asymmetry(sphere) < 1e-10);

    SurfaceSpec s;
    s.family = Family::EtaPhase;
    s.beta = 0.05;
    TriMesh mesh = generate_mesh(s, 60, 120);
    CHECK(asymmetry(mesh) > 0.0);
}

TEST_CASE("rotation invariance of volume, ratio and asymmetry") {
    SurfaceSpec s;
    s.family = Family::EtaPhase;
    s.beta = 0.05;
    TriMesh mesh = generate_mesh(s, 40, 80);
    double volume = mass_properties(mesh).volume;
    double ratio = convexity_ratio(mesh);
    double asym = asymmetry(mesh);

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
        Mat3 rot = rotation({u(rng), u(rng), u(rng)}, 2.0 * kPi * (0.5 + u(rng)));
        TriMesh moved = transformed(mesh, rot);
        CHECK(std::abs(mass_properties(moved).volume - volume) < 1e-9);
        CHECK(std::abs(convexity_ratio(moved) - ratio) < 1e-9);
        CHECK(std::abs(asymmetry(moved) - asym) < 1e-9);
    }
}
