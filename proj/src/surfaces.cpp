#include "monostat/surfaces.hpp"

#include <cmath>

#include "monostat/errors.hpp"

namespace monostat {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Rings from north apex to south apex around the z axis. Each profile entry
// is (radial distance, z). Fans connect the apexes to the first/last ring.
TriMesh revolve(const std::vector<std::pair<double, double>>& profile, int segments,
                double apex_north_z, double apex_south_z) {
    TriMesh mesh;
    const int m = segments;
    const int rings = static_cast<int>(profile.size());
    mesh.vertices.reserve(static_cast<std::size_t>(rings) * m + 2);
    mesh.vertices.push_back({0.0, 0.0, apex_north_z});
    for (const auto& [rad, z] : profile) {
        for (int j = 0; j < m; ++j) {
            double phi = 2.0 * kPi * j / m;
            mesh.vertices.push_back({rad * std::cos(phi), rad * std::sin(phi), z});
        }
    }
    mesh.vertices.push_back({0.0, 0.0, apex_south_z});

    const std::uint32_t north = 0;
    const std::uint32_t south = static_cast<std::uint32_t>(mesh.vertices.size() - 1);
    auto ring = [m](int i, int j) {
        return static_cast<std::uint32_t>(1 + i * m + ((j % m + m) % m));
    };

    mesh.triangles.reserve(static_cast<std::size_t>(2 * rings) * m);
    for (int j = 0; j < m; ++j)
        mesh.triangles.push_back({north, ring(0, j), ring(0, j + 1)});
    for (int i = 0; i + 1 < rings; ++i) {
        for (int j = 0; j < m; ++j) {
            // Quad (i,j)-(i,j+1)-(i+1,j+1)-(i+1,j), outward winding.
            mesh.triangles.push_back({ring(i, j), ring(i + 1, j), ring(i + 1, j + 1)});
            mesh.triangles.push_back({ring(i, j), ring(i + 1, j + 1), ring(i, j + 1)});
        }
    }
    for (int j = 0; j < m; ++j)
        mesh.triangles.push_back({south, ring(rings - 1, j + 1), ring(rings - 1, j)});
    return mesh;
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::LinearPhase: return "linear-phase";
        case Family::EtaPhase: return "eta-phase";
        case Family::ExtendedPhase: return "extended-phase";
        case Family::RadialF3: return "radial-f3";
        case Family::RadialF4: return "radial-f4";
    }
    throw Error("unknown family enum value");
}

Family family_from_name(const std::string& name) {
    if (name == "linear-phase") return Family::LinearPhase;
    if (name == "eta-phase") return Family::EtaPhase;
    if (name == "extended-phase") return Family::ExtendedPhase;
    if (name == "radial-f3") return Family::RadialF3;
    if (name == "radial-f4") return Family::RadialF4;
    throw Error("unknown surface family: " + name);
}

bool SurfaceSpec::is_sphere() const {
    if (beta != 0.0) return false;
    if (family == Family::RadialF3 || family == Family::RadialF4) return coeff == 0.0;
    return true; // phase families: the phase only modulates the beta term
}

void SurfaceSpec::validate() const {
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw Error("surface spec requires beta >= 0");
    if (!std::isfinite(coeff))
        throw Error("surface spec coefficient must be finite");
    if (family == Family::ExtendedPhase && (harmonic < 1 || harmonic > 3))
        throw Error("extended-phase harmonic must be 1, 2 or 3");
}

std::vector<std::string> SurfaceSpec::warnings() const {
    std::vector<std::string> out;
    if (family == Family::LinearPhase && beta > 0.15)
        out.push_back("beta exceeds the published linear-phase bound 0.15");
    if (family == Family::EtaPhase && beta > 0.17)
        out.push_back("beta exceeds the published eta-phase bound 0.17");
    return out;
}

double eta(double theta) {
    if (theta < -1e-12 || theta > kPi + 1e-12)
        throw Error("eta: theta outside [0, pi]");
    double c = std::cos(theta);
    return 1.5 * kPi * (c - c * c * c / 3.0);
}

double phase(const SurfaceSpec& spec, double theta) {
    switch (spec.family) {
        case Family::LinearPhase:
            return 5.0 * theta;
        case Family::EtaPhase:
        case Family::RadialF3:
        case Family::RadialF4:
            return eta(theta);
        case Family::ExtendedPhase: {
            double e = eta(theta);
            return e + spec.coeff * std::sin(spec.harmonic * e);
        }
    }
    throw Error("unknown family enum value");
}

double radius_pow4(const SurfaceSpec& spec, double theta, double phi) {
    double st = std::sin(theta);
    double r4 = 1.0 + 4.0 * spec.beta * st * std::cos(phi - phase(spec, theta));
    if (spec.family == Family::RadialF3)
        r4 += spec.coeff * st * st * std::cos(2.0 * phi);
    else if (spec.family == Family::RadialF4)
        r4 += spec.coeff * std::cos(theta) * st * std::sin(phi);
    return r4;
}

double radius(const SurfaceSpec& spec, double theta, double phi) {
    double r4 = radius_pow4(spec, theta, phi);
    if (!(r4 > 0.0))
        throw NonPositiveRadiusError("r^4 <= 0 at theta=" + std::to_string(theta) +
                                     " phi=" + std::to_string(phi));
    return std::pow(r4, 0.25);
}

Vec3 surface_point(const SurfaceSpec& spec, double theta, double phi) {
    double r = radius(spec, theta, phi);
    double st = std::sin(theta);
    return {r * st * std::cos(phi), r * st * std::sin(phi), r * std::cos(theta)};
}

bool is_admissible(const SurfaceSpec& spec, int n_theta, int n_phi) {
    spec.validate();
    for (int factor : {1, 4}) {
        int nt = n_theta * factor, np = n_phi * factor;
        for (int i = 0; i <= nt; ++i) {
            double theta = kPi * i / nt;
            for (int j = 0; j < np; ++j) {
                double phi = 2.0 * kPi * j / np;
                if (!(radius_pow4(spec, theta, phi) > 0.0)) return false;
            }
        }
    }
    return true;
}

TriMesh generate_mesh(const SurfaceSpec& spec, int n_theta, int n_phi) {
    spec.validate();
    if (n_theta < 8 || n_phi < 16)
        throw Error("generate_mesh requires n_theta >= 8 and n_phi >= 16");

    TriMesh mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(n_theta) * n_phi + 2);
    mesh.vertices.push_back({0.0, 0.0, radius(spec, 0.0, 0.0)});
    for (int i = 0; i < n_theta; ++i) {
        double theta = kPi * (i + 0.5) / n_theta;
        for (int j = 0; j < n_phi; ++j) {
            double phi = 2.0 * kPi * j / n_phi;
            mesh.vertices.push_back(surface_point(spec, theta, phi));
        }
    }
    mesh.vertices.push_back({0.0, 0.0, -radius(spec, kPi, 0.0)});

    const std::uint32_t north = 0;
    const std::uint32_t south = static_cast<std::uint32_t>(mesh.vertices.size() - 1);
    auto ring = [n_phi](int i, int j) {
        return static_cast<std::uint32_t>(1 + i * n_phi + (j % n_phi));
    };

    mesh.triangles.reserve(static_cast<std::size_t>(2 * n_theta) * n_phi);
    for (int j = 0; j < n_phi; ++j)
        mesh.triangles.push_back({north, ring(0, j), ring(0, j + 1)});
    for (int i = 0; i + 1 < n_theta; ++i) {
        for (int j = 0; j < n_phi; ++j) {
            mesh.triangles.push_back({ring(i, j), ring(i + 1, j), ring(i + 1, j + 1)});
            mesh.triangles.push_back({ring(i, j), ring(i + 1, j + 1), ring(i, j + 1)});
        }
    }
    for (int j = 0; j < n_phi; ++j)
        mesh.triangles.push_back({south, ring(n_theta - 1, j + 1), ring(n_theta - 1, j)});

    mesh.comment = family_name(spec.family) + " beta=" + std::to_string(spec.beta) +
                   " coeff=" + std::to_string(spec.coeff);
    if (spec.family == Family::ExtendedPhase)
        mesh.comment += " k=" + std::to_string(spec.harmonic);
    return mesh;
}

std::string canonical_kind_name(CanonicalKind kind) {
    switch (kind) {
        case CanonicalKind::Sphere: return "sphere";
        case CanonicalKind::Cube: return "cube";
        case CanonicalKind::Cylinder: return "cylinder";
        case CanonicalKind::Capsule: return "capsule";
    }
    throw Error("unknown canonical kind");
}

TriMesh canonical_body(CanonicalKind kind, int resolution) {
    if (resolution < 8) throw Error("canonical_body requires resolution >= 8");

    switch (kind) {
        case CanonicalKind::Sphere: {
            SurfaceSpec sphere;
            sphere.beta = 0.0;
            TriMesh mesh = generate_mesh(sphere, resolution, 2 * resolution);
            mesh.comment = "sphere r=1";
            return mesh;
        }
        case CanonicalKind::Cube: {
            TriMesh mesh;
            for (int i = 0; i < 8; ++i)
                mesh.vertices.push_back({(i & 1) ? 0.5 : -0.5, (i & 2) ? 0.5 : -0.5,
                                         (i & 4) ? 0.5 : -0.5});
            mesh.triangles = {{0, 2, 3}, {0, 3, 1}, {4, 5, 7}, {4, 7, 6},
                              {0, 1, 5}, {0, 5, 4}, {2, 6, 7}, {2, 7, 3},
                              {0, 4, 6}, {0, 6, 2}, {1, 3, 7}, {1, 7, 5}};
            mesh.comment = "unit cube";
            return mesh;
        }
        case CanonicalKind::Cylinder: {
            const int m = 2 * resolution;
            const int walls = resolution;
            std::vector<std::pair<double, double>> profile;
            for (int i = 0; i <= walls; ++i)
                profile.emplace_back(0.5, 0.5 - static_cast<double>(i) / walls);
            TriMesh mesh = revolve(profile, m, 0.5, -0.5);
            mesh.comment = "cylinder r=0.5 h=1";
            return mesh;
        }
        case CanonicalKind::Capsule: {
            const int m = 2 * resolution;
            const int n_h = resolution / 2;
            const int walls = resolution / 2;
            std::vector<std::pair<double, double>> profile;
            for (int i = 1; i <= n_h; ++i) {
                double alpha = 0.5 * kPi * i / n_h;
                profile.emplace_back(0.5 * std::sin(alpha), 0.5 + 0.5 * std::cos(alpha));
            }
            for (int i = 1; i < walls; ++i)
                profile.emplace_back(0.5, 0.5 - static_cast<double>(i) / walls);
            for (int i = n_h; i >= 1; --i) {
                double alpha = 0.5 * kPi * i / n_h;
                profile.emplace_back(0.5 * std::sin(alpha), -0.5 - 0.5 * std::cos(alpha));
            }
            TriMesh mesh = revolve(profile, m, 1.0, -1.0);
            mesh.comment = "capsule r=0.5 h=2";
            return mesh;
        }
    }
    throw Error("unknown canonical kind");
}

} // namespace monostat
