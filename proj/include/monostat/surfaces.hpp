#pragma once

#include <string>
#include <vector>

#include "monostat/trimesh.hpp"

namespace monostat {

// The analytic surface families. All are quartic-radial perturbations of the
// unit sphere, r^4 = 1 + 4*beta*sin(theta)*cos(phi - P(theta)) [+ eps*f],
// differing in the phase profile P and an optional additive radial term.
enum class Family {
    LinearPhase,   // P(theta) = 5*theta
    EtaPhase,      // P(theta) = eta(theta)
    ExtendedPhase, // P(theta) = eta + a_k * sin(k * eta), coeff = a_k
    RadialF3,      // P = eta, + coeff * sin^2(theta) * cos(2*phi)
    RadialF4,      // P = eta, + coeff * cos(theta) * sin(theta) * sin(phi)
};

std::string family_name(Family f);
Family family_from_name(const std::string& name); // throws Error on unknown name

struct SurfaceSpec {
    Family family = Family::EtaPhase;
    double beta = 0.0;
    double coeff = 0.0; // a_k for ExtendedPhase, eps for RadialF3/F4, unused otherwise
    int harmonic = 1;   // k for ExtendedPhase only, in {1, 2, 3}

    // True when the surface degenerates to the exact unit sphere (beta = 0 and,
    // for the radial families, coeff = 0; phase families are spheres at beta = 0
    // for any coefficient since the phase only modulates the beta term).
    bool is_sphere() const;

    // Hard precondition violations (beta < 0, harmonic out of {1,2,3}).
    // Throws Error. Does not evaluate r^4 positivity; see is_admissible.
    void validate() const;

    // Published beta bounds are advisory: exceeding them yields a warning
    // string, not an error.
    std::vector<std::string> warnings() const;
};

// Phase profile (3*pi/2)*(cos(theta) - cos^3(theta)/3). Odd about theta = pi/2;
// sweeps from +pi at theta = 0 to -pi at theta = pi.
double eta(double theta);

// Family phase P(theta) at a given polar angle.
double phase(const SurfaceSpec& spec, double theta);

// The quartic expression before taking the root; may be <= 0 for inadmissible specs.
double radius_pow4(const SurfaceSpec& spec, double theta, double phi);

// Positive fourth root of radius_pow4. Throws NonPositiveRadiusError when the
// expression is not strictly positive.
double radius(const SurfaceSpec& spec, double theta, double phi);

// Surface point r(theta,phi) * (sin t cos p, sin t sin p, cos t).
Vec3 surface_point(const SurfaceSpec& spec, double theta, double phi);

// Checks r^4 > 0 on an n_theta x n_phi grid plus a 4x oversampled grid.
bool is_admissible(const SurfaceSpec& spec, int n_theta = 100, int n_phi = 200);

// Closed lat-long mesh: cell-centered theta rings theta_i = pi*(i+0.5)/n_theta,
// uniform phi, plus one apex vertex per pole with a triangle fan. Produces
// n_theta*n_phi + 2 vertices and 2*n_theta*n_phi triangles, outward-oriented.
// Throws NonPositiveRadiusError for inadmissible specs.
TriMesh generate_mesh(const SurfaceSpec& spec, int n_theta = 100, int n_phi = 200);

enum class CanonicalKind { Sphere, Cube, Cylinder, Capsule };

std::string canonical_kind_name(CanonicalKind kind);

// Validation bodies with known equilibrium structure:
//   Sphere   unit radius (lat-long, resolution x 2*resolution)
//   Cube     axis-aligned unit cube centered at the origin (12 triangles)
//   Cylinder radius 0.5, height 1.0, axis z, capped with center-vertex fans
//   Capsule  cylinder radius 0.5 with hemispherical caps, total height 2.0
TriMesh canonical_body(CanonicalKind kind, int resolution = 64);

} // namespace monostat
