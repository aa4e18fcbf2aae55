#pragma once

#include <optional>
#include <vector>

#include "monostat/trimesh.hpp"

namespace monostat {

struct MassProperties {
    double volume = 0.0;
    Vec3 com;
};

// Signed-tetrahedron decomposition against a reference point (defaults to the
// vertex centroid for conditioning; the result is reference-independent).
// Throws OpenMeshError / NegativeVolumeError.
MassProperties mass_properties(const TriMesh& mesh,
                               const std::optional<Vec3>& reference = std::nullopt);

// Incremental quickhull. Epsilon is 1e-10 relative to the bounding-box
// diagonal. Output mesh contains only hull vertices, outward-oriented.
// Throws DegenerateInputError for collinear/coplanar input.
TriMesh convex_hull(const std::vector<Vec3>& points);

// mesh volume / hull volume, in (0, 1]. A body counts as convex above 0.999.
double convexity_ratio(const TriMesh& mesh);

constexpr double kConvexityThreshold = 0.999;

// Fast certain-convexity test: true when every interior edge is locally
// convex, i.e. each triangle's opposite vertex lies on or below its
// neighbor's plane. A closed oriented mesh passing this is globally convex
// (ratio 1 up to hull epsilon); failing it says nothing conclusive.
bool convex_by_dihedral(const TriMesh& mesh, double tol_rel = 1e-12);

// Coefficient of variation (std/mean) of vertex distances from the COM.
double asymmetry(const TriMesh& mesh);

// True if p is inside or on the hull within tol (checks all face planes).
bool point_in_hull(const TriMesh& hull, const Vec3& p, double tol = 1e-10);

} // namespace monostat
