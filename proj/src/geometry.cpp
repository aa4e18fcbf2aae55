#include "monostat/geometry.hpp"

#include <cmath>

#include "monostat/errors.hpp"

namespace monostat {

MassProperties mass_properties(const TriMesh& mesh, const std::optional<Vec3>& reference) {
    if (!is_closed_manifold(mesh))
        throw OpenMeshError("mass_properties: mesh is not a closed oriented manifold");

    Vec3 ref;
    if (reference) {
        ref = *reference;
    } else {
        for (const auto& v : mesh.vertices) ref += v;
        ref = ref / static_cast<double>(mesh.vertices.size());
    }

    double volume = 0.0;
    Vec3 moment; // volume-weighted centroid accumulator, relative to ref
    for (const auto& t : mesh.triangles) {
        Vec3 a = mesh.vertices[t[0]] - ref;
        Vec3 b = mesh.vertices[t[1]] - ref;
        Vec3 c = mesh.vertices[t[2]] - ref;
        double v6 = dot(a, cross(b, c)); // 6x signed tetra volume
        volume += v6;
        moment += (a + b + c) * v6; // tetra centroid is (a+b+c+0)/4; factor folded below
    }
    volume /= 6.0;
    if (!(volume > 0.0))
        throw NegativeVolumeError("mass_properties: non-positive signed volume " +
                                  std::to_string(volume));
    Vec3 com = ref + moment / (6.0 * 4.0 * volume);
    return {volume, com};
}

double convexity_ratio(const TriMesh& mesh) {
    double mesh_volume = mass_properties(mesh).volume;
    TriMesh hull = convex_hull(mesh.vertices);
    double hull_volume = mass_properties(hull).volume;
    return mesh_volume / hull_volume;
}

bool convex_by_dihedral(const TriMesh& mesh, double tol_rel) {
    Vec3 lo = mesh.vertices.front(), hi = lo;
    for (const auto& v : mesh.vertices) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    double tol = tol_rel * norm(hi - lo);

    for (const auto& e : collect_edges(mesh)) {
        if (e.tri0 == e.tri1) throw OpenMeshError("convex_by_dihedral: boundary edge");
        const Triangle& t0 = mesh.triangles[e.tri0];
        const Triangle& t1 = mesh.triangles[e.tri1];
        Vec3 n0 = cross(mesh.vertices[t0[1]] - mesh.vertices[t0[0]],
                        mesh.vertices[t0[2]] - mesh.vertices[t0[0]]);
        double n0len = norm(n0);
        if (n0len == 0.0) continue; // degenerate sliver; leave to the hull path
        n0 = n0 / n0len;
        // Vertex of t1 not on the shared edge.
        Vec3 opposite;
        for (int i = 0; i < 3; ++i)
            if (t1[i] != e.a && t1[i] != e.b) opposite = mesh.vertices[t1[i]];
        if (dot(opposite - mesh.vertices[t0[0]], n0) > tol) return false;
    }
    return true;
}

double asymmetry(const TriMesh& mesh) {
    Vec3 com = mass_properties(mesh).com;
    double n = static_cast<double>(mesh.vertices.size());
    double mean = 0.0;
    for (const auto& v : mesh.vertices) mean += norm(v - com);
    mean /= n;
    double var = 0.0;
    for (const auto& v : mesh.vertices) {
        double d = norm(v - com) - mean;
        var += d * d;
    }
    var /= n;
    return std::sqrt(var) / mean;
}

bool point_in_hull(const TriMesh& hull, const Vec3& p, double tol) {
    for (const auto& t : hull.triangles) {
        Vec3 n = triangle_normal(hull, t);
        if (dot(p - hull.vertices[t[0]], n) > tol) return false;
    }
    return true;
}

} // namespace monostat
