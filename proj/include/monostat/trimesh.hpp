#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "monostat/vec3.hpp"

namespace monostat {

using Triangle = std::array<std::uint32_t, 3>;

// Closed triangulated surface. Triangles wind counter-clockwise seen from
// outside, so the signed volume of a well-formed mesh is positive.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<Triangle> triangles;
    // Free-form label carried through STL round-trips (stored in the header).
    std::string comment;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t triangle_count() const { return triangles.size(); }
};

// Number of undirected edges; meaningful for closed meshes (each edge shared
// by exactly two triangles).
std::size_t edge_count(const TriMesh& mesh);

// Every directed edge must appear exactly once and be matched by its
// reverse. Implies closed + consistently oriented.
bool is_closed_manifold(const TriMesh& mesh);

// V - E + F (2 for a topological sphere).
long euler_characteristic(const TriMesh& mesh);

// Area below `tol` counts as degenerate.
bool has_degenerate_triangles(const TriMesh& mesh, double tol = 1e-12);

double triangle_area(const TriMesh& mesh, const Triangle& t);

// Unit outward normal assuming CCW winding.
Vec3 triangle_normal(const TriMesh& mesh, const Triangle& t);

TriMesh transformed(const TriMesh& mesh, const Mat3& rot, const Vec3& shift = {});

// Undirected edge list with the two incident triangles per edge.
struct MeshEdge {
    std::uint32_t a, b;        // a < b
    std::uint32_t tri0, tri1;  // incident triangles
};
std::vector<MeshEdge> collect_edges(const TriMesh& mesh);

} // namespace monostat
