#include "monostat/trimesh.hpp"

#include <algorithm>
#include <unordered_map>

#include "monostat/errors.hpp"

namespace monostat {

namespace {

inline std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

std::size_t edge_count(const TriMesh& mesh) {
    return collect_edges(mesh).size();
}

bool is_closed_manifold(const TriMesh& mesh) {
    if (mesh.triangles.empty()) return false;
    std::unordered_map<std::uint64_t, int> directed;
    directed.reserve(mesh.triangles.size() * 3);
    for (const auto& t : mesh.triangles) {
        for (int i = 0; i < 3; ++i) {
            std::uint32_t a = t[i], b = t[(i + 1) % 3];
            if (a == b) return false;
            if (++directed[edge_key(a, b)] > 1) return false; // repeated directed edge
        }
    }
    for (const auto& [key, count] : directed) {
        std::uint32_t a = static_cast<std::uint32_t>(key >> 32);
        std::uint32_t b = static_cast<std::uint32_t>(key & 0xffffffffu);
        auto rev = directed.find(edge_key(b, a));
        if (rev == directed.end()) return false; // boundary edge
    }
    return true;
}

long euler_characteristic(const TriMesh& mesh) {
    return static_cast<long>(mesh.vertex_count()) - static_cast<long>(edge_count(mesh)) +
           static_cast<long>(mesh.triangle_count());
}

double triangle_area(const TriMesh& mesh, const Triangle& t) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    return 0.5 * norm(cross(b - a, c - a));
}

Vec3 triangle_normal(const TriMesh& mesh, const Triangle& t) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    return normalized(cross(b - a, c - a));
}

bool has_degenerate_triangles(const TriMesh& mesh, double tol) {
    for (const auto& t : mesh.triangles)
        if (triangle_area(mesh, t) < tol) return true;
    return false;
}

TriMesh transformed(const TriMesh& mesh, const Mat3& rot, const Vec3& shift) {
    TriMesh out = mesh;
    for (auto& v : out.vertices) v = rot * v + shift;
    return out;
}

std::vector<MeshEdge> collect_edges(const TriMesh& mesh) {
    std::unordered_map<std::uint64_t, MeshEdge> edges;
    edges.reserve(mesh.triangles.size() * 3 / 2);
    for (std::uint32_t ti = 0; ti < mesh.triangles.size(); ++ti) {
        const auto& t = mesh.triangles[ti];
        for (int i = 0; i < 3; ++i) {
            std::uint32_t a = t[i], b = t[(i + 1) % 3];
            std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
            auto [it, fresh] = edges.try_emplace(edge_key(lo, hi),
                                                 MeshEdge{lo, hi, ti, ti});
            if (!fresh) {
                if (it->second.tri1 != it->second.tri0)
                    throw OpenMeshError("edge shared by more than two triangles");
                it->second.tri1 = ti;
            }
        }
    }
    std::vector<MeshEdge> out;
    out.reserve(edges.size());
    for (auto& [key, e] : edges) out.push_back(e);
    // Deterministic order regardless of hash-map iteration.
    std::sort(out.begin(), out.end(), [](const MeshEdge& l, const MeshEdge& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    });
    return out;
}

} // namespace monostat
