// Incremental quickhull over 3D point sets. Face-based representation with
// outside-point sets; visibility epsilon scaled to the bounding-box diagonal.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <unordered_map>
#include <vector>

#include "monostat/errors.hpp"
#include "monostat/geometry.hpp"

namespace monostat {

namespace {

struct HullFace {
    std::uint32_t v[3];
    Vec3 normal; // unit
    double offset = 0.0;
    std::uint32_t nbr[3] = {0, 0, 0}; // across edge (v[i], v[i+1])
    std::vector<std::uint32_t> outside;
    std::uint32_t far_pt = 0;
    double far_dist = 0.0;
    bool alive = true;
};

class QuickHull {
public:
    explicit QuickHull(const std::vector<Vec3>& points) : pts_(points) {}

    TriMesh build() {
        if (pts_.size() < 4)
            throw DegenerateInputError("convex_hull: need at least 4 points");
        compute_epsilon();
        initial_tetrahedron();
        assign_initial_outside();

        std::deque<std::uint32_t> pending;
        for (std::uint32_t f = 0; f < faces_.size(); ++f)
            if (!faces_[f].outside.empty()) pending.push_back(f);

        while (!pending.empty()) {
            std::uint32_t fi = pending.front();
            pending.pop_front();
            if (!faces_[fi].alive || faces_[fi].outside.empty()) continue;
            for (std::uint32_t nf : add_point(fi, faces_[fi].far_pt))
                if (!faces_[nf].outside.empty()) pending.push_back(nf);
        }
        return extract_mesh();
    }

private:
    const std::vector<Vec3>& pts_;
    std::vector<HullFace> faces_;
    double eps_ = 0.0;

    double dist(const HullFace& f, std::uint32_t p) const {
        return dot(f.normal, pts_[p]) - f.offset;
    }

    void compute_epsilon() {
        Vec3 lo = pts_[0], hi = pts_[0];
        for (const auto& p : pts_) {
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
        }
        eps_ = 1e-10 * std::max(norm(hi - lo), 1e-300);
    }

    std::uint32_t make_face(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        HullFace f;
        f.v[0] = a;
        f.v[1] = b;
        f.v[2] = c;
        Vec3 n = cross(pts_[b] - pts_[a], pts_[c] - pts_[a]);
        double len = norm(n);
        if (len == 0.0) throw DegenerateInputError("convex_hull: degenerate face");
        f.normal = n / len;
        f.offset = dot(f.normal, pts_[a]);
        faces_.push_back(std::move(f));
        return static_cast<std::uint32_t>(faces_.size() - 1);
    }

    void wire_neighbors(const std::vector<std::uint32_t>& face_ids) {
        std::unordered_map<std::uint64_t, std::pair<std::uint32_t, int>> owner;
        auto key = [](std::uint32_t a, std::uint32_t b) {
            return (static_cast<std::uint64_t>(a) << 32) | b;
        };
        for (std::uint32_t fi : face_ids)
            for (int e = 0; e < 3; ++e)
                owner[key(faces_[fi].v[e], faces_[fi].v[(e + 1) % 3])] = {fi, e};
        for (std::uint32_t fi : face_ids) {
            for (int e = 0; e < 3; ++e) {
                auto it = owner.find(key(faces_[fi].v[(e + 1) % 3], faces_[fi].v[e]));
                if (it == owner.end())
                    throw Error("convex_hull: unmatched edge during wiring");
                faces_[fi].nbr[e] = it->second.first;
            }
        }
    }

    void initial_tetrahedron() {
        // Extremes on each axis, then a spread-maximizing pair among them.
        std::uint32_t extreme[6] = {0, 0, 0, 0, 0, 0};
        for (std::uint32_t i = 1; i < pts_.size(); ++i) {
            const Vec3& p = pts_[i];
            if (p.x < pts_[extreme[0]].x) extreme[0] = i;
            if (p.x > pts_[extreme[1]].x) extreme[1] = i;
            if (p.y < pts_[extreme[2]].y) extreme[2] = i;
            if (p.y > pts_[extreme[3]].y) extreme[3] = i;
            if (p.z < pts_[extreme[4]].z) extreme[4] = i;
            if (p.z > pts_[extreme[5]].z) extreme[5] = i;
        }
        std::uint32_t p0 = extreme[0], p1 = extreme[1];
        double best = -1.0;
        for (int i = 0; i < 6; ++i) {
            for (int j = i + 1; j < 6; ++j) {
                double d = norm2(pts_[extreme[i]] - pts_[extreme[j]]);
                if (d > best) {
                    best = d;
                    p0 = extreme[i];
                    p1 = extreme[j];
                }
            }
        }
        if (std::sqrt(best) < eps_)
            throw DegenerateInputError("convex_hull: all points coincide");

        Vec3 axis = pts_[p1] - pts_[p0];
        std::uint32_t p2 = p0;
        best = -1.0;
        for (std::uint32_t i = 0; i < pts_.size(); ++i) {
            double d = norm2(cross(axis, pts_[i] - pts_[p0]));
            if (d > best) {
                best = d;
                p2 = i;
            }
        }
        if (std::sqrt(best) / norm(axis) < eps_)
            throw DegenerateInputError("convex_hull: points are collinear");

        Vec3 n = cross(axis, pts_[p2] - pts_[p0]);
        n = n / norm(n);
        std::uint32_t p3 = p0;
        best = 0.0;
        for (std::uint32_t i = 0; i < pts_.size(); ++i) {
            double d = std::abs(dot(n, pts_[i] - pts_[p0]));
            if (d > best) {
                best = d;
                p3 = i;
            }
        }
        if (best < eps_)
            throw DegenerateInputError("convex_hull: points are coplanar");

        if (dot(n, pts_[p3] - pts_[p0]) > 0.0) std::swap(p1, p2); // put p3 below

        make_face(p0, p1, p2);
        make_face(p0, p2, p3);
        make_face(p0, p3, p1);
        make_face(p1, p3, p2);
        wire_neighbors({0, 1, 2, 3});
    }

    void assign_initial_outside() {
        for (std::uint32_t i = 0; i < pts_.size(); ++i) {
            for (auto& f : faces_) {
                double d = dot(f.normal, pts_[i]) - f.offset;
                if (d > eps_) {
                    f.outside.push_back(i);
                    if (d > f.far_dist) {
                        f.far_dist = d;
                        f.far_pt = i;
                    }
                    break;
                }
            }
        }
    }

    // Grow the hull to include point `eye`, seen from face `start`.
    // Returns the newly created faces.
    std::vector<std::uint32_t> add_point(std::uint32_t start, std::uint32_t eye) {
        // Flood-fill the visible region.
        std::vector<std::uint32_t> visible{start};
        std::vector<char> seen(faces_.size(), 0);
        seen[start] = 1;
        struct Horizon {
            std::uint32_t a, b, kept;
        };
        std::vector<Horizon> horizon;
        for (std::size_t qi = 0; qi < visible.size(); ++qi) {
            std::uint32_t fi = visible[qi];
            for (int e = 0; e < 3; ++e) {
                std::uint32_t ni = faces_[fi].nbr[e];
                if (seen[ni]) continue;
                if (dist(faces_[ni], eye) > eps_) {
                    seen[ni] = 1;
                    visible.push_back(ni);
                } else {
                    horizon.push_back({faces_[fi].v[e], faces_[fi].v[(e + 1) % 3], ni});
                }
            }
        }

        // Gather orphaned candidate points, drop the eye itself.
        std::vector<std::uint32_t> orphans;
        for (std::uint32_t fi : visible) {
            for (std::uint32_t p : faces_[fi].outside)
                if (p != eye) orphans.push_back(p);
            faces_[fi].outside.clear();
            faces_[fi].alive = false;
        }

        // New fan: one face per horizon edge, wound (a, b, eye).
        std::vector<std::uint32_t> fresh;
        std::unordered_map<std::uint32_t, std::uint32_t> by_start; // a -> face
        std::unordered_map<std::uint32_t, std::uint32_t> by_end;   // b -> face
        fresh.reserve(horizon.size());
        for (const auto& h : horizon) {
            std::uint32_t nf = make_face(h.a, h.b, eye);
            fresh.push_back(nf);
            if (!by_start.emplace(h.a, nf).second || !by_end.emplace(h.b, nf).second)
                throw Error("convex_hull: pinched horizon loop");
        }
        for (std::size_t i = 0; i < horizon.size(); ++i) {
            const auto& h = horizon[i];
            std::uint32_t nf = fresh[i];
            faces_[nf].nbr[0] = h.kept;
            // Fix the kept face's pointer from the dead face to the new one.
            HullFace& kept = faces_[h.kept];
            for (int e = 0; e < 3; ++e)
                if (kept.v[e] == h.b && kept.v[(e + 1) % 3] == h.a) kept.nbr[e] = nf;
            auto next = by_start.find(h.b); // shares edge (b, eye)
            auto prev = by_end.find(h.a);   // shares edge (eye, a)
            if (next == by_start.end() || prev == by_end.end())
                throw Error("convex_hull: open horizon loop");
            faces_[nf].nbr[1] = next->second;
            faces_[nf].nbr[2] = prev->second;
        }

        for (std::uint32_t p : orphans) {
            for (std::uint32_t nf : fresh) {
                double d = dist(faces_[nf], p);
                if (d > eps_) {
                    faces_[nf].outside.push_back(p);
                    if (d > faces_[nf].far_dist) {
                        faces_[nf].far_dist = d;
                        faces_[nf].far_pt = p;
                    }
                    break;
                }
            }
        }
        return fresh;
    }

    TriMesh extract_mesh() {
        TriMesh mesh;
        std::unordered_map<std::uint32_t, std::uint32_t> remap;
        for (const auto& f : faces_) {
            if (!f.alive) continue;
            Triangle t;
            for (int i = 0; i < 3; ++i) {
                auto [it, fresh] = remap.try_emplace(
                    f.v[i], static_cast<std::uint32_t>(mesh.vertices.size()));
                if (fresh) mesh.vertices.push_back(pts_[f.v[i]]);
                t[i] = it->second;
            }
            mesh.triangles.push_back(t);
        }
        mesh.comment = "convex hull";
        return mesh;
    }
};

} // namespace

TriMesh convex_hull(const std::vector<Vec3>& points) {
    return QuickHull(points).build();
}

} // namespace monostat
