#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "monostat/surfaces.hpp"
#include "monostat/trimesh.hpp"

namespace monostat {

// Sampled gravity directions on S^2 with a symmetrized k-nearest-neighbor
// graph. Neighbor lists are sorted ascending so tie-breaking in the descent
// is deterministic.
struct DirectionSet {
    std::vector<Vec3> directions;
    std::vector<std::vector<int>> knn;
    int k = 12;

    int size() const { return static_cast<int>(directions.size()); }
};

// Fibonacci spiral: z_i = 1 - 2(i+0.5)/n, azimuth 2*pi*i/golden + offset.
// The offset rotates the spiral; used to build fresh direction sets for
// independent re-verification.
DirectionSet fibonacci_sphere(int n, int k = 12, double azimuth_offset = 0.0);

// COM height for a single gravity direction: c.d - min_v v.d.
double com_height(const TriMesh& mesh, const Vec3& com, const Vec3& d);

struct HeightField {
    std::shared_ptr<const DirectionSet> dirs;
    std::vector<double> h;
    double h_min = 0.0, h_max = 0.0, h_range = 0.0;
    int argmin = 0, argmax = 0;

    void finalize(); // fills min/max/range from h
};

HeightField height_field(const TriMesh& mesh, std::shared_ptr<const DirectionSet> dirs);

struct BasinLabeling {
    std::vector<int> sink_of;                 // per direction, its sink node
    std::vector<std::pair<int, double>> sinks; // (node, height), ascending node order
    std::vector<std::pair<int, int>> adjacency; // sink-node pairs sharing a graph edge
};

// Greedy descent to the strictly-lowest neighbor (ties: lowest index), with
// path compression. Throws DegenerateFlatError when the landscape is
// constant to machine precision (h_range < 1e-12 * max(1, h_max)).
BasinLabeling label_basins(const HeightField& field);

enum class MergeSemantics {
    // Union-find to a fixpoint over every basin pair whose sink heights
    // differ by less than the threshold; equals single-linkage clustering of
    // sink heights. Two equilibria at the same height count once no matter
    // where they sit on S^2.
    HeightClusterFixpoint,
    // One greedy pass over basin pairs sorted by height difference; each
    // basin merges at most once. Recorded alongside the default for bodies
    // whose equal-height minima make the fixpoint rule collapse everything.
    SinglePassPairwise,
};

int merge_basins(const BasinLabeling& labeling, const HeightField& field,
                 double threshold_fraction,
                 MergeSemantics semantics = MergeSemantics::HeightClusterFixpoint);

struct ECSReport {
    int raw_basin_count = 0;
    std::map<double, int> merged_count_by_threshold;
    int default_ecs = 0; // at threshold 0.01
    double su_angle_deg = 0.0;
    bool degenerate = false;
    double h_min = 0.0, h_max = 0.0, h_range = 0.0;
    std::vector<double> sink_heights; // raw, ascending

    // True when every requested threshold merged to exactly one equilibrium.
    bool mono_at_all_thresholds() const;
};

inline const std::vector<double> kDefaultThresholds{0.005, 0.01, 0.02, 0.05, 0.10};

// Full pipeline: height field -> basins -> merge at each threshold. A
// degenerate-flat landscape reports ECS 1 with the flag set.
ECSReport ecs(const TriMesh& mesh, std::shared_ptr<const DirectionSet> dirs,
              const std::vector<double>& thresholds = kDefaultThresholds,
              MergeSemantics semantics = MergeSemantics::HeightClusterFixpoint);

ECSReport ecs_from_field(const HeightField& field, const std::vector<double>& thresholds,
                         MergeSemantics semantics = MergeSemantics::HeightClusterFixpoint);

// Volume and center of mass straight from the surface integrals:
// V = (1/3) int r^3 sin(theta) dtheta dphi,
// com = (1/(4V)) int r^4 r_hat sin(theta) dtheta dphi,
// Gauss-Legendre in cos(theta) x trapezoid in phi.
std::pair<double, Vec3> analytic_com(const SurfaceSpec& spec, int quadrature_order = 64);

// Mesh-free COM height: minimizes the support projection over the continuous
// surface by multi-start Nelder-Mead plus golden-section polish, seeded from
// the best nodes of a coarse grid.
double analytic_height(const SurfaceSpec& spec, const Vec3& d, int n_starts = 16);

// Caches the analytic COM so batch evaluation does the quadrature once.
class AnalyticOracle {
public:
    explicit AnalyticOracle(const SurfaceSpec& spec, int quadrature_order = 64,
                            int n_starts = 16);

    double height(const Vec3& d) const;
    HeightField field(std::shared_ptr<const DirectionSet> dirs) const;

    double volume() const { return volume_; }
    const Vec3& com() const { return com_; }

private:
    SurfaceSpec spec_;
    double volume_;
    Vec3 com_;
    int n_starts_;
};

} // namespace monostat
