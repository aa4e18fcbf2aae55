#include "monostat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monostat/errors.hpp"
#include "monostat/geometry.hpp"

namespace monostat {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGolden = 1.6180339887498948482;

} // namespace

DirectionSet fibonacci_sphere(int n, int k, double azimuth_offset) {
    if (n < 100) throw Error("fibonacci_sphere requires n >= 100");
    if (k < 1 || k >= n) throw Error("fibonacci_sphere: bad k");

    DirectionSet set;
    set.k = k;
    set.directions.reserve(n);
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = 2.0 * kPi * i / kGolden + azimuth_offset;
        set.directions.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }

    // Brute-force kNN by largest dot product, then symmetric closure.
    set.knn.assign(n, {});
    std::vector<std::pair<double, int>> scored(n);
    for (int i = 0; i < n; ++i) {
        const Vec3& di = set.directions[i];
        for (int j = 0; j < n; ++j)
            scored[j] = {-dot(di, set.directions[j]), j};
        scored[i].first = 2.0; // exclude self
        std::partial_sort(scored.begin(), scored.begin() + k, scored.end());
        auto& nb = set.knn[i];
        nb.reserve(k + 4);
        for (int m = 0; m < k; ++m) nb.push_back(scored[m].second);
    }
    for (int i = 0; i < n; ++i)
        for (int j : set.knn[i])
            if (std::find(set.knn[j].begin(), set.knn[j].end(), i) == set.knn[j].end())
                set.knn[j].push_back(i);
    for (auto& nb : set.knn) std::sort(nb.begin(), nb.end());
    return set;
}

double com_height(const TriMesh& mesh, const Vec3& com, const Vec3& d) {
    double lo = dot(mesh.vertices[0], d);
    for (const auto& v : mesh.vertices) lo = std::min(lo, dot(v, d));
    return dot(com, d) - lo;
}

void HeightField::finalize() {
    argmin = argmax = 0;
    for (int i = 1; i < static_cast<int>(h.size()); ++i) {
        if (h[i] < h[argmin]) argmin = i;
        if (h[i] > h[argmax]) argmax = i;
    }
    h_min = h[argmin];
    h_max = h[argmax];
    h_range = h_max - h_min;
}

HeightField height_field(const TriMesh& mesh, std::shared_ptr<const DirectionSet> dirs) {
    MassProperties mp = mass_properties(mesh);

    // Structure-of-arrays copy keeps the support scan vectorizable.
    const std::size_t nv = mesh.vertices.size();
    std::vector<double> vx(nv), vy(nv), vz(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        vx[i] = mesh.vertices[i].x;
        vy[i] = mesh.vertices[i].y;
        vz[i] = mesh.vertices[i].z;
    }

    HeightField field;
    field.dirs = std::move(dirs);
    field.h.resize(field.dirs->size());
    for (int di = 0; di < field.dirs->size(); ++di) {
        const Vec3 d = field.dirs->directions[di];
        double lo = vx[0] * d.x + vy[0] * d.y + vz[0] * d.z;
        for (std::size_t i = 1; i < nv; ++i) {
            double s = vx[i] * d.x + vy[i] * d.y + vz[i] * d.z;
            lo = s < lo ? s : lo;
        }
        field.h[di] = dot(mp.com, d) - lo;
    }
    field.finalize();
    return field;
}

BasinLabeling label_basins(const HeightField& field) {
    const auto& dirs = *field.dirs;
    const auto& h = field.h;
    const int n = static_cast<int>(h.size());
    if (n <= dirs.k) throw Error("label_basins: need more directions than k");
    if (field.h_range < 1e-12 * std::max(1.0, field.h_max))
        throw DegenerateFlatError("constant height landscape");

    // Steepest-descent pointer per node; ascending neighbor order makes the
    // lowest-index tie rule automatic.
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
        int best = i;
        double best_h = h[i];
        for (int j : dirs.knn[i]) {
            if (h[j] < best_h) {
                best_h = h[j];
                best = j;
            }
        }
        next[i] = best;
    }

    BasinLabeling out;
    out.sink_of.assign(n, -1);
    std::vector<int> path;
    for (int i = 0; i < n; ++i) {
        if (out.sink_of[i] >= 0) continue;
        path.clear();
        int cur = i;
        while (out.sink_of[cur] < 0 && next[cur] != cur) {
            path.push_back(cur);
            cur = next[cur];
        }
        int sink = out.sink_of[cur] >= 0 ? out.sink_of[cur] : cur;
        out.sink_of[cur] = sink;
        for (int p : path) out.sink_of[p] = sink;
    }

    for (int i = 0; i < n; ++i)
        if (next[i] == i) out.sinks.emplace_back(i, h[i]);

    std::vector<std::pair<int, int>> adj;
    for (int i = 0; i < n; ++i) {
        for (int j : dirs.knn[i]) {
            if (j <= i) continue;
            int a = out.sink_of[i], b = out.sink_of[j];
            if (a != b) adj.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    out.adjacency = std::move(adj);
    return out;
}

int merge_basins(const BasinLabeling& labeling, const HeightField& field,
                 double threshold_fraction, MergeSemantics semantics) {
    if (!(threshold_fraction > 0.0 && threshold_fraction <= 0.5))
        throw Error("merge_basins: threshold fraction must be in (0, 0.5]");
    const double tol = threshold_fraction * field.h_range;
    const int b = static_cast<int>(labeling.sinks.size());
    if (b <= 1) return b;

    if (semantics == MergeSemantics::HeightClusterFixpoint) {
        std::vector<double> heights;
        heights.reserve(b);
        for (const auto& [node, height] : labeling.sinks) heights.push_back(height);
        std::sort(heights.begin(), heights.end());
        int classes = 1;
        for (int i = 1; i < b; ++i)
            if (!(heights[i] - heights[i - 1] < tol)) ++classes;
        return classes;
    }

    // Single pass, each basin consumed by at most one merge. Pairs ordered by
    // height difference, then by sink node indices.
    struct Pair {
        double diff;
        int i, j;
    };
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(b) * (b - 1) / 2);
    for (int i = 0; i < b; ++i) {
        for (int j = i + 1; j < b; ++j) {
            double diff = std::abs(labeling.sinks[i].second - labeling.sinks[j].second);
            if (diff < tol) pairs.push_back({diff, i, j});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& l, const Pair& r) {
        if (l.diff != r.diff) return l.diff < r.diff;
        if (l.i != r.i) return l.i < r.i;
        return l.j < r.j;
    });
    std::vector<char> consumed(b, 0);
    int merges = 0;
    for (const auto& p : pairs) {
        if (consumed[p.i] || consumed[p.j]) continue;
        consumed[p.i] = consumed[p.j] = 1;
        ++merges;
    }
    return b - merges;
}

bool ECSReport::mono_at_all_thresholds() const {
    if (degenerate) return true;
    if (merged_count_by_threshold.empty()) return false;
    for (const auto& [t, count] : merged_count_by_threshold)
        if (count != 1) return false;
    return true;
}

ECSReport ecs_from_field(const HeightField& field, const std::vector<double>& thresholds,
                         MergeSemantics semantics) {
    ECSReport report;
    report.h_min = field.h_min;
    report.h_max = field.h_max;
    report.h_range = field.h_range;

    try {
        BasinLabeling labeling = label_basins(field);
        report.raw_basin_count = static_cast<int>(labeling.sinks.size());
        for (const auto& [node, height] : labeling.sinks)
            report.sink_heights.push_back(height);
        std::sort(report.sink_heights.begin(), report.sink_heights.end());
        for (double t : thresholds)
            report.merged_count_by_threshold[t] = merge_basins(labeling, field, t, semantics);
        report.default_ecs = merge_basins(labeling, field, 0.01, semantics);
        const Vec3& dmin = field.dirs->directions[field.argmin];
        const Vec3& dmax = field.dirs->directions[field.argmax];
        report.su_angle_deg =
            std::acos(std::clamp(dot(dmin, dmax), -1.0, 1.0)) * 180.0 / kPi;
    } catch (const DegenerateFlatError&) {
        report.degenerate = true;
        report.raw_basin_count = 1;
        report.default_ecs = 1;
        for (double t : thresholds) report.merged_count_by_threshold[t] = 1;
        report.su_angle_deg = 0.0;
    }
    return report;
}

ECSReport ecs(const TriMesh& mesh, std::shared_ptr<const DirectionSet> dirs,
              const std::vector<double>& thresholds, MergeSemantics semantics) {
    HeightField field = height_field(mesh, std::move(dirs));
    return ecs_from_field(field, thresholds, semantics);
}

// ---------------------------------------------------------------------------
// Analytic oracle
// ---------------------------------------------------------------------------

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

double support_projection(const SurfaceSpec& spec, double theta, double phi, const Vec3& d) {
    return dot(surface_point(spec, std::clamp(theta, 0.0, kPi), phi), d);
}

// Nelder-Mead on (theta, phi), then coordinate-wise golden-section polish.
double refine_minimum(const SurfaceSpec& spec, const Vec3& d, double theta0, double phi0,
                      double spread) {
    struct Pt {
        double t, p, f;
    };
    auto eval = [&](double t, double p) { return support_projection(spec, t, p, d); };

    std::array<Pt, 3> s{{{theta0, phi0, eval(theta0, phi0)},
                         {theta0 + spread, phi0, eval(theta0 + spread, phi0)},
                         {theta0, phi0 + spread, eval(theta0, phi0 + spread)}}};
    for (int iter = 0; iter < 120; ++iter) {
        std::sort(s.begin(), s.end(), [](const Pt& a, const Pt& b) { return a.f < b.f; });
        if (std::abs(s[2].f - s[0].f) < 1e-14 &&
            std::abs(s[2].t - s[0].t) + std::abs(s[2].p - s[0].p) < 1e-10)
            break;
        double ct = 0.5 * (s[0].t + s[1].t), cp = 0.5 * (s[0].p + s[1].p);
        double rt = ct + (ct - s[2].t), rp = cp + (cp - s[2].p);
        double fr = eval(rt, rp);
        if (fr < s[0].f) {
            double et = ct + 2.0 * (ct - s[2].t), ep = cp + 2.0 * (cp - s[2].p);
            double fe = eval(et, ep);
            s[2] = fe < fr ? Pt{et, ep, fe} : Pt{rt, rp, fr};
        } else if (fr < s[1].f) {
            s[2] = {rt, rp, fr};
        } else {
            double kt = ct + 0.5 * (s[2].t - ct), kp = cp + 0.5 * (s[2].p - cp);
            double fk = eval(kt, kp);
            if (fk < s[2].f) {
                s[2] = {kt, kp, fk};
            } else {
                for (int i = 1; i < 3; ++i) {
                    s[i].t = s[0].t + 0.5 * (s[i].t - s[0].t);
                    s[i].p = s[0].p + 0.5 * (s[i].p - s[0].p);
                    s[i].f = eval(s[i].t, s[i].p);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), [](const Pt& a, const Pt& b) { return a.f < b.f; });

    // Golden-section sweeps around the simplex winner.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double bt = s[0].t, bp = s[0].p, bf = s[0].f;
    double span = std::max(spread * 0.5, 1e-4);
    for (int sweep = 0; sweep < 3; ++sweep) {
        for (int axis = 0; axis < 2; ++axis) {
            double lo = (axis == 0 ? bt : bp) - span;
            double hi = (axis == 0 ? bt : bp) + span;
            double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
            double f1 = axis == 0 ? eval(x1, bp) : eval(bt, x1);
            double f2 = axis == 0 ? eval(x2, bp) : eval(bt, x2);
            for (int it = 0; it < 40; ++it) {
                if (f1 < f2) {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - gr * (hi - lo);
                    f1 = axis == 0 ? eval(x1, bp) : eval(bt, x1);
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + gr * (hi - lo);
                    f2 = axis == 0 ? eval(x2, bp) : eval(bt, x2);
                }
                if (hi - lo < 1e-12) break;
            }
            double xm = 0.5 * (lo + hi);
            double fm = axis == 0 ? eval(xm, bp) : eval(bt, xm);
            if (fm < bf) {
                bf = fm;
                (axis == 0 ? bt : bp) = xm;
            }
        }
        span *= 0.2;
    }
    return bf;
}

double min_support_projection(const SurfaceSpec& spec, const Vec3& d, int n_starts) {
    constexpr int grid = 8;
    struct Node {
        double f, t, p;
    };
    std::vector<Node> nodes;
    nodes.reserve(grid * grid);
    for (int i = 0; i < grid; ++i) {
        double theta = kPi * (i + 0.5) / grid;
        for (int j = 0; j < grid; ++j) {
            double phi = 2.0 * kPi * j / grid;
            nodes.push_back({support_projection(spec, theta, phi, d), theta, phi});
        }
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const Node& a, const Node& b) { return a.f < b.f; });

    double best = nodes.front().f;
    int starts = std::min<int>(n_starts, static_cast<int>(nodes.size()));
    for (int i = 0; i < starts; ++i)
        best = std::min(best, refine_minimum(spec, d, nodes[i].t, nodes[i].p, kPi / 16.0));
    return best;
}

} // namespace

std::pair<double, Vec3> analytic_com(const SurfaceSpec& spec, int quadrature_order) {
    spec.validate();
    const int nu = quadrature_order;
    const int nphi = 2 * quadrature_order;
    std::vector<double> u, w;
    gauss_legendre(nu, u, w);

    double volume = 0.0;
    Vec3 moment;
    for (int i = 0; i < nu; ++i) {
        double theta = std::acos(u[i]);
        double st = std::sin(theta);
        for (int j = 0; j < nphi; ++j) {
            double phi = 2.0 * kPi * j / nphi;
            double r4 = radius_pow4(spec, theta, phi);
            if (!(r4 > 0.0))
                throw NonPositiveRadiusError("analytic_com: r^4 <= 0 on quadrature grid");
            double r3 = std::pow(r4, 0.75);
            double wq = w[i] * (2.0 * kPi / nphi);
            volume += wq * r3;
            Vec3 rhat{st * std::cos(phi), st * std::sin(phi), u[i]};
            moment += rhat * (wq * r4);
        }
    }
    volume /= 3.0;
    Vec3 com = moment / (4.0 * volume);
    return {volume, com};
}

double analytic_height(const SurfaceSpec& spec, const Vec3& d, int n_starts) {
    AnalyticOracle oracle(spec, 64, n_starts);
    return oracle.height(d);
}

AnalyticOracle::AnalyticOracle(const SurfaceSpec& spec, int quadrature_order, int n_starts)
    : spec_(spec), n_starts_(n_starts) {
    if (n_starts_ < 8) throw Error("AnalyticOracle requires n_starts >= 8");
    auto [v, c] = analytic_com(spec, quadrature_order);
    volume_ = v;
    com_ = c;
}

double AnalyticOracle::height(const Vec3& d) const {
    return dot(com_, d) - min_support_projection(spec_, d, n_starts_);
}

HeightField AnalyticOracle::field(std::shared_ptr<const DirectionSet> dirs) const {
    HeightField out;
    out.dirs = std::move(dirs);
    out.h.resize(out.dirs->size());
    for (int i = 0; i < out.dirs->size(); ++i)
        out.h[i] = height(out.dirs->directions[i]);
    out.finalize();
    return out;
}

} // namespace monostat
