#ifndef CUPMOD_GEOMETRY_HPP
#define CUPMOD_GEOMETRY_HPP

// Geometric filtrations over point clouds and the metric tools used to
// state barcode stability: Rips (value = diameter), Cech (value = minimum
// enclosing ball radius), Hausdorff distance between clouds, and the
// bottleneck distance between value-space barcode diagrams.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "check.hpp"
#include "complex.hpp"
#include "persistence.hpp"
#include "rng.hpp"

namespace cupmod {

// Finite metric input: coordinate points, or a bare distance matrix.
// Cech construction and Hausdorff distance need the coordinates.
struct PointCloud {
    std::vector<std::vector<double>> points;
    std::vector<std::vector<double>> dist;

    int size() const { return static_cast<int>(dist.size()); }
    bool has_coordinates() const { return !points.empty(); }
};

namespace detail {

inline double dist2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

} // namespace detail

inline PointCloud cloud_from_points(std::vector<std::vector<double>> pts) {
    check(!pts.empty(), "point cloud is empty");
    for (const auto& p : pts)
        check(p.size() == pts.front().size(), "points have mixed ambient dimensions");
    PointCloud c;
    c.points = std::move(pts);
    const int m = static_cast<int>(c.points.size());
    c.dist.assign(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            c.dist[i][j] = c.dist[j][i] = std::sqrt(detail::dist2(c.points[i], c.points[j]));
    return c;
}

inline PointCloud cloud_from_distances(std::vector<std::vector<double>> d) {
    check(!d.empty(), "point cloud is empty");
    const std::size_t m = d.size();
    for (std::size_t i = 0; i < m; ++i) {
        check(d[i].size() == m, "distance matrix is not square");
        check(d[i][i] == 0.0, "distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < m; ++j) {
            check(d[i][j] >= 0.0, "distances must be non-negative");
            check(d[i][j] == d[j][i], "distance matrix must be symmetric");
        }
    }
    PointCloud c;
    c.dist = std::move(d);
    return c;
}

inline double enclosing_diameter(const PointCloud& p) {
    double m = 0;
    for (const auto& row : p.dist)
        for (double v : row) m = std::max(m, v);
    return m;
}

namespace detail {

// Relative tolerance on ball-membership radius comparisons.
constexpr double meb_tol = 1e-9;

struct Ball {
    std::vector<double> center;
    double radius2 = -1.0; // negative: empty ball containing nothing
};

inline bool ball_contains(const Ball& b, const std::vector<double>& p) {
    if (b.radius2 < 0) return false;
    return dist2(p, b.center) <= b.radius2 * (1.0 + 2.0 * meb_tol) + 1e-30;
}

// Circumscribed ball of an affinely independent support set, from the
// Gram system of the edge vectors. A singular system (degenerate support)
// yields the empty ball.
inline Ball ball_from_support(const std::vector<const std::vector<double>*>& sup) {
    Ball b;
    if (sup.empty()) return b;
    if (sup.size() == 1) {
        b.center = *sup[0];
        b.radius2 = 0.0;
        return b;
    }
    const std::size_t k = sup.size() - 1;
    const std::vector<double>& p0 = *sup[0];
    std::vector<std::vector<double>> v(k);
    for (std::size_t i = 0; i < k; ++i) {
        v[i].resize(p0.size());
        for (std::size_t c = 0; c < p0.size(); ++c) v[i][c] = (*sup[i + 1])[c] - p0[c];
    }
    std::vector<std::vector<double>> m(k, std::vector<double>(k + 1, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            double dot = 0;
            for (std::size_t c = 0; c < p0.size(); ++c) dot += v[i][c] * v[j][c];
            m[i][j] = 2.0 * dot;
        }
        double n2 = 0;
        for (std::size_t c = 0; c < p0.size(); ++c) n2 += v[i][c] * v[i][c];
        m[i][k] = n2;
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-12) return b;
        std::swap(m[piv], m[col]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const double factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c <= k; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    b.center = p0;
    for (std::size_t i = 0; i < k; ++i) {
        const double lam = m[i][k] / m[i][i];
        for (std::size_t c = 0; c < p0.size(); ++c) b.center[c] += lam * v[i][c];
    }
    b.radius2 = dist2(b.center, p0);
    return b;
}

inline Ball welzl(const std::vector<const std::vector<double>*>& pts, std::size_t m,
                  std::vector<const std::vector<double>*>& sup, std::size_t dim) {
    if (m == 0 || sup.size() == dim + 1) return ball_from_support(sup);
    Ball b = welzl(pts, m - 1, sup, dim);
    if (ball_contains(b, *pts[m - 1])) return b;
    sup.push_back(pts[m - 1]);
    b = welzl(pts, m - 1, sup, dim);
    sup.pop_back();
    return b;
}

} // namespace detail

// Minimum enclosing ball radius by the randomized move-to-front
// recursion, exact up to the 1e-9 relative membership tolerance.
inline double meb_radius(const std::vector<const std::vector<double>*>& pts) {
    check(!pts.empty(), "minimum enclosing ball of no points");
    std::vector<const std::vector<double>*> order = pts;
    Rng rng(0x6d6562);
    rng.shuffle(order);
    std::vector<const std::vector<double>*> sup;
    detail::Ball b = detail::welzl(order, order.size(), sup, pts.front()->size());
    check(b.radius2 >= 0, "minimum enclosing ball recursion failed");
    return std::sqrt(b.radius2);
}

namespace detail {

// Shared subset enumeration: extend simplices vertex by vertex, pruning
// at the threshold plus a slack for value functions that are monotone
// only up to rounding. Values are then clamped monotone over the face
// relation and the exact threshold is applied to the clamped values, so
// inclusion stays downward closed.
template <typename Value>
inline Filtration filtration_from_values(int m, int max_dim, double threshold, double slack,
                                         Value&& value) {
    check(max_dim >= 0, "max_dim must be non-negative");
    check(threshold >= 0, "threshold must be non-negative");
    std::map<std::vector<int>, double> vals;
    std::vector<int> verts;
    const double cut = threshold + slack;
    std::function<void(int)> grow = [&](int lo) {
        if (static_cast<int>(verts.size()) > max_dim) return;
        for (int v = lo; v < m; ++v) {
            verts.push_back(v + 1);
            const double val = value(verts);
            if (val <= cut) {
                vals.emplace(verts, val);
                grow(v + 1);
            }
            verts.pop_back();
        }
    };
    grow(0);
    std::vector<std::pair<double, std::vector<int>>> entries;
    std::vector<const std::vector<int>*> order;
    for (const auto& [vs, val] : vals) order.push_back(&vs);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto* a, const auto* b) { return a->size() < b->size(); });
    for (const auto* vs : order) {
        double& val = vals[*vs];
        if (vs->size() > 1) {
            for (std::size_t drop = 0; drop < vs->size(); ++drop) {
                std::vector<int> face = *vs;
                face.erase(face.begin() + drop);
                auto it = vals.find(face);
                if (it == vals.end()) {
                    val = std::numeric_limits<double>::infinity();
                    break;
                }
                val = std::max(val, it->second);
            }
        }
        if (val <= threshold) entries.emplace_back(val, *vs);
    }
    return Filtration::from_simplices(std::move(entries));
}

} // namespace detail

// Rips filtration: every simplex on at most max_dim + 1 vertices whose
// diameter is at most the threshold, valued by diameter. Threshold < 0
// means the enclosing diameter, so nothing is cut off.
inline Filtration rips_filtration(const PointCloud& p, int max_dim = 2, double threshold = -1.0) {
    if (threshold < 0) threshold = enclosing_diameter(p);
    return detail::filtration_from_values(
        p.size(), max_dim, threshold, 0.0, [&](const std::vector<int>& verts) {
            double d = 0;
            for (std::size_t i = 0; i < verts.size(); ++i)
                for (std::size_t j = i + 1; j < verts.size(); ++j)
                    d = std::max(d, p.dist[verts[i] - 1][verts[j] - 1]);
            return d;
        });
}

// Cech filtration: simplices valued by the minimum enclosing ball radius
// of their vertices; balls of radius r around the vertices intersect
// exactly when that radius is at most r. Needs coordinates. Threshold < 0
// means the enclosing diameter, which bounds every subset's ball radius
// with margin, so nothing is cut off.
inline Filtration cech_filtration(const PointCloud& p, int max_dim = 2, double threshold = -1.0) {
    check(p.has_coordinates(), "cech filtration needs point coordinates");
    if (threshold < 0) threshold = enclosing_diameter(p);
    // Ball radii are exact only to the membership tolerance, so leave
    // slack at the cutoff; the clamp pass settles borderline faces.
    return detail::filtration_from_values(
        p.size(), max_dim, threshold, threshold * 8.0 * detail::meb_tol + 1e-12,
        [&](const std::vector<int>& verts) {
            std::vector<const std::vector<double>*> sub;
            for (int v : verts) sub.push_back(&p.points[v - 1]);
            return meb_radius(sub);
        });
}

// Hausdorff distance between coordinate clouds in a shared embedding.
inline double hausdorff(const PointCloud& x, const PointCloud& y) {
    check(x.has_coordinates() && y.has_coordinates(), "hausdorff needs point coordinates");
    check(x.points.front().size() == y.points.front().size(),
          "hausdorff needs a common ambient dimension");
    auto directed = [](const PointCloud& a, const PointCloud& b) {
        double worst = 0;
        for (const auto& p : a.points) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : b.points) best = std::min(best, detail::dist2(p, q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::sqrt(std::max(directed(x, y), directed(y, x)));
}

// One bar of a value-space diagram; death is +infinity for bars still
// alive at the end of the filtration.
struct DiagramBar {
    int degree;
    double birth;
    double death;
};

using BarcodeDiagram = std::vector<DiagramBar>;

// Value-space diagram of an absolute module: the index bar (d, b] lives
// over indices d+1..b, so its value interval is [value(d+1), value(b+1)),
// unbounded when b = n. Zero-length intervals vanish.
inline BarcodeDiagram value_diagram(const Filtration& f, const PersistentBasis& module) {
    check(!module.relative, "value diagrams are for absolute modules");
    check(module.n == f.n(), "module does not match the filtration");
    BarcodeDiagram out;
    for (const Bar& bar : module.bars) {
        const double birth = f.value(bar.death + 1);
        const double death = bar.birth == f.n() ? std::numeric_limits<double>::infinity()
                                                : f.value(bar.birth + 1);
        if (death > birth) out.push_back(DiagramBar{bar.degree, birth, death});
    }
    return out;
}

namespace detail {

// Perfect-matching feasibility at radius r for one degree: bars of a may
// match bars of b at L-infinity cost, or their own diagonal at half
// persistence. Kuhn's augmenting paths; sizes here are tiny.
inline bool matchable_at(const std::vector<DiagramBar>& a, const std::vector<DiagramBar>& b,
                         double r) {
    const std::size_t na = a.size(), nb = b.size();
    // Left side: a-bars then b-diagonals; right side: b-bars then
    // a-diagonals. Left i < na connects to right j < nb when the bar cost
    // fits, and to its own diagonal when half-persistence fits; diagonal
    // rows connect to their bar column likewise and to every diagonal.
    auto edge = [&](std::size_t i, std::size_t j) {
        if (i < na && j < nb)
            return std::max(std::abs(a[i].birth - b[j].birth), std::abs(a[i].death - b[j].death)) <=
                   r;
        if (i < na && j == nb + i) return (a[i].death - a[i].birth) / 2.0 <= r;
        if (i >= na && j < nb) return i == na + j && (b[j].death - b[j].birth) / 2.0 <= r;
        return i >= na && j >= nb;
    };
    const std::size_t total = na + nb;
    std::vector<int> match_right(total, -1);
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (seen[j] || !edge(i, j)) continue;
            seen[j] = 1;
            if (match_right[j] < 0 || augment(static_cast<std::size_t>(match_right[j]))) {
                match_right[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < total; ++i) {
        seen.assign(total, 0);
        if (!augment(i)) return false;
    }
    return true;
}

} // namespace detail

// Bottleneck distance between diagrams: minimal over partial matchings of
// the largest L-infinity bar cost, unmatched finite bars paying half
// their persistence, bars only matching within their degree. Bars with
// infinite death must pair up by degree or the distance is infinite.
inline double bottleneck(const BarcodeDiagram& a, const BarcodeDiagram& b) {
    std::vector<int> degrees;
    for (const auto& bar : a) degrees.push_back(bar.degree);
    for (const auto& bar : b) degrees.push_back(bar.degree);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    double answer = 0;
    for (int q : degrees) {
        std::vector<DiagramBar> fa, fb;
        std::vector<double> ia, ib;
        for (const auto& bar : a) {
            if (bar.degree != q) continue;
            if (std::isinf(bar.death))
                ia.push_back(bar.birth);
            else
                fa.push_back(bar);
        }
        for (const auto& bar : b) {
            if (bar.degree != q) continue;
            if (std::isinf(bar.death))
                ib.push_back(bar.birth);
            else
                fb.push_back(bar);
        }
        if (ia.size() != ib.size()) return std::numeric_limits<double>::infinity();
        std::sort(ia.begin(), ia.end());
        std::sort(ib.begin(), ib.end());
        for (std::size_t i = 0; i < ia.size(); ++i)
            answer = std::max(answer, std::abs(ia[i] - ib[i]));

        // Candidate radii: all pair costs and all diagonal costs.
        std::vector<double> cand{0.0};
        for (const auto& p : fa) cand.push_back((p.death - p.birth) / 2.0);
        for (const auto& p : fb) cand.push_back((p.death - p.birth) / 2.0);
        for (const auto& p : fa)
            for (const auto& r : fb)
                cand.push_back(std::max(std::abs(p.birth - r.birth), std::abs(p.death - r.death)));
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::size_t lo = 0, hi = cand.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (detail::matchable_at(fa, fb, cand[mid]))
                hi = mid;
            else
                lo = mid + 1;
        }
        check(detail::matchable_at(fa, fb, cand[lo]), "no feasible bottleneck matching");
        answer = std::max(answer, cand[lo]);
    }
    return answer;
}

} // namespace cupmod

#endif
