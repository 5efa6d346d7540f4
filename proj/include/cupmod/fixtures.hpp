#ifndef CUPMOD_FIXTURES_HPP
#define CUPMOD_FIXTURES_HPP

// Deterministic example complexes and random-complex generators used by
// tests and the example generator tool.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "check.hpp"
#include "complex.hpp"
#include "rng.hpp"

namespace cupmod {

// Random simplicial complex on nv vertices: every candidate simplex of
// dimension 1..max_dim is kept independently with probability p_keep,
// faces of kept simplices are filled in, and the simplices are then
// ordered by a random linear extension of the face partial order. Values
// equal the filtration step.
inline Filtration random_filtration(std::uint64_t seed, int nv = 6, double p_keep = 0.5,
                                    int max_dim = 3) {
    check(nv >= 1 && nv <= 12, "random_filtration: vertex count out of range");
    Rng rng(seed);
    std::vector<std::vector<int>> kept;
    for (std::uint32_t mask = 1; mask < (1u << nv); ++mask) {
        const int sz = __builtin_popcount(mask);
        if (sz > max_dim + 1) continue;
        if (sz >= 2 && rng.unit() >= p_keep) continue;
        std::vector<int> verts;
        for (int v = 0; v < nv; ++v)
            if (mask & (1u << v)) verts.push_back(v + 1);
        kept.push_back(std::move(verts));
    }
    // Close under faces.
    std::vector<std::vector<int>> all;
    auto have = [&](const std::vector<int>& s) {
        for (const auto& t : all)
            if (t == s) return true;
        return false;
    };
    for (const auto& s : kept) {
        const int m = static_cast<int>(s.size());
        for (std::uint32_t sub = 1; sub < (1u << m); ++sub) {
            std::vector<int> face;
            for (int i = 0; i < m; ++i)
                if (sub & (1u << i)) face.push_back(s[i]);
            if (!have(face)) all.push_back(std::move(face));
        }
    }
    // Random linear extension: repeatedly place a uniformly random
    // simplex all of whose proper faces are already placed.
    std::vector<bool> placed(all.size(), false);
    std::vector<std::pair<double, std::vector<int>>> entries;
    auto faces_placed = [&](const std::vector<int>& s) {
        const int m = static_cast<int>(s.size());
        if (m == 1) return true;
        for (int skip = 0; skip < m; ++skip) {
            std::vector<int> face;
            for (int i = 0; i < m; ++i)
                if (i != skip) face.push_back(s[i]);
            bool found = false;
            for (std::size_t j = 0; j < all.size(); ++j)
                if (placed[j] && all[j] == face) found = true;
            if (!found) return false;
        }
        return true;
    };
    while (entries.size() < all.size()) {
        std::vector<std::size_t> ready;
        for (std::size_t j = 0; j < all.size(); ++j)
            if (!placed[j] && faces_placed(all[j])) ready.push_back(j);
        check(!ready.empty(), "random_filtration: no placeable simplex");
        const std::size_t j = ready[rng.below(ready.size())];
        placed[j] = true;
        entries.emplace_back(static_cast<double>(entries.size()), all[j]);
    }
    return Filtration::from_simplices(std::move(entries));
}

// Closure of a set of maximal simplices, filtered by dimension: all
// vertices first, then all edges, and so on.
inline Filtration closure_by_dimension(const std::vector<std::vector<int>>& maximal) {
    std::set<std::vector<int>> faces;
    for (const auto& s : maximal) {
        std::vector<int> verts = s;
        std::sort(verts.begin(), verts.end());
        const int m = static_cast<int>(verts.size());
        for (std::uint32_t sub = 1; sub < (1u << m); ++sub) {
            std::vector<int> face;
            for (int i = 0; i < m; ++i)
                if (sub & (1u << i)) face.push_back(verts[i]);
            faces.insert(std::move(face));
        }
    }
    std::vector<std::pair<double, std::vector<int>>> entries;
    for (const auto& s : faces)
        entries.emplace_back(static_cast<double>(s.size() - 1), s);
    return Filtration::from_simplices(std::move(entries));
}

// Triangles of the seven-vertex torus: {i, i+1, i+3} and {i, i+2, i+3}
// mod 7. Every pair of vertices is an edge and every edge lies in exactly
// two of the fourteen triangles.
inline std::vector<std::vector<int>> torus_seven_triangles() {
    std::vector<std::vector<int>> tris;
    for (int i = 0; i < 7; ++i) {
        std::vector<int> a{i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1};
        std::vector<int> b{i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        tris.push_back(a);
        tris.push_back(b);
    }
    std::sort(tris.begin(), tris.end());
    return tris;
}

inline Filtration torus_seven() { return closure_by_dimension(torus_seven_triangles()); }

// The six-vertex projective plane: the lexicographically first set of ten
// triangles in K6 in which every edge lies in exactly two triangles (a
// closed connected surface with Euler characteristic one).
inline std::vector<std::vector<int>> projective_plane_six_triangles() {
    return {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
            {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
}

inline Filtration projective_plane_six() {
    return closure_by_dimension(projective_plane_six_triangles());
}

// Klein bottle on nine vertices as the connected sum of two copies of the
// six-vertex projective plane: triangle {1,2,3} is removed from both
// copies and the second copy keeps vertices 1,2,3 while 4,5,6 become
// 7,8,9.
inline Filtration klein_nine() {
    std::vector<std::vector<int>> tris;
    for (const auto& t : projective_plane_six_triangles()) {
        if (t == std::vector<int>{1, 2, 3}) continue;
        tris.push_back(t);
        std::vector<int> moved;
        for (int v : t) moved.push_back(v <= 3 ? v : v + 3);
        std::sort(moved.begin(), moved.end());
        tris.push_back(moved);
    }
    return closure_by_dimension(tris);
}

// Real projective 3-space on eleven vertices: obtained by bistellar
// reduction (see tools/rp3_search.cpp, seed 7) from the antipodal
// quotient of the barycentric subdivision of the 16-cell boundary, which
// the moves preserve up to homeomorphism. Closed 3-manifold with
// f = (11, 51, 80, 40); the test suite certifies the link, homology and
// cup-power properties.
inline std::vector<std::vector<int>> rp3_eleven_tetrahedra() {
    return {{1, 2, 3, 6},  {1, 2, 3, 7},  {1, 2, 6, 8},  {1, 2, 7, 8},  {1, 3, 4, 5},
            {1, 3, 4, 7},  {1, 3, 5, 6},  {1, 4, 5, 11}, {1, 4, 7, 11}, {1, 5, 6, 9},
            {1, 5, 9, 11}, {1, 6, 8, 9},  {1, 7, 8, 11}, {1, 8, 9, 11}, {2, 3, 6, 11},
            {2, 3, 7, 9},  {2, 3, 9, 11}, {2, 4, 5, 8},  {2, 4, 5, 11}, {2, 4, 6, 8},
            {2, 4, 6, 11}, {2, 5, 7, 8},  {2, 5, 7, 9},  {2, 5, 9, 11}, {3, 4, 5, 8},
            {3, 4, 7, 9},  {3, 4, 8, 9},  {3, 5, 6, 10}, {3, 5, 8, 10}, {3, 6, 10, 11},
            {3, 8, 9, 11}, {3, 8, 10, 11},{4, 6, 7, 9},  {4, 6, 7, 11}, {4, 6, 8, 9},
            {5, 6, 7, 9},  {5, 6, 7, 10}, {5, 7, 8, 10}, {6, 7, 10, 11}, {7, 8, 10, 11}};
}

inline Filtration rp3_eleven() { return closure_by_dimension(rp3_eleven_tetrahedra()); }

// Wedge of a circle and a 2-sphere sharing vertex 3: the triangle
// boundary on {1,2,3} plus the tetrahedron boundary on {3,4,5,6}.
inline Filtration wedge_circle_sphere() {
    std::vector<std::vector<int>> maximal{{1, 2}, {1, 3}, {2, 3}};
    for (int a = 3; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) maximal.push_back({a, b, c});
    return closure_by_dimension(maximal);
}

// Torus with one open triangle removed; the boundary circle of the
// removed triangle enters first, then the rest of the torus.
inline Filtration torus_minus_disk() {
    const auto tris = torus_seven_triangles();
    const std::vector<int> removed = tris.front();
    std::vector<std::pair<double, std::vector<int>>> entries;
    for (int v : removed) entries.push_back({0.0, {v}});
    for (int skip = 0; skip < 3; ++skip) {
        std::vector<int> e;
        for (int i = 0; i < 3; ++i)
            if (i != skip) e.push_back(removed[i]);
        entries.push_back({1.0, e});
    }
    for (int v = 1; v <= 7; ++v)
        if (v != removed[0] && v != removed[1] && v != removed[2]) entries.push_back({2.0, {v}});
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b) {
            const std::vector<int> e{a, b};
            bool boundary = true;
            for (int v : e)
                if (v != removed[0] && v != removed[1] && v != removed[2]) boundary = false;
            if (!boundary) entries.push_back({3.0, e});
        }
    for (const auto& t : tris)
        if (t != removed) entries.push_back({4.0, t});
    return Filtration::from_simplices(std::move(entries));
}

// Torus plus a disk: the cycle 1-2-3 is essential (not a triangle of the
// torus and not a boundary), and vertex 8 cones it off. The torus enters
// first, the cone last.
inline Filtration torus_plus_disk() {
    std::vector<std::pair<double, std::vector<int>>> entries;
    for (int v = 1; v <= 7; ++v) entries.push_back({0.0, {v}});
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b) entries.push_back({1.0, {a, b}});
    for (const auto& t : torus_seven_triangles()) entries.push_back({2.0, t});
    entries.push_back({3.0, {8}});
    for (int v : {1, 2, 3}) entries.push_back({4.0, {v, 8}});
    entries.push_back({5.0, {1, 2, 8}});
    entries.push_back({5.0, {1, 3, 8}});
    entries.push_back({5.0, {2, 3, 8}});
    return Filtration::from_simplices(std::move(entries));
}

// g x g grid torus (g >= 3): each square cell is split along one
// diagonal, giving 6 g^2 simplices in total.
inline Filtration torus_grid(int g) {
    check(g >= 3, "torus_grid needs g >= 3");
    auto vid = [g](int i, int j) { return ((i % g + g) % g) * g + ((j % g + g) % g) + 1; };
    std::vector<std::vector<int>> tris;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            tris.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            tris.push_back({vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)});
        }
    for (auto& t : tris) std::sort(t.begin(), t.end());
    return closure_by_dimension(tris);
}

// Vertices 1..m, edges of the m-cycle, entered vertices first.
inline Filtration circle_filtration(int m = 3) {
    check(m >= 3, "circle needs at least three vertices");
    std::vector<std::pair<double, std::vector<int>>> entries;
    for (int v = 1; v <= m; ++v) entries.push_back({0.0, {v}});
    for (int v = 1; v <= m; ++v) entries.push_back({1.0, {v, v % m + 1}});
    return Filtration::from_simplices(std::move(entries));
}

// Boundary of the tetrahedron on vertices 1..4: a 2-sphere.
inline Filtration sphere_filtration() {
    std::vector<std::pair<double, std::vector<int>>> entries;
    for (int v = 1; v <= 4; ++v) entries.push_back({0.0, {v}});
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) entries.push_back({1.0, {a, b}});
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            for (int c = b + 1; c <= 4; ++c) entries.push_back({2.0, {a, b, c}});
    return Filtration::from_simplices(std::move(entries));
}

// Points on the unit circle in the plane, with uniform angular jitter and
// radial noise of the given amplitude.
inline std::vector<std::vector<double>> sample_circle(Rng& rng, int m, double noise = 0.0) {
    const double tau = 6.283185307179586476925286766559;
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < m; ++i) {
        const double ang = tau * (i + rng.unit()) / m;
        const double rad = 1.0 + noise * (2.0 * rng.unit() - 1.0);
        pts.push_back({rad * std::cos(ang), rad * std::sin(ang)});
    }
    return pts;
}

// Points on the flat torus embedded in R^4 as the product of two unit
// circles.
inline std::vector<std::vector<double>> sample_flat_torus(Rng& rng, int m) {
    const double tau = 6.283185307179586476925286766559;
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < m; ++i) {
        const double a = tau * rng.unit();
        const double b = tau * rng.unit();
        pts.push_back({std::cos(a), std::sin(a), std::cos(b), std::sin(b)});
    }
    return pts;
}

// Independently displaces every coordinate by at most eps / sqrt(d), so
// no point moves farther than eps.
inline std::vector<std::vector<double>> perturb_cloud(Rng& rng,
                                                      const std::vector<std::vector<double>>& pts,
                                                      double eps) {
    std::vector<std::vector<double>> out = pts;
    for (auto& p : out) {
        const double step = eps / std::sqrt(static_cast<double>(p.size()));
        for (double& c : p) c += step * (2.0 * rng.unit() - 1.0);
    }
    return out;
}

} // namespace cupmod

#endif
