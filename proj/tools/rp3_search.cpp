// Produces a small triangulation of real projective 3-space by bistellar
// moves, starting from the antipodal quotient of the barycentric
// subdivision of the boundary of the 4-dimensional cross-polytope. The
// resulting facet list is printed ready to paste into a source file; the
// eleven-vertex result is frozen in the fixtures header and certified by
// the test suite, so this tool only needs to run when regenerating it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include <cupmod/check.hpp>
#include <cupmod/rng.hpp>

using Tet = std::array<int, 4>;

namespace {

struct Complex3 {
    std::set<Tet> tets;

    std::set<std::array<int, 3>> triangles() const {
        std::set<std::array<int, 3>> out;
        for (const Tet& t : tets)
            for (int skip = 0; skip < 4; ++skip) {
                std::array<int, 3> tri;
                for (int i = 0, j = 0; i < 4; ++i)
                    if (i != skip) tri[j++] = t[i];
                out.insert(tri);
            }
        return out;
    }

    std::set<std::array<int, 2>> edges() const {
        std::set<std::array<int, 2>> out;
        for (const Tet& t : tets)
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) out.insert({t[i], t[j]});
        return out;
    }

    std::set<int> vertices() const {
        std::set<int> out;
        for (const Tet& t : tets)
            for (int v : t) out.insert(v);
        return out;
    }

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        for (const Tet& t : tets) {
            bool fa = false, fb = false;
            for (int v : t) {
                fa = fa || v == a;
                fb = fb || v == b;
            }
            if (fa && fb) return true;
        }
        return false;
    }

    bool has_triangle(int a, int b, int c) const {
        for (const Tet& t : tets) {
            int hit = 0;
            for (int v : t) hit += (v == a || v == b || v == c) ? 1 : 0;
            if (hit == 3) return true;
        }
        return false;
    }
};

// Every triangle in exactly two tetrahedra, and the link of every vertex
// a single closed connected surface of Euler characteristic two.
bool is_closed_3_manifold(const Complex3& c) {
    std::map<std::array<int, 3>, int> tri_use;
    for (const Tet& t : c.tets)
        for (int skip = 0; skip < 4; ++skip) {
            std::array<int, 3> tri;
            for (int i = 0, j = 0; i < 4; ++i)
                if (i != skip) tri[j++] = t[i];
            tri_use[tri] += 1;
        }
    for (const auto& [tri, uses] : tri_use)
        if (uses != 2) return false;

    for (int v : c.vertices()) {
        // Link of v: triangles opposite v in the tets containing v.
        std::set<std::array<int, 3>> link_tris;
        for (const Tet& t : c.tets) {
            if (std::find(t.begin(), t.end(), v) == t.end()) continue;
            std::array<int, 3> tri;
            int j = 0;
            for (int w : t)
                if (w != v) tri[j++] = w;
            link_tris.insert(tri);
        }
        std::set<std::array<int, 2>> link_edges;
        std::set<int> link_verts;
        std::map<std::array<int, 2>, int> edge_use;
        for (const auto& tri : link_tris) {
            for (int i = 0; i < 3; ++i) link_verts.insert(tri[i]);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    link_edges.insert({tri[i], tri[j]});
                    edge_use[{tri[i], tri[j]}] += 1;
                }
        }
        for (const auto& [e, uses] : edge_use)
            if (uses != 2) return false;
        const int chi = static_cast<int>(link_verts.size()) - static_cast<int>(link_edges.size()) +
                        static_cast<int>(link_tris.size());
        if (chi != 2) return false;
        // Connectivity of the link via flood fill over its edges.
        std::map<int, int> comp;
        for (int w : link_verts) comp[w] = w;
        std::function<int(int)> find = [&](int w) {
            while (comp[w] != w) w = comp[w] = comp[comp[w]];
            return w;
        };
        for (const auto& e : link_edges) comp[find(e[0])] = find(e[1]);
        std::set<int> roots;
        for (int w : link_verts) roots.insert(find(w));
        if (roots.size() != 1) return false;
    }
    return true;
}

// Antipodal quotient of the barycentric subdivision of the boundary of
// the 16-cell. Subdivision vertices are the proper faces of the boundary
// complex; the antipodal map negates every sign and acts freely, and
// orbits are labelled by the lexicographically smaller member.
Complex3 quotient_start() {
    // Vertices of the cross-polytope: +-e_i encoded as +-(i+1), i = 0..3.
    std::vector<Tet> cells;
    for (int mask = 0; mask < 16; ++mask) {
        Tet t;
        for (int i = 0; i < 4; ++i) t[i] = (mask >> i & 1) ? (i + 1) : -(i + 1);
        std::sort(t.begin(), t.end());
        cells.push_back(t);
    }

    // Face = subset of a cell, encoded as the sorted signed-vertex list.
    std::map<std::vector<int>, int> orbit_id;
    auto orbit_of = [&](std::vector<int> face) {
        std::vector<int> neg;
        for (int v : face) neg.push_back(-v);
        std::sort(face.begin(), face.end());
        std::sort(neg.begin(), neg.end());
        const std::vector<int>& rep = face < neg ? face : neg;
        auto it = orbit_id.find(rep);
        if (it != orbit_id.end()) return it->second;
        const int id = static_cast<int>(orbit_id.size()) + 1;
        orbit_id.emplace(rep, id);
        return id;
    };

    Complex3 out;
    for (const Tet& cell : cells) {
        // Flags F1 < F2 < F3 < F4 over the cell: permutations of its
        // vertices, prefix sets.
        std::array<int, 4> perm{0, 1, 2, 3};
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<int> face;
            Tet flag;
            for (int i = 0; i < 4; ++i) {
                face.push_back(cell[perm[i]]);
                flag[i] = orbit_of(face);
            }
            std::sort(flag.begin(), flag.end());
            cupmod::check(std::unique(flag.begin(), flag.end()) == flag.end(),
                  "flag hit one orbit twice");
            out.tets.insert(flag);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    cupmod::check(orbit_id.size() == 40, "expected 40 face orbits");
    cupmod::check(out.tets.size() == 192, "expected 192 quotient tetrahedra");
    return out;
}

struct Move {
    int kind; // 0: remove degree-4 vertex, 1: edge in 3 tets -> 2 tets, 2: triangle -> edge
    std::vector<int> face;
    std::vector<int> co; // opposite vertices
};

std::vector<Move> legal_moves(const Complex3& c, int kind) {
    std::vector<Move> out;
    if (kind == 0) {
        std::map<int, std::vector<Tet>> star;
        for (const Tet& t : c.tets)
            for (int v : t) star[v].push_back(t);
        for (const auto& [v, tets] : star) {
            if (tets.size() != 4) continue;
            std::set<int> rim;
            for (const Tet& t : tets)
                for (int w : t)
                    if (w != v) rim.insert(w);
            if (rim.size() != 4) continue;
            out.push_back(Move{0, {v}, std::vector<int>(rim.begin(), rim.end())});
        }
    } else if (kind == 1) {
        std::map<std::array<int, 2>, std::vector<Tet>> around;
        for (const Tet& t : c.tets)
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) around[{t[i], t[j]}].push_back(t);
        for (const auto& [e, tets] : around) {
            if (tets.size() != 3) continue;
            std::set<int> rim;
            for (const Tet& t : tets)
                for (int w : t)
                    if (w != e[0] && w != e[1]) rim.insert(w);
            if (rim.size() != 3) continue;
            std::vector<int> tri(rim.begin(), rim.end());
            if (c.has_triangle(tri[0], tri[1], tri[2])) continue;
            out.push_back(Move{1, {e[0], e[1]}, tri});
        }
    } else {
        std::map<std::array<int, 3>, std::vector<int>> opp;
        for (const Tet& t : c.tets)
            for (int skip = 0; skip < 4; ++skip) {
                std::array<int, 3> tri;
                for (int i = 0, j = 0; i < 4; ++i)
                    if (i != skip) tri[j++] = t[i];
                opp[tri].push_back(t[skip]);
            }
        for (const auto& [tri, verts] : opp) {
            if (verts.size() != 2 || verts[0] == verts[1]) continue;
            if (c.has_edge(verts[0], verts[1])) continue;
            out.push_back(Move{2, {tri[0], tri[1], tri[2]}, {verts[0], verts[1]}});
        }
    }
    return out;
}

void apply_move(Complex3& c, const Move& m) {
    auto tet_of = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        Tet t{v[0], v[1], v[2], v[3]};
        return t;
    };
    if (m.kind == 0) {
        const int v = m.face[0];
        const auto& r = m.co;
        for (int skip = 0; skip < 4; ++skip) {
            std::vector<int> t{v};
            for (int i = 0; i < 4; ++i)
                if (i != skip) t.push_back(r[i]);
            c.tets.erase(tet_of(t));
        }
        c.tets.insert(tet_of(m.co));
    } else if (m.kind == 1) {
        const auto& e = m.face;
        const auto& tri = m.co;
        for (int skip = 0; skip < 3; ++skip) {
            std::vector<int> t{e[0], e[1]};
            for (int i = 0; i < 3; ++i)
                if (i != skip) t.push_back(tri[i]);
            c.tets.erase(tet_of(t));
        }
        c.tets.insert(tet_of({tri[0], tri[1], tri[2], e[0]}));
        c.tets.insert(tet_of({tri[0], tri[1], tri[2], e[1]}));
    } else {
        const auto& tri = m.face;
        const auto& e = m.co;
        c.tets.erase(tet_of({tri[0], tri[1], tri[2], e[0]}));
        c.tets.erase(tet_of({tri[0], tri[1], tri[2], e[1]}));
        for (int skip = 0; skip < 3; ++skip) {
            std::vector<int> t{e[0], e[1]};
            for (int i = 0; i < 3; ++i)
                if (i != skip) t.push_back(tri[i]);
            c.tets.insert(tet_of(t));
        }
    }
}

void print_state(const Complex3& c, const char* label) {
    std::printf("%s: f = (%zu, %zu, %zu, %zu)\n", label, c.vertices().size(), c.edges().size(),
                c.triangles().size(), c.tets.size());
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 7;
    std::uint64_t rounds = 4000000;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) rounds = std::strtoull(argv[2], nullptr, 10);

    Complex3 c = quotient_start();
    cupmod::check(is_closed_3_manifold(c), "quotient start is not a closed 3-manifold");
    print_state(c, "start");

    cupmod::Rng rng(seed);
    Complex3 best = c;
    std::uint64_t since_progress = 0;
    for (std::uint64_t round = 0; round < rounds; ++round) {
        if (best.vertices().size() <= 11) break;
        // Reduce greedily, stir with random triangle-to-edge moves when
        // stuck, restart from the best state when stirring rambles.
        auto down0 = legal_moves(c, 0);
        auto down1 = legal_moves(c, 1);
        if (!down0.empty()) {
            apply_move(c, down0[rng.below(down0.size())]);
        } else if (!down1.empty()) {
            apply_move(c, down1[rng.below(down1.size())]);
        } else {
            auto up = legal_moves(c, 2);
            if (up.empty()) break;
            apply_move(c, up[rng.below(up.size())]);
        }
        if (c.vertices().size() < best.vertices().size() ||
            (c.vertices().size() == best.vertices().size() && c.tets.size() < best.tets.size())) {
            best = c;
            since_progress = 0;
            print_state(best, "best");
        } else if (++since_progress > 4000) {
            c = best;
            since_progress = 0;
        }
    }

    print_state(best, "final");
    cupmod::check(is_closed_3_manifold(best), "search result is not a closed 3-manifold");

    // Renumber vertices 1..f0 in order of appearance and print the facets.
    std::map<int, int> renum;
    for (const Tet& t : best.tets)
        for (int v : t)
            if (!renum.count(v)) renum[v] = 0;
    int next = 1;
    for (auto& [v, id] : renum) id = next++;
    std::vector<Tet> rows;
    for (const Tet& t : best.tets) {
        Tet r{renum[t[0]], renum[t[1]], renum[t[2]], renum[t[3]]};
        std::sort(r.begin(), r.end());
        rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end());
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::printf("{%d, %d, %d, %d},%s", rows[i][0], rows[i][1], rows[i][2], rows[i][3],
                    (i + 1) % 5 == 0 ? "\n" : " ");
    std::printf("\n");
    return 0;
}
