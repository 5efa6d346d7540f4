#ifndef CUPMOD_ORACLE_HPP
#define CUPMOD_ORACLE_HPP

// Brute-force reference implementations used to validate the sweep-based
// fast path. Everything here recomputes ranks of the persistence module
// maps from their definition, one index pair at a time, with its own
// dense GF(2) elimination and its own cup evaluation; no reduction code
// is shared with the rest of the library. Refuses large inputs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "check.hpp"
#include "complex.hpp"
#include "persistence.hpp"

namespace cupmod {
namespace oracle {

constexpr int max_oracle_simplices = 200;

namespace detail {

using Words = std::vector<std::uint64_t>;

inline int word_count(int bits) { return (bits + 63) / 64; }

inline bool get_bit(const Words& w, int i) {
    return (w[static_cast<std::size_t>(i) >> 6] >> (static_cast<std::size_t>(i) & 63)) & 1u;
}

inline void set_bit(Words& w, int i) {
    w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (static_cast<std::size_t>(i) & 63);
}

inline void xor_into(Words& a, const Words& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

inline bool is_zero(const Words& w) {
    for (auto x : w)
        if (x) return false;
    return true;
}

inline int lowest_bit(const Words& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return static_cast<int>(i * 64) + __builtin_ctzll(w[i]);
    return -1;
}

// Independent-set accumulator: vectors are reduced against the stored
// basis by lowest set bit; a vector that does not vanish is kept.
struct Echelon {
    explicit Echelon(int width)
        : words_(word_count(width)), slot_of_pivot_(static_cast<std::size_t>(width), -1) {}

    bool add(Words v) {
        check(static_cast<int>(v.size()) == words_, "echelon width mismatch");
        for (;;) {
            const int p = lowest_bit(v);
            if (p < 0) return false;
            const int slot = slot_of_pivot_[static_cast<std::size_t>(p)];
            if (slot < 0) {
                slot_of_pivot_[static_cast<std::size_t>(p)] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            xor_into(v, rows_[static_cast<std::size_t>(slot)]);
        }
    }

    int dim() const { return static_cast<int>(rows_.size()); }

private:
    int words_;
    std::vector<Words> rows_;
    std::vector<int> slot_of_pivot_;
};

// Simplex lookup rebuilt from scratch so that cup evaluation does not
// lean on the library's precomputed split tables.
struct VertexIndex {
    explicit VertexIndex(const Filtration& f) {
        for (int i = 1; i <= f.n(); ++i) map_[f.simplex(i).v] = i;
    }
    int at(const std::vector<int>& verts) const {
        auto it = map_.find(verts);
        check(it != map_.end(), "oracle: face lookup failed");
        return it->second;
    }

private:
    std::map<std::vector<int>, int> map_;
};

// Cochain with an explicit degree; support bits are simplex indices.
struct OCochain {
    int degree = 0;
    Words support;
};

inline OCochain cup(const Filtration& f, const VertexIndex& vi, const OCochain& x,
                    const OCochain& y, int prefix) {
    const int r = x.degree + y.degree;
    OCochain out{r, Words(static_cast<std::size_t>(word_count(f.n() + 1)), 0)};
    for (int s : f.simplices_of_dim(r)) {
        if (s > prefix) break;
        const auto& v = f.simplex(s).v;
        const std::vector<int> front(v.begin(), v.begin() + x.degree + 1);
        const std::vector<int> back(v.begin() + x.degree, v.end());
        if (get_bit(x.support, vi.at(front)) && get_bit(y.support, vi.at(back)))
            set_bit(out.support, s);
    }
    return out;
}

// Coboundary of the dual cochain of simplex t, with cofacets above the
// prefix masked away (prefix = n keeps everything).
inline Words coboundary_column(const Filtration& f, int t, int prefix) {
    Words w(static_cast<std::size_t>(word_count(f.n() + 1)), 0);
    for (int c : f.cofacet_indices(t))
        if (c <= prefix) set_bit(w, c);
    return w;
}

// Basis of the degree-d cocycles of the prefix complex K_b (absolute) or
// of the global cocycles supported above K_b (relative). Found by
// eliminating the coboundary columns with kernel tracking: a column whose
// coboundary part dies yields the tracked combination as a cocycle.
inline std::vector<Words> cocycle_basis(const Filtration& f, int d, int b, bool relative) {
    const int n = f.n();
    const int words = word_count(n + 1);
    std::vector<Words> kernel;
    std::vector<std::pair<Words, Words>> rows; // (coboundary part, combination part)
    std::vector<int> slot_of_pivot(static_cast<std::size_t>(n) + 1, -1);
    for (int s : f.simplices_of_dim(d)) {
        if (!relative && s > b) break;
        if (relative && s <= b) continue;
        Words delta = coboundary_column(f, s, relative ? n : b);
        Words comb(static_cast<std::size_t>(words), 0);
        set_bit(comb, s);
        for (;;) {
            const int p = lowest_bit(delta);
            if (p < 0) {
                kernel.push_back(std::move(comb));
                break;
            }
            const int slot = slot_of_pivot[static_cast<std::size_t>(p)];
            if (slot < 0) {
                slot_of_pivot[static_cast<std::size_t>(p)] = static_cast<int>(rows.size());
                rows.emplace_back(std::move(delta), std::move(comb));
                break;
            }
            xor_into(delta, rows[static_cast<std::size_t>(slot)].first);
            xor_into(comb, rows[static_cast<std::size_t>(slot)].second);
        }
    }
    return kernel;
}

// Representatives of a basis of H^d at index b: cocycles extending an
// echelon of the coboundaries.
inline std::vector<Words> cohomology_reps(const Filtration& f, int d, int b, bool relative) {
    const int n = f.n();
    Echelon ech(n + 1);
    for (int t : f.simplices_of_dim(d - 1)) {
        if (!relative && t > b) break;
        if (relative && t <= b) continue;
        ech.add(coboundary_column(f, t, relative ? n : b));
    }
    std::vector<Words> reps;
    for (auto& z : cocycle_basis(f, d, b, relative))
        if (ech.add(z)) reps.push_back(z);
    return reps;
}

// rank profile over row prefixes: profile[a] = rank of the submatrix of
// the given columns restricted to rows 1..a.
inline std::vector<int> row_prefix_profile(int n, const std::vector<Words>& cols) {
    const int cw = word_count(static_cast<int>(cols.size()) + 1);
    Echelon ech(static_cast<int>(cols.size()) + 1);
    std::vector<int> profile(static_cast<std::size_t>(n) + 2, 0);
    for (int a = 1; a <= n; ++a) {
        Words row(static_cast<std::size_t>(cw), 0);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (get_bit(cols[j], a)) set_bit(row, static_cast<int>(j));
        ech.add(std::move(row));
        profile[static_cast<std::size_t>(a)] = ech.dim();
    }
    return profile;
}

// Interval multiplicities via inclusion-exclusion over the rank function,
// emitted as bars. rk(a, b) must return 0 outside the valid index range.
template <typename Rank>
inline void bars_from_rank(int degree, int a_lo, int n, Rank rk, std::vector<Bar>& out) {
    for (int a = a_lo; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
            const int m = rk(a, b) - rk(a - 1, b) - rk(a, b + 1) + rk(a - 1, b + 1);
            check(m >= 0, "oracle: negative interval multiplicity");
            for (int c = 0; c < m; ++c) out.push_back(Bar{degree, a - 1, b});
        }
}

inline void guard_size(const Filtration& f) {
    check(f.n() <= max_oracle_simplices, "oracle refuses filtrations this large");
}

// Generator columns of the degree-q piece of the module at index b:
// for ordinary modules the cocycle basis itself, for k-fold cup modules
// the products of k-multisets of positive-degree cohomology basis
// elements, for partition modules the products realizing the given part
// degrees. Products are formed inside K_b (absolute) or globally
// (relative).
inline std::vector<OCochain> product_generators(const Filtration& f, const VertexIndex& vi,
                                                int b, bool relative, int k,
                                                const std::vector<int>& lambda) {
    // Collect cohomology representatives of every positive degree.
    std::vector<OCochain> reps;
    for (int d = 1; d <= f.max_dim(); ++d)
        for (auto& w : cohomology_reps(f, d, b, relative)) reps.push_back(OCochain{d, w});

    const int prefix = relative ? f.n() : b;
    std::vector<OCochain> out;
    if (lambda.empty()) {
        // k-multisets of reps, any degrees.
        std::vector<int> pick;
        auto rec = [&](auto&& self, int start, int remaining) -> void {
            if (remaining == 0) {
                OCochain acc = reps[static_cast<std::size_t>(pick[0])];
                for (std::size_t i = 1; i < pick.size(); ++i)
                    acc = cup(f, vi, acc, reps[static_cast<std::size_t>(pick[i])], prefix);
                out.push_back(std::move(acc));
                return;
            }
            for (int i = start; i < static_cast<int>(reps.size()); ++i) {
                pick.push_back(i);
                self(self, i, remaining - 1);
                pick.pop_back();
            }
        };
        if (!reps.empty()) rec(rec, 0, k);
    } else {
        // Multisets (repetition allowed) of reps whose degree multiset
        // equals lambda, parts ascending. When the next part repeats a
        // degree the rep index may not decrease, so each multiset is
        // enumerated exactly once.
        std::vector<int> pick;
        auto rec = [&](auto&& self, std::size_t part, int min_index) -> void {
            if (part == lambda.size()) {
                OCochain acc = reps[static_cast<std::size_t>(pick[0])];
                for (std::size_t i = 1; i < pick.size(); ++i)
                    acc = cup(f, vi, acc, reps[static_cast<std::size_t>(pick[i])], prefix);
                out.push_back(std::move(acc));
                return;
            }
            const bool same = part > 0 && lambda[part] == lambda[part - 1];
            for (int i = same ? min_index : 0; i < static_cast<int>(reps.size()); ++i) {
                if (reps[static_cast<std::size_t>(i)].degree != lambda[part]) continue;
                pick.push_back(i);
                self(self, part + 1, i);
                pick.pop_back();
            }
        };
        rec(rec, 0, -1);
    }
    return out;
}

} // namespace detail

// Ordinary (degree-by-degree) barcode recomputed from rank functions.
inline std::vector<Bar> ordinary_barcode(const Filtration& f, bool relative) {
    detail::guard_size(f);
    const int n = f.n();
    std::vector<Bar> out;
    for (int d = 0; d <= f.max_dim(); ++d) {
        if (!relative) {
            // rk[a][b] = dim(Z_b restricted to a + B_a) - dim B_a, both by
            // row-prefix profiles over fixed column sets.
            std::vector<detail::Words> bcols;
            for (int t : f.simplices_of_dim(d - 1))
                bcols.push_back(detail::coboundary_column(f, t, n));
            const std::vector<int> p0 = detail::row_prefix_profile(n, bcols);
            std::vector<std::vector<int>> p1(static_cast<std::size_t>(n) + 1);
            for (int b = 1; b <= n; ++b) {
                std::vector<detail::Words> cols = detail::cocycle_basis(f, d, b, false);
                for (const auto& c : bcols) cols.push_back(c);
                p1[static_cast<std::size_t>(b)] = detail::row_prefix_profile(n, cols);
            }
            auto rk = [&](int a, int b) -> int {
                if (a < 1 || b > n || a > b) return 0;
                return p1[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] -
                       p0[static_cast<std::size_t>(a)];
            };
            detail::bars_from_rank(d, 1, n, rk, out);
        } else {
            // rk[a][b] = dim(Z_b + B_a) - dim B_a with the coboundary
            // space grown column by column as a descends.
            std::vector<std::vector<int>> rkab(static_cast<std::size_t>(n) + 1);
            for (int b = 0; b <= n; ++b) {
                detail::Echelon both(n + 1), bonly(n + 1);
                int seeded = 0;
                for (auto& z : detail::cocycle_basis(f, d, b, true))
                    if (both.add(std::move(z))) ++seeded;
                auto& row = rkab[static_cast<std::size_t>(b)];
                row.assign(static_cast<std::size_t>(n) + 1, 0);
                for (int a = n - 1; a >= 0; --a) {
                    if (f.dim(a + 1) == d - 1) {
                        both.add(detail::coboundary_column(f, a + 1, n));
                        bonly.add(detail::coboundary_column(f, a + 1, n));
                    }
                    if (a <= b) row[static_cast<std::size_t>(a)] = both.dim() - bonly.dim();
                }
                if (b == n) row[static_cast<std::size_t>(n)] = seeded;
            }
            auto rk = [&](int a, int b) -> int {
                if (a < 0 || b > n || a > b) return 0;
                return rkab[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
            };
            detail::bars_from_rank(d, 0, n, rk, out);
        }
    }
    std::sort(out.begin(), out.end(), bar_order);
    return out;
}

// Barcode of the span of degree-q products at every index, for either the
// k-fold cup module (lambda empty) or the partition module of lambda.
inline std::vector<Bar> product_barcode(const Filtration& f, bool relative, int k,
                                        std::vector<int> lambda) {
    detail::guard_size(f);
    const int n = f.n();
    const detail::VertexIndex vi(f);
    std::sort(lambda.begin(), lambda.end());
    check(lambda.empty() ? k >= 2 : lambda.size() >= 2, "product modules need at least two factors");

    const int a_lo = relative ? 0 : 1;
    // Group generator columns by their degree, per index b.
    std::vector<std::map<int, std::vector<detail::Words>>> gens(static_cast<std::size_t>(n) + 1);
    std::vector<int> degrees;
    for (int b = a_lo; b <= n; ++b) {
        for (auto& g : detail::product_generators(f, vi, b, relative, k, lambda)) {
            if (detail::is_zero(g.support)) continue;
            gens[static_cast<std::size_t>(b)][g.degree].push_back(std::move(g.support));
        }
        for (const auto& [q, cols] : gens[static_cast<std::size_t>(b)])
            if (std::find(degrees.begin(), degrees.end(), q) == degrees.end())
                degrees.push_back(q);
    }
    std::sort(degrees.begin(), degrees.end());

    std::vector<Bar> out;
    for (int q : degrees) {
        std::vector<std::vector<int>> rkab(static_cast<std::size_t>(n) + 1);
        if (!relative) {
            std::vector<detail::Words> bcols;
            for (int t : f.simplices_of_dim(q - 1))
                bcols.push_back(detail::coboundary_column(f, t, n));
            const std::vector<int> p0 = detail::row_prefix_profile(n, bcols);
            for (int b = 1; b <= n; ++b) {
                auto it = gens[static_cast<std::size_t>(b)].find(q);
                auto& row = rkab[static_cast<std::size_t>(b)];
                row.assign(static_cast<std::size_t>(n) + 1, 0);
                if (it == gens[static_cast<std::size_t>(b)].end()) continue;
                std::vector<detail::Words> cols = it->second;
                for (const auto& c : bcols) cols.push_back(c);
                const std::vector<int> p1 = detail::row_prefix_profile(n, cols);
                for (int a = 1; a <= b; ++a)
                    row[static_cast<std::size_t>(a)] =
                        p1[static_cast<std::size_t>(a)] - p0[static_cast<std::size_t>(a)];
            }
        } else {
            for (int b = 0; b <= n; ++b) {
                detail::Echelon both(n + 1), bonly(n + 1);
                auto& row = rkab[static_cast<std::size_t>(b)];
                row.assign(static_cast<std::size_t>(n) + 1, 0);
                auto it = gens[static_cast<std::size_t>(b)].find(q);
                if (it == gens[static_cast<std::size_t>(b)].end()) continue;
                int seeded = 0;
                for (const auto& g : it->second)
                    if (both.add(g)) ++seeded;
                for (int a = n - 1; a >= 0; --a) {
                    if (f.dim(a + 1) == q - 1) {
                        both.add(detail::coboundary_column(f, a + 1, n));
                        bonly.add(detail::coboundary_column(f, a + 1, n));
                    }
                    if (a <= b) row[static_cast<std::size_t>(a)] = both.dim() - bonly.dim();
                }
                if (b == n) row[static_cast<std::size_t>(n)] = seeded;
            }
        }
        auto rk = [&](int a, int b) -> int {
            if (a < a_lo || b > n || a > b) return 0;
            return rkab[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        };
        detail::bars_from_rank(q, a_lo, n, rk, out);
    }
    std::sort(out.begin(), out.end(), bar_order);
    return out;
}

inline std::vector<Bar> cup_barcode(const Filtration& f, int k, bool relative) {
    return product_barcode(f, relative, k, {});
}

inline std::vector<Bar> partition_barcode(const Filtration& f, const std::vector<int>& lambda) {
    return product_barcode(f, false, 0, lambda);
}

// Largest k whose k-fold product module has nonzero rank over [a, b],
// straight from the rank definitions.
inline int cup_length_raw(const Filtration& f, int a, int b) {
    detail::guard_size(f);
    check(1 <= a && a <= b && b <= f.n(), "cup_length_raw: bad interval");
    const detail::VertexIndex vi(f);

    // Rank over [a, b] of the span of the given global-at-b cochains in
    // the absolute module: dim(span restricted to a + B_a) - dim B_a.
    auto span_rank_at = [&](const std::vector<detail::OCochain>& cols) -> int {
        std::map<int, std::vector<detail::Words>> by_degree;
        for (const auto& c : cols)
            if (!detail::is_zero(c.support)) by_degree[c.degree].push_back(c.support);
        int total = 0;
        for (auto& [q, pcols] : by_degree) {
            std::vector<detail::Words> all = pcols;
            for (int t : f.simplices_of_dim(q - 1)) {
                if (t > a) break;
                all.push_back(detail::coboundary_column(f, t, a));
            }
            detail::Echelon both(f.n() + 1), bonly(f.n() + 1);
            for (auto& c : all) {
                // restrict to K_a by masking rows above a
                detail::Words m(c.size(), 0);
                for (int r = 1; r <= a; ++r)
                    if (detail::get_bit(c, r)) detail::set_bit(m, r);
                both.add(std::move(m));
            }
            for (int t : f.simplices_of_dim(q - 1)) {
                if (t > a) break;
                bonly.add(detail::coboundary_column(f, t, a));
            }
            total += both.dim() - bonly.dim();
        }
        return total;
    };

    for (int k = f.max_dim(); k >= 2; --k) {
        auto gens = detail::product_generators(f, vi, b, false, k, {});
        if (span_rank_at(gens) > 0) return k;
    }
    std::vector<detail::OCochain> ord;
    for (int d = 1; d <= f.max_dim(); ++d)
        for (auto& w : detail::cohomology_reps(f, d, b, false)) ord.push_back(detail::OCochain{d, w});
    if (span_rank_at(ord) > 0) return 1;
    return 0;
}

// Human-readable multiset difference of two barcodes; empty means equal.
inline std::vector<std::string> diff_barcodes(std::vector<Bar> expect, std::vector<Bar> got) {
    std::sort(expect.begin(), expect.end(), bar_order);
    std::sort(got.begin(), got.end(), bar_order);
    auto fmt = [](const Bar& b) {
        return "degree " + std::to_string(b.degree) + " (" + std::to_string(b.death) + ", " +
               std::to_string(b.birth) + "]";
    };
    std::vector<std::string> lines;
    std::size_t i = 0, j = 0;
    while (i < expect.size() || j < got.size()) {
        if (j >= got.size() || (i < expect.size() && bar_order(expect[i], got[j]))) {
            lines.push_back("missing   " + fmt(expect[i]));
            ++i;
        } else if (i >= expect.size() || bar_order(got[j], expect[i])) {
            lines.push_back("unexpected " + fmt(got[j]));
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return lines;
}

} // namespace oracle
} // namespace cupmod

#endif
