#ifndef CUPMOD_PERSISTENCE_HPP
#define CUPMOD_PERSISTENCE_HPP

#include <algorithm>
#include <vector>

#include "check.hpp"
#include "complex.hpp"
#include "f2linalg.hpp"

namespace cupmod {

// One barcode interval (death, birth] in index space. Cohomology runs
// against the filtration, so the interval's right endpoint `birth` is
// where the class first appears in the reverse sweep n, n-1, ..., and
// `death` is the largest index where it is gone. Absolute bars have
// death >= 0 and are essential iff birth == n. Relative bars may have
// death == -1: the class is still alive at index 0, which is the
// relative notion of essential.
struct Bar {
    int degree = 0;
    int death = 0;
    int birth = 0;

    bool operator==(const Bar& o) const {
        return degree == o.degree && death == o.death && birth == o.birth;
    }
};

// Canonical output order: degree ascending, then birth descending, then
// death descending.
inline bool bar_order(const Bar& a, const Bar& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.birth != b.birth) return a.birth > b.birth;
    return a.death > b.death;
}

// Barcode plus one representative cocycle per bar. For absolute modules,
// rep i is a cocycle of K_{birth_i} whose coboundary becomes nonzero when
// simplex birth_i + 1 enters (when birth_i < n), and for every index j the
// classes of the representatives of bars containing j form a basis of
// H*(K_j). Relative representatives live in C*(K, K_{birth_i}) and are
// global cocycles of K.
struct PersistentBasis {
    int n = 0;
    bool relative = false;
    std::vector<Bar> bars;
    std::vector<Cochain> reps; // aligned with bars

    // Bar ids born (resp. dying) at each index. Deaths at -1 (relative
    // essentials) are not indexed; the drivers never process them.
    std::vector<std::vector<int>> born_at;
    std::vector<std::vector<int>> dies_at;

    void build_index_maps() {
        born_at.assign(n + 1, {});
        dies_at.assign(n + 1, {});
        for (std::size_t i = 0; i < bars.size(); ++i) {
            born_at[bars[i].birth].push_back(static_cast<int>(i));
            if (bars[i].death >= 0) dies_at[bars[i].death].push_back(static_cast<int>(i));
        }
    }
};

namespace detail {

inline void sort_basis(PersistentBasis& pb) {
    std::vector<std::size_t> order(pb.bars.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return bar_order(pb.bars[a], pb.bars[b]);
    });
    std::vector<Bar> bars(pb.bars.size());
    std::vector<Cochain> reps(pb.bars.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        bars[i] = pb.bars[order[i]];
        reps[i] = std::move(pb.reps[order[i]]);
    }
    pb.bars = std::move(bars);
    pb.reps = std::move(reps);
    pb.build_index_maps();
}

} // namespace detail

// Persistent cohomology of H*(K_.) by the annotation sweep: simplices are
// processed in filtration order while a set of live cocycles is kept, one
// per cohomology class of the current prefix. A simplex whose facet sum is
// hit by live cocycles kills the youngest of them (the others absorb it);
// otherwise it starts a new live cocycle. The cocycle killed at sigma_i is
// a cocycle of K_{i-1} broken by sigma_i, exactly the representative the
// bar (creation-1, i-1] needs.
inline PersistentBasis persistent_cohomology(const Filtration& f) {
    const int n = f.n();
    struct Live {
        int created; // forward creation index
        Bitset bits;
    };
    std::vector<std::vector<Live>> live(f.max_dim() + 1);
    PersistentBasis out;
    out.n = n;

    for (int i = 1; i <= n; ++i) {
        const int p = f.dim(i);
        const auto& facets = f.facet_indices(i);
        std::vector<int> hit;
        if (p > 0) {
            auto& lower = live[p - 1];
            for (std::size_t j = 0; j < lower.size(); ++j) {
                bool parity = false;
                for (int t : facets) parity ^= lower[j].bits.test(static_cast<std::size_t>(t));
                if (parity) hit.push_back(static_cast<int>(j));
            }
        }
        if (hit.empty()) {
            Live fresh{i, Bitset(static_cast<std::size_t>(n + 1))};
            fresh.bits.set(static_cast<std::size_t>(i));
            live[p].push_back(std::move(fresh));
        } else {
            auto& lower = live[p - 1];
            std::size_t victim = 0;
            for (std::size_t j = 1; j < hit.size(); ++j)
                if (lower[hit[j]].created > lower[hit[victim]].created) victim = j;
            const int vj = hit[victim];
            for (int j : hit)
                if (j != vj) lower[j].bits ^= lower[vj].bits;
            out.bars.push_back(Bar{p - 1, lower[vj].created - 1, i - 1});
            out.reps.push_back(Cochain{p - 1, std::move(lower[vj].bits)});
            lower[vj] = std::move(lower.back());
            lower.pop_back();
        }
    }
    for (int d = 0; d <= f.max_dim(); ++d)
        for (auto& lv : live[d]) {
            out.bars.push_back(Bar{d, lv.created - 1, n});
            out.reps.push_back(Cochain{d, std::move(lv.bits)});
        }

    detail::sort_basis(out);
    return out;
}

// Persistent relative cohomology of H*(K, K_.). The relative cochain
// spaces C*(K, K_k) grow by inclusion as k decreases, adding the dual
// basis cochain of sigma_k at step k. Running the standard left-to-right
// reduction over the coboundary columns in the order k = n..1 (pivot =
// lowest simplex index, i.e. the latest-added dual cochain) yields the
// barcode: a column that reduces to zero creates a relative cocycle class
// at index k-1, and a column with pivot p kills the class created by
// sigma_p, producing the bar (k-1, p-1] with the reduced column itself as
// the representative at birth.
inline PersistentBasis relative_persistent_cohomology(const Filtration& f) {
    const int n = f.n();
    PersistentBasis out;
    out.n = n;
    out.relative = true;

    std::vector<Bitset> col(n + 1);
    std::vector<Bitset> contrib(n + 1); // dual cochains summed into column k
    std::vector<int> low_owner(n + 2, 0);
    std::vector<bool> creator(n + 1, false), paired(n + 1, false);

    for (int k = n; k >= 1; --k) {
        col[k] = Bitset(static_cast<std::size_t>(n + 1));
        for (int c : f.cofacet_indices(k)) col[k].set(static_cast<std::size_t>(c));
        contrib[k] = Bitset(static_cast<std::size_t>(n + 1));
        contrib[k].set(static_cast<std::size_t>(k));
        for (;;) {
            long p = col[k].lowest();
            if (p < 0) {
                creator[k] = true;
                break;
            }
            int owner = low_owner[p];
            if (owner == 0) {
                low_owner[p] = k;
                check(creator[p], "relative reduction pivot must point at a creator column");
                paired[p] = true;
                out.bars.push_back(Bar{f.dim(static_cast<int>(p)), k - 1, static_cast<int>(p) - 1});
                out.reps.push_back(Cochain{f.dim(static_cast<int>(p)), col[k]});
                break;
            }
            col[k] ^= col[owner];
            contrib[k] ^= contrib[owner];
        }
    }
    for (int k = 1; k <= n; ++k)
        if (creator[k] && !paired[k]) {
            out.bars.push_back(Bar{f.dim(k), -1, k - 1});
            out.reps.push_back(Cochain{f.dim(k), contrib[k]});
        }

    detail::sort_basis(out);
    return out;
}

} // namespace cupmod

#endif
