#ifndef CUPMOD_CUPCORE_HPP
#define CUPMOD_CUPCORE_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "check.hpp"
#include "complex.hpp"
#include "f2linalg.hpp"
#include "persistence.hpp"
#include "rng.hpp"

namespace cupmod {

// Simplex-wise cup product of two cochains, evaluated on the simplices
// with index <= active_prefix: (xi ~ zeta)(sigma) = xi(front face) *
// zeta(back face), where a (p+q)-simplex splits into its front p-face and
// back q-face sharing one vertex. Strictly associative at cochain level.
inline Cochain cup_product(const Filtration& f, const Cochain& xi, const Cochain& zeta,
                           int active_prefix) {
    const int r = xi.degree + zeta.degree;
    Cochain out{r, Bitset(static_cast<std::size_t>(f.n() + 1))};
    for (int s : f.simplices_of_dim(r)) {
        if (s > active_prefix) break;
        auto [front, back] = f.split(s, xi.degree);
        if (xi.support.test(static_cast<std::size_t>(front)) &&
            zeta.support.test(static_cast<std::size_t>(back)))
            out.support.set(static_cast<std::size_t>(s));
    }
    return out;
}

// Configuration of one cup-module sweep. The sweep walks the index space
// downward maintaining a reduced matrix S of coboundary columns plus one
// column per independent product cocycle. H collects representatives of
// ordinary bars admitted by admit_h; partners for newly added entries are
// either H itself (pair mode, filtered by admit_pair) or the
// representatives of a previously computed cup module (r_source).
struct CupDriverSpec {
    // Degree filter for ordinary representatives entering H. Default:
    // positive degree.
    std::function<bool(int)> admit_h;
    // Ordered-pair degree filter used when partners come from H itself:
    // admit_pair(a, b) allows the product (degree-a factor) ~ (degree-b
    // factor) written in that order. Default: any pair, new factor first.
    std::function<bool(int, int)> admit_pair;
    // When set, partners come from this module's representatives instead
    // of H, and every product is (partner) ~ (new H entry), extending
    // already-formed products on the right.
    const PersistentBasis* r_source = nullptr;
    // When set, the product candidates collected at each index are tried
    // in a shuffled order. Output barcodes do not depend on that order;
    // the knob exists so tests can assert exactly that.
    Rng* birth_shuffle = nullptr;
};

// Persistence module of the span of pairwise cup products, computed in
// one sweep over the index space from n down. Works for both absolute
// modules (restriction sweep: rows above the index are zeroed out) and
// relative modules (growth sweep: coboundary columns are populated one by
// one, which only ever enlarges the space of coboundaries). The returned
// basis carries one representative-at-birth per bar.
inline PersistentBasis run_cup_driver(const Filtration& f, const PersistentBasis& basis,
                                      const CupDriverSpec& spec = {}) {
    const int n = f.n();
    check(basis.n == n, "cup driver: basis size does not match filtration");
    check(basis.born_at.size() == static_cast<std::size_t>(n) + 1,
          "cup driver: basis index maps not built");
    const bool relative = basis.relative;
    if (spec.r_source) {
        check(spec.r_source->n == n, "cup driver: partner module size mismatch");
        check(spec.r_source->relative == relative, "cup driver: partner module mode mismatch");
    }
    auto admit_h = spec.admit_h ? spec.admit_h : [](int d) { return d > 0; };
    auto admit_pair =
        spec.admit_pair ? spec.admit_pair : [](int, int) { return true; };

    ColumnMatrix S(n + 1);
    if (relative) {
        for (int k = 1; k <= n; ++k) S.append_empty_coboundary();
    } else {
        for (int k = 1; k <= n; ++k) S.append_coboundary(f.cofacet_indices(k));
        S.reduce();
    }

    struct Entry {
        int bar; // id in its source module, for removal at death
        Cochain rep;
    };
    std::vector<Entry> hset, rset;
    PersistentBasis out;
    out.n = n;
    out.relative = relative;

    // Form the product, test it against the current matrix, and append it
    // as a new tracked column when it contributes rank.
    auto try_product = [&](const Cochain& left, const Cochain& right, int ell) {
        Cochain z = cup_product(f, left, right, relative ? n : ell);
        if (z.is_zero()) return;
        if (!S.is_independent(z.support)) return;
        S.append_product(z, ell);
        auto settled = S.reduce();
        check(settled.empty(), "independent product column must settle without deaths");
    };

    // Ordinary bars born at ell whose representatives enter H, and the
    // partner scans their arrival triggers.
    auto process_births = [&](int ell) {
        std::vector<int> ids = basis.born_at[ell];
        if (ell == n) {
            // Essential classes are all born at n; fix their processing
            // order: degree, then death index, ascending.
            std::sort(ids.begin(), ids.end(), [&](int a, int b) {
                if (basis.bars[a].degree != basis.bars[b].degree)
                    return basis.bars[a].degree < basis.bars[b].degree;
                return basis.bars[a].death < basis.bars[b].death;
            });
        }
        std::vector<std::pair<Cochain, Cochain>> cand;
        if (spec.r_source) {
            // Partners come from the prerequisite module: new H entries
            // pair with the R set as it stood before this index ...
            const std::size_t r_old = rset.size();
            for (int id : ids) {
                if (!admit_h(basis.bars[id].degree)) continue;
                hset.push_back(Entry{id, basis.reps[id]});
                for (std::size_t i = 0; i < r_old; ++i)
                    cand.push_back({rset[i].rep, hset.back().rep});
            }
            // ... and R entries born here pair with the full H set.
            for (int rid : spec.r_source->born_at[ell]) {
                rset.push_back(Entry{rid, spec.r_source->reps[rid]});
                for (const auto& h : hset) cand.push_back({rset.back().rep, h.rep});
            }
        } else {
            for (int id : ids) {
                if (!admit_h(basis.bars[id].degree)) continue;
                hset.push_back(Entry{id, basis.reps[id]});
                const Cochain fresh = hset.back().rep;
                for (const auto& h : hset) {
                    if (admit_pair(fresh.degree, h.rep.degree))
                        cand.push_back({fresh, h.rep});
                    else if (admit_pair(h.rep.degree, fresh.degree))
                        cand.push_back({h.rep, fresh});
                }
            }
        }
        if (spec.birth_shuffle) spec.birth_shuffle->shuffle(cand);
        for (const auto& [left, right] : cand) try_product(left, right, ell);
    };

    // Deaths reported by a reduce() at index ell become bars (ell, birth].
    auto emit_deaths = [&](const std::vector<int>& zeroed, int ell) {
        int products = 0;
        for (int pos : zeroed) {
            const auto& c = S.column(pos);
            if (c.origin != ColumnOrigin::product) continue;
            ++products;
            out.bars.push_back(Bar{c.degree, ell, c.birth});
            out.reps.push_back(c.rep_at_birth);
        }
        check(products <= 1, "more than one product class died at one index");
        if (products == 1) {
            bool ordinary_death = false;
            for (int id : basis.dies_at[ell])
                if (basis.bars[id].degree > 0 || relative) ordinary_death = true;
            check(ordinary_death, "product class died away from ordinary death indices");
        }
    };

    auto drop_dead_parents = [&](int ell) {
        auto dead_in = [&](std::vector<Entry>& set, const PersistentBasis& src) {
            for (std::size_t i = set.size(); i-- > 0;) {
                if (src.bars[set[i].bar].death == ell) {
                    set[i] = std::move(set.back());
                    set.pop_back();
                }
            }
        };
        dead_in(hset, basis);
        if (spec.r_source) dead_in(rset, *spec.r_source);
    };

    if (relative) {
        // Growth sweep: after populating the coboundary column of simplex
        // ell+1, the matrix presents the relative module at index ell.
        for (int ell = n; ell >= 0; --ell) {
            if (ell < n) {
                S.populate_column(ell, f.cofacet_indices(ell + 1));
                emit_deaths(S.reduce(), ell);
            }
            process_births(ell);
            drop_dead_parents(ell);
        }
        for (int pos = 0; pos < S.columns(); ++pos) {
            const auto& c = S.column(pos);
            if (c.origin == ColumnOrigin::product && c.alive) {
                out.bars.push_back(Bar{c.degree, -1, c.birth});
                out.reps.push_back(c.rep_at_birth);
            }
        }
    } else {
        // Restriction sweep: zeroing row ell+1 restricts every tracked
        // cochain to the length-ell prefix.
        for (int ell = n; ell >= 1; --ell) {
            if (ell < n) {
                S.zero_row(ell + 1);
                for (auto& h : hset) h.rep.support.reset(static_cast<std::size_t>(ell + 1));
                for (auto& r : rset) r.rep.support.reset(static_cast<std::size_t>(ell + 1));
                emit_deaths(S.reduce(), ell);
            }
            process_births(ell);
            drop_dead_parents(ell);
        }
        for (int pos = 0; pos < S.columns(); ++pos)
            check(S.column(pos).origin != ColumnOrigin::product || !S.column(pos).alive,
                  "absolute product class still alive at index 1");
    }

    detail::sort_basis(out);
    return out;
}

// Persistence module of pairwise cup products of positive-degree classes
// (the 2-cup module), absolute or relative depending on the basis.
inline PersistentBasis cup_pers(const Filtration& f, const PersistentBasis& basis,
                                Rng* birth_shuffle = nullptr) {
    CupDriverSpec spec;
    spec.birth_shuffle = birth_shuffle;
    return run_cup_driver(f, basis, spec);
}

// k-fold cup module: products of one ordinary class with a (k-1)-fold
// product, built by chaining sweeps. prev must be the (k-1)-cup module.
inline PersistentBasis order_k_step(const Filtration& f, const PersistentBasis& basis,
                                    const PersistentBasis& prev, Rng* birth_shuffle = nullptr) {
    CupDriverSpec spec;
    spec.r_source = &prev;
    spec.birth_shuffle = birth_shuffle;
    return run_cup_driver(f, basis, spec);
}

// Cup modules for k = 2..k_max keyed by k. Stops early once a module
// comes out empty (all higher ones are then empty too). k_max < 2 is
// interpreted as "up to the dimension bound": a k-fold product of
// positive-degree classes has degree >= k, so k never exceeds max_dim.
inline std::map<int, PersistentBasis> cup_modules(const Filtration& f,
                                                  const PersistentBasis& basis, int k_max = 0) {
    if (k_max < 2) k_max = f.max_dim() < 2 ? 2 : f.max_dim();
    std::map<int, PersistentBasis> mods;
    mods[2] = cup_pers(f, basis);
    for (int k = 3; k <= k_max; ++k) {
        if (mods[k - 1].bars.empty()) break;
        mods[k] = order_k_step(f, basis, mods[k - 1]);
    }
    return mods;
}

// Largest k such that some k-fold product class persists over the whole
// index interval [a, b]; 1 if only an ordinary positive-degree class
// does; 0 otherwise. kmods must extend far enough that its last module is
// empty or the dimension bound is reached (cup_modules guarantees this).
inline int cup_length(const std::map<int, PersistentBasis>& kmods, const PersistentBasis& basis,
                      int a, int b) {
    check(0 <= a && a <= b && b <= basis.n, "cup_length: bad interval");
    auto covered = [&](const std::vector<Bar>& bars, bool positive_only) {
        for (const auto& bar : bars)
            if ((!positive_only || bar.degree > 0) && bar.death < a && bar.birth >= b) return true;
        return false;
    };
    for (auto it = kmods.rbegin(); it != kmods.rend(); ++it)
        if (covered(it->second.bars, false)) return it->first;
    if (covered(basis.bars, true)) return 1;
    return 0;
}

} // namespace cupmod

#endif
