#ifndef CUPMOD_PARTITIONS_HPP
#define CUPMOD_PARTITIONS_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "check.hpp"
#include "cupcore.hpp"

namespace cupmod {

// A partition is kept as its parts in ascending order; the module it
// names is spanned by products of ordinary positive-degree classes whose
// degrees realize the parts.
using Partition = std::vector<int>;

inline int partition_total(const Partition& p) {
    int q = 0;
    for (int s : p) q += s;
    return q;
}

// Order: total ascending, then lexicographic on the ascending part lists.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        const int qa = partition_total(a), qb = partition_total(b);
        if (qa != qb) return qa < qb;
        return a < b;
    }
};

using PartitionModules = std::map<Partition, PersistentBasis, PartitionOrder>;

// All partitions of q into at least two parts, parts ascending, listed in
// lexicographic order.
inline std::vector<Partition> partitions_of(int q) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> go = [&](int rem, int min_part) {
        if (rem == 0) {
            if (cur.size() >= 2) out.push_back(cur);
            return;
        }
        for (int p = min_part; p <= rem; ++p) {
            cur.push_back(p);
            go(rem - p, p);
            cur.pop_back();
        }
    };
    go(q, 1);
    return out;
}

// All partitions with at least two parts of every total 2..d, ordered by
// total, then lexicographically.
inline std::vector<Partition> enumerate_partitions(int d) {
    std::vector<Partition> out;
    for (int q = 2; q <= d; ++q)
        for (auto& lam : partitions_of(q)) out.push_back(std::move(lam));
    return out;
}

// a refines b when the parts of b can be subdivided to produce the parts
// of a: the multiset of a's parts splits into groups whose sums are the
// parts of b. Backtracking over bin assignments; bins with equal remaining
// capacity are interchangeable and tried once.
inline bool refines(const Partition& a, const Partition& b) {
    if (partition_total(a) != partition_total(b)) return false;
    std::vector<int> rem(b.begin(), b.end());
    std::vector<int> parts(a.rbegin(), a.rend());
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == parts.size()) return true;
        std::vector<int> tried;
        for (int& r : rem) {
            if (r < parts[i]) continue;
            if (std::find(tried.begin(), tried.end(), r) != tried.end()) continue;
            tried.push_back(r);
            r -= parts[i];
            const bool ok = place(i + 1);
            r += parts[i];
            if (ok) return true;
        }
        return false;
    };
    return place(0);
}

// child extends parent by one part: parent is the prefix and exactly one
// part is appended on the right.
inline bool extends_by_one(const Partition& child, const Partition& parent) {
    if (child.size() != parent.size() + 1) return false;
    return std::equal(parent.begin(), parent.end(), child.begin());
}

// Module of products xi ~ zeta with {deg xi, deg zeta} = {s1, s2}, the
// degree-s1 factor written first.
inline PersistentBasis cup_pers_two_parts(const Filtration& f, const PersistentBasis& basis,
                                          int s1, int s2, Rng* birth_shuffle = nullptr) {
    check(s1 >= 1 && s2 >= 1, "partition parts must be positive");
    CupDriverSpec spec;
    spec.admit_h = [s1, s2](int d) { return d == s1 || d == s2; };
    spec.admit_pair = [s1, s2](int a, int b) { return a == s1 && b == s2; };
    spec.birth_shuffle = birth_shuffle;
    return run_cup_driver(f, basis, spec);
}

// Module of (parent product) ~ (ordinary class of degree last_part),
// extending the partition by one part on the right.
inline PersistentBasis extend_partition_module(const Filtration& f, const PersistentBasis& basis,
                                               const PersistentBasis& parent, int last_part,
                                               Rng* birth_shuffle = nullptr) {
    check(last_part >= 1, "partition parts must be positive");
    CupDriverSpec spec;
    spec.admit_h = [last_part](int d) { return d == last_part; };
    spec.r_source = &parent;
    spec.birth_shuffle = birth_shuffle;
    return run_cup_driver(f, basis, spec);
}

namespace detail {

inline PersistentBasis empty_module_like(const PersistentBasis& basis);

} // namespace detail

// Barcode of a single partition module, chaining extensions up from the
// two-part module without reusing other modules.
inline PersistentBasis partition_module(const Filtration& f, const PersistentBasis& basis,
                                        const Partition& lam, Rng* birth_shuffle = nullptr) {
    check(lam.size() >= 2, "partition needs at least two parts");
    check(std::is_sorted(lam.begin(), lam.end()), "partition parts must be ascending");
    PersistentBasis mod = cup_pers_two_parts(f, basis, lam[0], lam[1], birth_shuffle);
    for (std::size_t t = 2; t < lam.size(); ++t) {
        if (mod.bars.empty()) return detail::empty_module_like(basis);
        mod = extend_partition_module(f, basis, mod, lam[t], birth_shuffle);
    }
    return mod;
}

namespace detail {

inline int thread_budget() {
    if (const char* s = std::getenv("CUPMOD_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

inline PersistentBasis empty_module_like(const PersistentBasis& basis) {
    PersistentBasis m;
    m.n = basis.n;
    m.relative = basis.relative;
    m.build_index_maps();
    return m;
}

} // namespace detail

// Modules of every partition with at least two parts and total at most
// q_max (default: max dimension, but at least 2, so a graph still reports
// the empty (1,1) module). A partition with three or more parts extends
// the module of the partition with its largest part removed; partitions of
// equal total are independent of each other and are computed in parallel,
// capped by CUPMOD_THREADS.
inline PartitionModules partition_modules(const Filtration& f, const PersistentBasis& basis,
                                          int q_max = 0) {
    if (q_max < 2) q_max = f.max_dim() < 2 ? 2 : f.max_dim();
    PartitionModules mods;
    for (int q = 2; q <= q_max; ++q) {
        const std::vector<Partition> level = partitions_of(q);
        std::vector<PersistentBasis> results(level.size());
        auto run_one = [&](std::size_t i) {
            const Partition& lam = level[i];
            if (lam.size() == 2) {
                results[i] = cup_pers_two_parts(f, basis, lam[0], lam[1]);
                return;
            }
            Partition head(lam.begin(), lam.end() - 1);
            const PersistentBasis& parent = mods.at(head);
            if (parent.bars.empty())
                results[i] = detail::empty_module_like(basis);
            else
                results[i] = extend_partition_module(f, basis, parent, lam.back());
        };
        const int budget = std::min<int>(detail::thread_budget(), static_cast<int>(level.size()));
        if (budget <= 1) {
            for (std::size_t i = 0; i < level.size(); ++i) run_one(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::exception_ptr err;
            std::mutex err_mu;
            std::vector<std::thread> pool;
            for (int t = 0; t < budget; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        const std::size_t i = next.fetch_add(1);
                        if (i >= level.size()) return;
                        try {
                            run_one(i);
                        } catch (...) {
                            std::lock_guard<std::mutex> lk(err_mu);
                            if (!err) err = std::current_exception();
                        }
                    }
                });
            for (auto& th : pool) th.join();
            if (err) std::rethrow_exception(err);
        }
        for (std::size_t i = 0; i < level.size(); ++i) mods[level[i]] = std::move(results[i]);
    }
    return mods;
}

} // namespace cupmod

#endif
