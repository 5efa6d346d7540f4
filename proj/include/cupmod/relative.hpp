#ifndef CUPMOD_RELATIVE_HPP
#define CUPMOD_RELATIVE_HPP

#include <map>

#include "check.hpp"
#include "cupcore.hpp"
#include "persistence.hpp"

namespace cupmod {

// Relative cup modules are the same sweep as the absolute ones run over a
// relative ordinary basis: the coboundary block grows column by column
// instead of being restricted row by row, products are evaluated in the
// full complex, and classes still alive at index 0 come out as bars with
// death -1. These wrappers only pin the mode.

inline PersistentBasis rel_cup_pers(const Filtration& f, const PersistentBasis& rel_basis,
                                    Rng* birth_shuffle = nullptr) {
    check(rel_basis.relative, "rel_cup_pers needs a relative basis");
    return cup_pers(f, rel_basis, birth_shuffle);
}

inline PersistentBasis rel_order_k_step(const Filtration& f, const PersistentBasis& rel_basis,
                                        const PersistentBasis& prev,
                                        Rng* birth_shuffle = nullptr) {
    check(rel_basis.relative && prev.relative, "rel_order_k_step needs relative modules");
    return order_k_step(f, rel_basis, prev, birth_shuffle);
}

inline std::map<int, PersistentBasis> rel_cup_modules(const Filtration& f,
                                                      const PersistentBasis& rel_basis,
                                                      int k_max = 0) {
    check(rel_basis.relative, "rel_cup_modules needs a relative basis");
    return cup_modules(f, rel_basis, k_max);
}

} // namespace cupmod

#endif
