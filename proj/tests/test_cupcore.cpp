#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <cupmod/cupcore.hpp>
#include <cupmod/fixtures.hpp>
#include <cupmod/oracle.hpp>
#include <cupmod/partitions.hpp>
#include <cupmod/persistence.hpp>
#include <cupmod/relative.hpp>
#include <cupmod/rng.hpp>

using cupmod::Bar;
using cupmod::Cochain;
using cupmod::Filtration;
using cupmod::PersistentBasis;

namespace {

std::vector<Bar> sorted(std::vector<Bar> bars) {
    std::sort(bars.begin(), bars.end(), cupmod::bar_order);
    return bars;
}

Cochain random_cochain(const Filtration& f, int degree, cupmod::Rng& rng) {
    Cochain c{degree, cupmod::Bitset(static_cast<std::size_t>(f.n() + 1))};
    for (int s : f.simplices_of_dim(degree))
        if (rng.unit() < 0.5) c.support.set(static_cast<std::size_t>(s));
    return c;
}

Cochain delta(const Filtration& f, const Cochain& c) {
    Cochain out{c.degree + 1, cupmod::Bitset(static_cast<std::size_t>(f.n() + 1))};
    for (int tau : f.simplices_of_dim(c.degree + 1)) {
        bool parity = false;
        for (int t : f.facet_indices(tau))
            if (c.support.test(static_cast<std::size_t>(t))) parity = !parity;
        if (parity) out.support.set(static_cast<std::size_t>(tau));
    }
    return out;
}

Cochain add(const Cochain& a, const Cochain& b) {
    Cochain out = a;
    out.support ^= b.support;
    return out;
}

} // namespace

TEST_CASE("cup product satisfies the Leibniz rule") {
    cupmod::Rng rng(99);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Filtration f = cupmod::random_filtration(seed, 6, 0.5);
        const int n = f.n();
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) {
                Cochain xi = random_cochain(f, p, rng);
                Cochain zeta = random_cochain(f, q, rng);
                Cochain lhs = delta(f, cupmod::cup_product(f, xi, zeta, n));
                Cochain rhs = add(cupmod::cup_product(f, delta(f, xi), zeta, n),
                                  cupmod::cup_product(f, xi, delta(f, zeta), n));
                REQUIRE(lhs.support == rhs.support);
            }
    }
}

TEST_CASE("cup product is strictly associative") {
    cupmod::Rng rng(7);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Filtration f = cupmod::random_filtration(seed, 6, 0.55);
        const int n = f.n();
        for (int trial = 0; trial < 4; ++trial) {
            Cochain a = random_cochain(f, 1, rng);
            Cochain b = random_cochain(f, 1, rng);
            Cochain c = random_cochain(f, 1, rng);
            Cochain left = cupmod::cup_product(f, cupmod::cup_product(f, a, b, n), c, n);
            Cochain right = cupmod::cup_product(f, a, cupmod::cup_product(f, b, c, n), n);
            REQUIRE(left.support == right.support);
        }
    }
}

TEST_CASE("cup product respects the prefix restriction") {
    Filtration f = cupmod::random_filtration(3, 6, 0.6);
    cupmod::Rng rng(5);
    Cochain a = random_cochain(f, 1, rng);
    Cochain b = random_cochain(f, 1, rng);
    Cochain full = cupmod::cup_product(f, a, b, f.n());
    const int cut = f.n() / 2;
    Cochain part = cupmod::cup_product(f, a, b, cut);
    for (int s : part.support.positions()) {
        REQUIRE(s <= cut);
        REQUIRE(full.support.test(static_cast<std::size_t>(s)));
    }
    for (int s : full.support.positions())
        if (s <= cut) REQUIRE(part.support.test(static_cast<std::size_t>(s)));
}

TEST_CASE("pairwise cup module matches the oracle") {
    for (std::uint64_t seed = 1; seed <= 16; ++seed) {
        const int nv = 5 + static_cast<int>(seed % 3);
        Filtration f = cupmod::random_filtration(seed, nv, 0.5);
        INFO("seed " << seed << " n " << f.n());
        auto basis = cupmod::persistent_cohomology(f);
        auto mod2 = cupmod::cup_pers(f, basis);
        REQUIRE(sorted(mod2.bars) == cupmod::oracle::cup_barcode(f, 2, false));

        // Births happen only at ordinary birth indices of positive degree.
        for (const Bar& bar : mod2.bars) {
            bool ok = false;
            for (int id : basis.born_at[bar.birth])
                if (basis.bars[id].degree > 0) ok = true;
            REQUIRE(ok);
        }
    }
}

TEST_CASE("higher cup modules match the oracle") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Filtration f = cupmod::random_filtration(seed, 6, 0.55);
        INFO("seed " << seed << " n " << f.n());
        auto basis = cupmod::persistent_cohomology(f);
        auto mods = cupmod::cup_modules(f, basis, 4);
        for (int k = 2; k <= 4; ++k) {
            auto expect = cupmod::oracle::cup_barcode(f, k, false);
            auto it = mods.find(k);
            std::vector<Bar> got = it == mods.end() ? std::vector<Bar>{} : sorted(it->second.bars);
            INFO("k " << k);
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("relative cup modules match the oracle") {
    for (std::uint64_t seed = 1; seed <= 16; ++seed) {
        const int nv = 5 + static_cast<int>(seed % 3);
        Filtration f = cupmod::random_filtration(seed, nv, 0.5);
        INFO("seed " << seed << " n " << f.n());
        auto rel = cupmod::relative_persistent_cohomology(f);
        auto mod2 = cupmod::rel_cup_pers(f, rel);
        REQUIRE(sorted(mod2.bars) == cupmod::oracle::cup_barcode(f, 2, true));
        if (!mod2.bars.empty()) {
            auto mod3 = cupmod::rel_order_k_step(f, rel, mod2);
            REQUIRE(sorted(mod3.bars) == cupmod::oracle::cup_barcode(f, 3, true));
        }
    }
}

TEST_CASE("partition modules match the oracle") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Filtration f = cupmod::random_filtration(seed, 6, 0.55);
        INFO("seed " << seed << " n " << f.n());
        auto basis = cupmod::persistent_cohomology(f);
        auto mods = cupmod::partition_modules(f, basis);
        REQUIRE(mods.count({1, 1}) == 1);
        for (const auto& [lam, mod] : mods) {
            std::string name;
            for (int s : lam) name += std::to_string(s) + ".";
            INFO("partition " << name);
            REQUIRE(sorted(mod.bars) == cupmod::oracle::partition_barcode(f, lam));
        }
    }
}

TEST_CASE("cup length agrees with the rank definition") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Filtration f = cupmod::random_filtration(seed, 6, 0.6);
        const int n = f.n();
        if (n < 2) continue;
        auto basis = cupmod::persistent_cohomology(f);
        auto mods = cupmod::cup_modules(f, basis);
        cupmod::Rng rng(seed * 17 + 1);
        for (int trial = 0; trial < 12; ++trial) {
            int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int b = a + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - a + 1)));
            INFO("seed " << seed << " interval [" << a << ", " << b << "]");
            REQUIRE(cupmod::cup_length(mods, basis, a, b) ==
                    cupmod::oracle::cup_length_raw(f, a, b));
        }
    }
}

TEST_CASE("sphere square vanishes while the sphere class persists") {
    Filtration f = cupmod::sphere_filtration();
    auto basis = cupmod::persistent_cohomology(f);
    auto mods = cupmod::cup_modules(f, basis);
    // Products of positive-degree classes on the 2-sphere are all zero.
    for (const auto& [k, mod] : mods) REQUIRE(mod.bars.empty());
    // Over the window where the degree-2 class lives, cup length is 1.
    REQUIRE(cupmod::cup_length(mods, basis, 14, 14) == 1);
    REQUIRE(cupmod::cup_length(mods, basis, 13, 14) == 0);
}
