#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <cupmod/complex.hpp>
#include <cupmod/fixtures.hpp>
#include <cupmod/oracle.hpp>
#include <cupmod/persistence.hpp>

using cupmod::Bar;
using cupmod::Filtration;
using cupmod::PersistentBasis;

namespace {

std::vector<Bar> sorted(std::vector<Bar> bars) {
    std::sort(bars.begin(), bars.end(), cupmod::bar_order);
    return bars;
}

Filtration filled_triangle() {
    return Filtration::from_simplices({
        {0.0, {1}},
        {0.0, {2}},
        {0.0, {3}},
        {1.0, {1, 2}},
        {1.0, {1, 3}},
        {1.0, {2, 3}},
        {2.0, {1, 2, 3}},
    });
}

// Coboundary of a cochain evaluated on one simplex.
bool delta_on(const Filtration& f, const cupmod::Cochain& c, int tau) {
    bool parity = false;
    for (int t : f.facet_indices(tau))
        if (c.support.test(static_cast<std::size_t>(t))) parity = !parity;
    return parity;
}

void check_absolute_invariants(const Filtration& f, const PersistentBasis& pb) {
    const int n = f.n();
    int finite = 0, essential = 0;
    for (std::size_t i = 0; i < pb.bars.size(); ++i) {
        const Bar& bar = pb.bars[i];
        const cupmod::Cochain& rep = pb.reps[i];
        REQUIRE(bar.death >= 0);
        REQUIRE(bar.death < bar.birth);
        REQUIRE(bar.birth <= n);
        (bar.birth == n ? essential : finite)++;
        REQUIRE(rep.degree == bar.degree);
        REQUIRE(!rep.is_zero());
        // Representative lives in the prefix complex at its birth index.
        REQUIRE(rep.support.highest() <= bar.birth);
        // It is a cocycle there: every coface with index <= birth gets
        // even intersection with the support.
        for (int s : rep.support.positions())
            for (int cf : f.cofacet_indices(s))
                if (cf <= bar.birth) REQUIRE(!delta_on(f, rep, cf));
        // Finite bars break exactly when the next simplex arrives.
        if (bar.birth < n) {
            REQUIRE(f.dim(bar.birth + 1) == bar.degree + 1);
            REQUIRE(delta_on(f, rep, bar.birth + 1));
        }
    }
    REQUIRE(2 * finite + essential == n);
}

void check_relative_invariants(const Filtration& f, const PersistentBasis& pb) {
    const int n = f.n();
    for (std::size_t i = 0; i < pb.bars.size(); ++i) {
        const Bar& bar = pb.bars[i];
        const cupmod::Cochain& rep = pb.reps[i];
        REQUIRE(bar.death >= -1);
        REQUIRE(bar.death < bar.birth);
        REQUIRE(bar.birth <= n);
        REQUIRE(rep.degree == bar.degree);
        // Representative vanishes on the prefix at birth and its lowest
        // support index is exactly birth + 1.
        REQUIRE(rep.support.lowest() == bar.birth + 1);
        // Global cocycle of the full complex.
        for (int tau = 1; tau <= n; ++tau)
            if (f.dim(tau) == bar.degree + 1) REQUIRE(!delta_on(f, rep, tau));
    }
}

// Degree-shifted pairing between the absolute and relative barcodes.
std::vector<Bar> relative_from_absolute(const std::vector<Bar>& abs_bars, int n) {
    std::vector<Bar> rel;
    for (const Bar& b : abs_bars) {
        if (b.birth == n)
            rel.push_back(Bar{b.degree, -1, b.death});
        else
            rel.push_back(Bar{b.degree + 1, b.death, b.birth});
    }
    return rel;
}

} // namespace

TEST_CASE("barcode of a single point") {
    Filtration f = Filtration::from_simplices({{0.0, {1}}});
    auto pb = cupmod::persistent_cohomology(f);
    REQUIRE(pb.bars == std::vector<Bar>{Bar{0, 0, 1}});
    auto rel = cupmod::relative_persistent_cohomology(f);
    REQUIRE(rel.bars == std::vector<Bar>{Bar{0, -1, 0}});
}

TEST_CASE("barcode of one edge") {
    Filtration f = Filtration::from_simplices({{0.0, {1}}, {0.0, {2}}, {1.0, {1, 2}}});
    auto pb = cupmod::persistent_cohomology(f);
    REQUIRE(pb.bars == std::vector<Bar>{Bar{0, 0, 3}, Bar{0, 1, 2}});
    auto rel = cupmod::relative_persistent_cohomology(f);
    REQUIRE(rel.bars == std::vector<Bar>{Bar{0, -1, 0}, Bar{1, 1, 2}});
}

TEST_CASE("barcodes of the filled triangle") {
    Filtration f = filled_triangle();
    auto pb = cupmod::persistent_cohomology(f);
    REQUIRE(pb.bars == std::vector<Bar>{
                           Bar{0, 0, 7},
                           Bar{0, 2, 4},
                           Bar{0, 1, 3},
                           Bar{1, 5, 6},
                       });
    check_absolute_invariants(f, pb);

    auto rel = cupmod::relative_persistent_cohomology(f);
    REQUIRE(rel.bars == std::vector<Bar>{
                            Bar{0, -1, 0},
                            Bar{1, 2, 4},
                            Bar{1, 1, 3},
                            Bar{2, 5, 6},
                        });
    check_relative_invariants(f, rel);
}

TEST_CASE("fast path matches the rank oracle on random complexes") {
    for (std::uint64_t seed = 1; seed <= 14; ++seed) {
        const int nv = 4 + static_cast<int>(seed % 4);
        const double p = 0.35 + 0.1 * static_cast<double>(seed % 3);
        Filtration f = cupmod::random_filtration(seed, nv, p);
        INFO("seed " << seed << " n " << f.n());

        auto pb = cupmod::persistent_cohomology(f);
        check_absolute_invariants(f, pb);
        REQUIRE(sorted(pb.bars) == cupmod::oracle::ordinary_barcode(f, false));

        auto rel = cupmod::relative_persistent_cohomology(f);
        check_relative_invariants(f, rel);
        REQUIRE(sorted(rel.bars) == cupmod::oracle::ordinary_barcode(f, true));

        // The two barcodes determine each other by the degree-shifted
        // index correspondence.
        REQUIRE(sorted(relative_from_absolute(pb.bars, f.n())) == sorted(rel.bars));
    }
}

TEST_CASE("named small complexes have the expected barcodes") {
    auto circle = cupmod::persistent_cohomology(cupmod::circle_filtration(5));
    int deg1 = 0;
    for (const Bar& b : circle.bars)
        if (b.degree == 1) ++deg1;
    REQUIRE(deg1 == 1);
    REQUIRE(circle.bars.front() == Bar{0, 0, 10});

    auto sphere = cupmod::persistent_cohomology(cupmod::sphere_filtration());
    std::vector<Bar> essentials;
    for (const Bar& b : sphere.bars)
        if (b.birth == 14) essentials.push_back(b);
    REQUIRE(essentials == std::vector<Bar>{Bar{0, 0, 14}, Bar{2, 13, 14}});
}
