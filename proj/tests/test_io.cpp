#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "cupmod/fixtures.hpp"
#include "cupmod/io.hpp"
#include "cupmod/persistence.hpp"

using namespace cupmod;

namespace {

std::vector<Bar> sorted_bars(std::vector<Bar> bars) {
    std::sort(bars.begin(), bars.end(), bar_order);
    return bars;
}

} // namespace

TEST_CASE("barcode JSON round trips in both conventions") {
    const Filtration f = torus_seven();
    const std::vector<Bar> abs = sorted_bars(persistent_cohomology(f).bars);
    const json ja = barcode_to_json(f, abs, false);
    REQUIRE(barcode_from_json(ja, false) == abs);

    const std::vector<Bar> rel = sorted_bars(relative_persistent_cohomology(f).bars);
    const json jr = barcode_to_json(f, rel, true);
    REQUIRE(barcode_from_json(jr, true) == rel);

    // The relative barcode contains sentinel bars alive down to the empty
    // complex; they emit death_index 0 with a null birth value.
    bool saw_sentinel = false;
    for (const auto& j : jr)
        if (j.at("death_index").get<int>() == 0) {
            saw_sentinel = true;
            REQUIRE(j.at("birth_value").is_null());
        }
    REQUIRE(saw_sentinel);

    // Value fields follow the grid: birth at entry of death_index + 1.
    for (const auto& j : ja) {
        const int d = j.at("death_index").get<int>();
        const int b = j.at("birth_index").get<int>();
        REQUIRE(j.at("birth_value").get<double>() == f.value(d + 1));
        if (b == f.n())
            REQUIRE(j.at("death_value").is_null());
        else
            REQUIRE(j.at("death_value").get<double>() == f.value(b + 1));
    }
}

TEST_CASE("emitted barcodes are sorted for diff stability") {
    const Filtration f = klein_nine();
    const json ja = barcode_to_json(f, persistent_cohomology(f).bars, false);
    for (std::size_t i = 1; i < ja.size(); ++i) {
        const Bar prev = bar_from_json(ja[i - 1], false);
        const Bar cur = bar_from_json(ja[i], false);
        REQUIRE(!bar_order(cur, prev));
    }
}

TEST_CASE("partition labels parse and print") {
    REQUIRE(partition_label({1, 1, 2}) == "1+1+2");
    REQUIRE(parse_partition_label("1+1+2") == std::vector<int>{1, 1, 2});
    REQUIRE(parse_partition_label("3") == std::vector<int>{3});
    REQUIRE_THROWS(parse_partition_label(""));
    REQUIRE_THROWS(parse_partition_label("1+"));
    REQUIRE_THROWS(parse_partition_label("2+1"));
    REQUIRE_THROWS(parse_partition_label("1+x"));
    REQUIRE_THROWS(parse_partition_label("0+1"));
}

TEST_CASE("diagrams read back from JSON keep infinite bars and drop empty ones") {
    const Filtration f = torus_minus_disk();
    const PersistentBasis basis = persistent_cohomology(f);
    const json ja = barcode_to_json(f, basis.bars, false);
    const BarcodeDiagram from_json = diagram_from_json(ja);
    const BarcodeDiagram direct = value_diagram(f, basis);
    REQUIRE(from_json.size() == direct.size());
    REQUIRE(bottleneck(from_json, direct) == 0.0);

    json sentinel = json::array();
    sentinel.push_back({{"degree", 0},
                        {"birth_index", 3},
                        {"death_index", 0},
                        {"birth_value", nullptr},
                        {"death_value", 1.0},
                        {"partition", nullptr}});
    REQUIRE_THROWS(diagram_from_json(sentinel));
}

TEST_CASE("points CSV round trips") {
    Rng rng(99);
    const auto pts = sample_flat_torus(rng, 7);
    const std::string path = "io_test_points.csv";
    save_points_csv(path, pts);
    const auto back = load_points_csv(path);
    REQUIRE(back == pts);
    std::remove(path.c_str());

    std::stringstream mixed("# header\n1.5, 2.5\n-3,4e-2\n");
    const auto parsed = parse_points_csv(mixed);
    REQUIRE(parsed == std::vector<std::vector<double>>{{1.5, 2.5}, {-3.0, 0.04}});

    std::stringstream junk("1.5, banana\n");
    REQUIRE_THROWS(parse_points_csv(junk));
}
