// End-to-end checks of the command line binary: every subcommand runs as
// a subprocess against real files, and outputs are compared with the
// in-process library results.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cupmod/cupcore.hpp"
#include "cupmod/fixtures.hpp"
#include "cupmod/io.hpp"
#include "cupmod/partitions.hpp"
#include "cupmod/persistence.hpp"
#include "cupmod/relative.hpp"
#include "cupmod/rng.hpp"

using namespace cupmod;

namespace {

const std::string& work_dir() {
    static const std::string dir = [] {
        char tmpl[] = "/tmp/cupmod_cli_XXXXXX";
        const char* d = mkdtemp(tmpl);
        REQUIRE(d != nullptr);
        return std::string(d);
    }();
    return dir;
}

struct CmdResult {
    int status;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string out_file = work_dir() + "/stdout.txt";
    const std::string cmd =
        std::string(CUPMOD_CLI_PATH) + " " + args + " > " + out_file + " 2> /dev/null";
    const int rc = std::system(cmd.c_str());
    CmdResult r;
    r.status = rc == -1 ? 127 : WEXITSTATUS(rc);
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string path_of(const std::string& name) { return work_dir() + "/" + name; }

std::vector<Bar> sorted_bars(std::vector<Bar> bars) {
    std::sort(bars.begin(), bars.end(), bar_order);
    return bars;
}

// Largest k whose bars in the all-k map cover [a, b]; k = 1 when some
// positive-degree ordinary bar covers the interval.
int length_from_map(const json& map, const std::vector<Bar>& ordinary, int a, int b) {
    auto covers = [&](const Bar& bar) { return bar.death < a && b <= bar.birth; };
    int best = 0;
    for (const Bar& bar : ordinary)
        if (bar.degree >= 1 && covers(bar)) best = 1;
    for (const auto& [key, arr] : map.items())
        for (const Bar& bar : barcode_from_json(arr, false))
            if (covers(bar)) best = std::max(best, std::stoi(key));
    return best;
}

} // namespace

TEST_CASE("curated examples generate and verify against the oracle") {
    const std::vector<std::string> flt_names = {
        "torus7", "rp2_6", "rp3_11", "klein9",
        "wedge_s1_s2", "torus_minus_disk", "torus_plus_disk"};
    for (const auto& name : flt_names) {
        const std::string flt = path_of(name + ".flt");
        REQUIRE(run_cli("gen-example " + name + " -o " + flt).status == 0);
        REQUIRE(run_cli("verify " + flt + " --spec ordinary").status == 0);
    }
    REQUIRE(run_cli("gen-example hexagon_points -o " + path_of("hexagon_points.csv")).status == 0);

    for (const auto& spec : {"kcup:2", "kcup:3", "rel-kcup:2", "partition:1+1", "partition:1+1+1"})
        REQUIRE(run_cli("verify " + path_of("torus7.flt") + " --spec " + spec).status == 0);
    REQUIRE(run_cli("verify " + path_of("rp2_6.flt") + " --spec kcup:2").status == 0);
    REQUIRE(run_cli("verify " + path_of("rp2_6.flt") + " --spec partition:1+1").status == 0);
    REQUIRE(run_cli("verify " + path_of("wedge_s1_s2.flt") + " --spec kcup:2").status == 0);
    REQUIRE(run_cli("verify " + path_of("rp3_11.flt") + " --spec kcup:2").status == 0);
}

TEST_CASE("cli barcodes match the library through files") {
    const std::string flt = path_of("torus7.flt");
    run_cli("gen-example torus7 -o " + flt);
    const Filtration f = load_filtration_text(flt);

    REQUIRE(run_cli("barcode " + flt + " -o " + path_of("abs.json")).status == 0);
    REQUIRE(barcode_from_json(load_json(path_of("abs.json")), false) ==
            sorted_bars(persistent_cohomology(f).bars));

    REQUIRE(run_cli("rel-barcode " + flt + " -o " + path_of("rel.json")).status == 0);
    REQUIRE(barcode_from_json(load_json(path_of("rel.json")), true) ==
            sorted_bars(relative_persistent_cohomology(f).bars));

    const PersistentBasis basis = persistent_cohomology(f);
    REQUIRE(run_cli("cup-barcode --k 2 " + flt + " -o " + path_of("cup2.json")).status == 0);
    REQUIRE(barcode_from_json(load_json(path_of("cup2.json")), false) ==
            sorted_bars(cup_pers(f, basis).bars));

    REQUIRE(run_cli("partition-barcodes " + flt + " -o " + path_of("parts.json")).status == 0);
    const json parts = load_json(path_of("parts.json"));
    const auto mods = partition_modules(f, basis);
    REQUIRE(parts.size() == mods.size());
    for (const auto& [lambda, mod] : mods) {
        const json& arr = parts.at(partition_label(lambda));
        REQUIRE(barcode_from_json(arr, false) == sorted_bars(mod.bars));
        for (const auto& j : arr)
            REQUIRE(j.at("partition").get<std::string>() == partition_label(lambda));
    }
}

TEST_CASE("all-k map answers interval cup length queries") {
    const std::string flt = path_of("torus7.flt");
    run_cli("gen-example torus7 -o " + flt);
    const Filtration f = load_filtration_text(flt);
    const PersistentBasis basis = persistent_cohomology(f);
    const auto kmods = cup_modules(f, basis);

    REQUIRE(run_cli("cup-barcode --all-k " + flt + " -o " + path_of("allk.json")).status == 0);
    const json map = load_json(path_of("allk.json"));
    for (const auto& [k, mod] : kmods)
        REQUIRE(barcode_from_json(map.at(std::to_string(k)), false) == sorted_bars(mod.bars));

    const std::vector<Bar> ordinary = persistent_cohomology(f).bars;
    Rng rng(515);
    for (int trial = 0; trial < 50; ++trial) {
        const int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(f.n())));
        const int b = a + static_cast<int>(rng.below(static_cast<std::uint64_t>(f.n() - a + 1)));
        const int expect = cup_length(kmods, basis, a, b);
        REQUIRE(length_from_map(map, ordinary, a, b) == expect);
        if (trial % 8 == 0) {
            const CmdResult r = run_cli("cup-length " + flt + " --interval " +
                                        std::to_string(a) + " " + std::to_string(b));
            REQUIRE(r.status == 0);
            REQUIRE(std::stoi(r.out) == expect);
        }
    }

    const CmdResult full = run_cli("cup-length " + flt);
    REQUIRE(full.status == 0);
    REQUIRE(std::stoi(full.out) == 2);
}

TEST_CASE("geometry subcommands chain into bottleneck") {
    const std::string csv = path_of("hexagon_points.csv");
    run_cli("gen-example hexagon_points -o " + csv);

    REQUIRE(run_cli("rips --points " + csv + " -o " + path_of("hex_rips.flt")).status == 0);
    REQUIRE(run_cli("cech --points " + csv + " -o " + path_of("hex_cech.flt")).status == 0);
    const Filtration rips = load_filtration_text(path_of("hex_rips.flt"));
    REQUIRE(rips.n() == 6 + 15 + 20);
    REQUIRE(load_filtration_text(path_of("hex_cech.flt")).n() == rips.n());

    REQUIRE(run_cli("rips --points " + csv + " --max-dim 1 -o " + path_of("hex_graph.flt"))
                .status == 0);
    REQUIRE(load_filtration_text(path_of("hex_graph.flt")).n() == 21);
    REQUIRE(run_cli("rips --points " + csv + " --threshold 1.1 -o " + path_of("hex_cut.flt"))
                .status == 0);
    REQUIRE(load_filtration_text(path_of("hex_cut.flt")).max_dim() == 1);

    REQUIRE(run_cli("barcode " + path_of("hex_rips.flt") + " -o " + path_of("hr.json")).status ==
            0);
    REQUIRE(run_cli("barcode " + path_of("hex_cech.flt") + " -o " + path_of("hc.json")).status ==
            0);
    const CmdResult same = run_cli("bottleneck " + path_of("hr.json") + " " + path_of("hr.json"));
    REQUIRE(same.status == 0);
    REQUIRE(std::stod(same.out) == 0.0);
    const CmdResult cross = run_cli("bottleneck " + path_of("hr.json") + " " + path_of("hc.json"));
    REQUIRE(cross.status == 0);
    REQUIRE(std::stod(cross.out) == Catch::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("usage and load failures exit with code two") {
    REQUIRE(run_cli("").status == 2);
    REQUIRE(run_cli("frobnicate").status == 2);
    REQUIRE(run_cli("--help").status == 0);
    REQUIRE(run_cli("barcode " + path_of("missing.flt")).status == 2);
    REQUIRE(run_cli("rips --points " + path_of("missing.csv")).status == 2);
    REQUIRE(run_cli("gen-example klein_bagel").status == 2);
    REQUIRE(run_cli("cup-barcode --k 1 " + path_of("torus7.flt")).status == 2);
    run_cli("gen-example torus7 -o " + path_of("torus7.flt"));
    REQUIRE(run_cli("verify " + path_of("torus7.flt") + " --spec nonsense").status == 2);
    REQUIRE(run_cli("partition-barcodes --partition 2+1 " + path_of("torus7.flt")).status == 2);
    REQUIRE(run_cli("cup-length " + path_of("torus7.flt") + " --interval 7 3").status == 2);

    // A filtration violating face closure is a load error.
    std::ofstream bad(path_of("bad.flt"));
    bad << "0 1 2\n";
    bad.close();
    REQUIRE(run_cli("barcode " + path_of("bad.flt")).status == 2);
}

TEST_CASE("seeded product shuffling never changes emitted barcodes") {
    const std::string flt = path_of("klein9.flt");
    run_cli("gen-example klein9 -o " + flt);
    const std::string base = path_of("shuffle_base.json");
    REQUIRE(run_cli("cup-barcode --k 2 " + flt + " -o " + base).status == 0);
    for (const auto& seed : {"1", "77", "4242"}) {
        const std::string out = path_of("shuffle_" + std::string(seed) + ".json");
        REQUIRE(run_cli("cup-barcode --k 2 --seed " + std::string(seed) + " " + flt + " -o " +
                        out)
                    .status == 0);
        REQUIRE(load_json(out) == load_json(base));
    }

    const std::string rel_base = path_of("rel_shuffle_base.json");
    REQUIRE(run_cli("rel-cup-barcode --k 2 " + flt + " -o " + rel_base).status == 0);
    REQUIRE(run_cli("rel-cup-barcode --k 2 --seed 9 " + flt + " -o " + path_of("rs.json"))
                .status == 0);
    REQUIRE(load_json(path_of("rs.json")) == load_json(rel_base));

    const std::string part_base = path_of("part_shuffle_base.json");
    REQUIRE(run_cli("partition-barcodes --partition 1+1 " + flt + " -o " + part_base).status == 0);
    REQUIRE(run_cli("partition-barcodes --partition 1+1 --seed 31 " + flt + " -o " +
                    path_of("ps.json"))
                .status == 0);
    REQUIRE(load_json(path_of("ps.json")) == load_json(part_base));
}
