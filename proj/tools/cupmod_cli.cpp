// Command-line front end: barcodes of simplex-wise filtrations, cup and
// partition modules, geometric filtration builders, diagram comparison,
// oracle verification, and curated example generators.
//
// Exit codes: 0 success (or empty verify diff), 1 verify found a
// difference, 2 usage or input errors.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cupmod/cupcore.hpp"
#include "cupmod/fixtures.hpp"
#include "cupmod/geometry.hpp"
#include "cupmod/io.hpp"
#include "cupmod/oracle.hpp"
#include "cupmod/partitions.hpp"
#include "cupmod/persistence.hpp"
#include "cupmod/relative.hpp"
#include "cupmod/rng.hpp"

namespace {

using namespace cupmod;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        save_json(out_path, j);
}

std::string value_str(const json& v, const char* sentinel) {
    return v.is_null() ? sentinel : v.dump();
}

void emit_barcode(const json& arr, const std::string& format, const std::string& out_path) {
    if (format == "table") {
        for (const auto& j : arr) {
            std::cout << "degree " << j.at("degree").get<int>() << "  ("
                      << j.at("death_index").get<int>() << ", " << j.at("birth_index").get<int>()
                      << "]  [" << value_str(j.at("birth_value"), "-inf") << ", "
                      << value_str(j.at("death_value"), "inf") << ")";
            if (!j.at("partition").is_null())
                std::cout << "  " << j.at("partition").get<std::string>();
            std::cout << '\n';
        }
        return;
    }
    emit(arr, out_path);
}

Rng* shuffle_rng(std::optional<std::uint64_t> seed, std::optional<Rng>& holder) {
    if (!seed) return nullptr;
    holder.emplace(*seed);
    return &*holder;
}

void emit_filtration(const Filtration& f, const std::string& out_path) {
    if (out_path.empty())
        save_filtration_text(f, std::cout);
    else
        save_filtration_text(f, out_path);
}

PointCloud load_cloud(const std::string& path) {
    return cloud_from_points(load_points_csv(path));
}

// Map of k -> bars for k = 2..max_dim (at least 2), mirroring cup_modules.
json all_k_json(const Filtration& f, const std::map<int, PersistentBasis>& mods, bool relative) {
    json out = json::object();
    for (const auto& [k, mod] : mods)
        out[std::to_string(k)] = barcode_to_json(f, mod.bars, relative);
    return out;
}

int run_verify(const Filtration& f, const std::string& spec_str) {
    std::vector<Bar> fast, expect;
    if (spec_str == "ordinary") {
        fast = persistent_cohomology(f).bars;
        expect = oracle::ordinary_barcode(f, false);
    } else if (spec_str.rfind("kcup:", 0) == 0 || spec_str.rfind("rel-kcup:", 0) == 0) {
        const bool relative = spec_str.front() == 'r';
        const int k = std::stoi(spec_str.substr(spec_str.find(':') + 1));
        need(k >= 2, "cup order must be at least 2");
        if (relative) {
            const PersistentBasis basis = relative_persistent_cohomology(f);
            PersistentBasis mod = rel_cup_pers(f, basis);
            for (int i = 3; i <= k; ++i) mod = rel_order_k_step(f, basis, mod);
            fast = mod.bars;
        } else {
            const PersistentBasis basis = persistent_cohomology(f);
            PersistentBasis mod = cup_pers(f, basis);
            for (int i = 3; i <= k; ++i) mod = order_k_step(f, basis, mod);
            fast = mod.bars;
        }
        expect = oracle::cup_barcode(f, k, relative);
    } else if (spec_str.rfind("partition:", 0) == 0) {
        const std::vector<int> lambda = parse_partition_label(spec_str.substr(10));
        need(lambda.size() >= 2, "partition modules need at least two parts");
        const PersistentBasis basis = persistent_cohomology(f);
        fast = partition_module(f, basis, lambda).bars;
        expect = oracle::partition_barcode(f, lambda);
    } else {
        need(false, "unknown verify spec: " + spec_str);
    }
    const std::vector<std::string> diff = oracle::diff_barcodes(expect, fast);
    for (const auto& line : diff) std::cout << line << '\n';
    if (diff.empty()) {
        std::cout << "verified: fast path matches the oracle\n";
        return 0;
    }
    return 1;
}

struct Example {
    const char* name;
    const char* file;
    const char* blurb;
};

constexpr Example examples[] = {
    {"torus7", "torus7.flt", "minimal 7-vertex torus triangulation, filtered by dimension"},
    {"rp2_6", "rp2_6.flt",
     "minimal 6-vertex real projective plane, filtered by dimension"},
    {"rp3_11", "rp3_11.flt",
     "11-vertex real projective 3-space, 40 tetrahedra, filtered by dimension"},
    {"klein9", "klein9.flt", "9-vertex Klein bottle, filtered by dimension"},
    {"wedge_s1_s2", "wedge_s1_s2.flt",
     "wedge of a triangle circle and a tetrahedron-boundary sphere at vertex 3"},
    {"hexagon_points", "hexagon_points.csv",
     "six points on a circle of radius 1, a regular hexagon"},
    {"torus_minus_disk", "torus_minus_disk.flt",
     "7-vertex torus with one triangle removed; the boundary circle of the"
     " missing disk is complete at index 6"},
    {"torus_plus_disk", "torus_plus_disk.flt",
     "7-vertex torus, complete at index 42, plus a disk coned over one"
     " essential loop"},
};

int run_gen_example(const std::string& name, std::string out_path) {
    const Example* found = nullptr;
    for (const Example& e : examples)
        if (name == e.name) found = &e;
    need(found != nullptr, "unknown example name: " + name);
    if (out_path.empty()) out_path = found->file;

    if (name == "hexagon_points") {
        std::vector<std::vector<double>> pts;
        for (int k = 0; k < 6; ++k) {
            const double ang = k * std::acos(-1.0) / 3.0;
            pts.push_back({std::cos(ang), std::sin(ang)});
        }
        save_points_csv(out_path, pts);
        std::cerr << "wrote " << out_path << '\n';
        return 0;
    }

    Filtration f;
    if (name == "torus7") f = torus_seven();
    if (name == "rp2_6") f = projective_plane_six();
    if (name == "rp3_11") f = rp3_eleven();
    if (name == "klein9") f = klein_nine();
    if (name == "wedge_s1_s2") f = wedge_circle_sphere();
    if (name == "torus_minus_disk") f = torus_minus_disk();
    if (name == "torus_plus_disk") f = torus_plus_disk();

    std::ofstream out(out_path);
    need(out.is_open(), "cannot open output file: " + out_path);
    out << "# " << found->blurb << '\n';
    out << "# " << f.n() << " simplices; format: <value> <v0> <v1> ...\n";
    save_filtration_text(f, out);
    std::cerr << "wrote " << out_path << '\n';
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"persistent cup modules of simplex-wise filtrations"};
    app.require_subcommand(1);

    std::string in_path, out_path, format = "json";
    std::optional<std::uint64_t> seed;
    auto add_common = [&](CLI::App* cmd, bool takes_filtration = true) {
        if (takes_filtration)
            cmd->add_option("filtration", in_path, "filtration file")->required();
        cmd->add_option("-o,--output", out_path, "write JSON here instead of stdout");
        cmd->add_option("--format", format, "json or table")
            ->check(CLI::IsMember({"json", "table"}));
    };

    auto* cmd_barcode = app.add_subcommand("barcode", "ordinary persistence barcode");
    add_common(cmd_barcode);

    auto* cmd_rel = app.add_subcommand("rel-barcode", "relative persistence barcode");
    add_common(cmd_rel);

    int k = 2;
    bool all_k = false;
    auto* cmd_cup = app.add_subcommand("cup-barcode", "k-fold cup module barcode");
    add_common(cmd_cup);
    cmd_cup->add_option("--k", k, "cup order (default 2)")->check(CLI::Range(2, 64));
    cmd_cup->add_flag("--all-k", all_k, "emit every order 2..dim as a map");
    cmd_cup->add_option("--seed", seed, "shuffle product try order (output-invariant)");

    auto* cmd_rcup = app.add_subcommand("rel-cup-barcode", "relative k-fold cup module barcode");
    add_common(cmd_rcup);
    cmd_rcup->add_option("--k", k, "cup order (default 2)")->check(CLI::Range(2, 64));
    cmd_rcup->add_flag("--all-k", all_k, "emit every order 2..dim as a map");
    cmd_rcup->add_option("--seed", seed, "shuffle product try order (output-invariant)");

    std::string partition_str;
    auto* cmd_part = app.add_subcommand("partition-barcodes", "partition module barcodes");
    add_common(cmd_part);
    cmd_part->add_option("--partition", partition_str, "single partition, e.g. 1+1+2");
    cmd_part->add_option("--seed", seed, "shuffle product try order (output-invariant)");

    std::vector<int> interval;
    auto* cmd_len = app.add_subcommand("cup-length", "persistent cup length over an interval");
    cmd_len->add_option("filtration", in_path, "filtration file")->required();
    cmd_len->add_option("--interval", interval, "index interval a b (default: full complex)")
        ->expected(2);

    std::string points_path;
    int max_dim = 2;
    double threshold = -1.0;
    auto* cmd_rips = app.add_subcommand("rips", "Rips filtration of a point cloud");
    cmd_rips->add_option("--points", points_path, "points CSV")->required();
    cmd_rips->add_option("--max-dim", max_dim, "largest simplex dimension (default 2)");
    cmd_rips->add_option("--threshold", threshold,
                         "largest diameter kept (default: enclosing diameter)");
    cmd_rips->add_option("-o,--output", out_path, "write the filtration here");

    auto* cmd_cech = app.add_subcommand("cech", "Cech filtration of a point cloud");
    cmd_cech->add_option("--points", points_path, "points CSV")->required();
    cmd_cech->add_option("--max-dim", max_dim, "largest simplex dimension (default 2)");
    cmd_cech->add_option("--threshold", threshold,
                         "largest ball radius kept (default: enclosing diameter)");
    cmd_cech->add_option("-o,--output", out_path, "write the filtration here");

    std::string diag_a, diag_b;
    auto* cmd_bottle = app.add_subcommand("bottleneck", "bottleneck distance of two barcodes");
    cmd_bottle->add_option("a", diag_a, "barcode JSON")->required();
    cmd_bottle->add_option("b", diag_b, "barcode JSON")->required();

    std::string verify_spec;
    auto* cmd_verify =
        app.add_subcommand("verify", "check a fast computation against the rank oracle");
    cmd_verify->add_option("filtration", in_path, "filtration file")->required();
    cmd_verify
        ->add_option("--spec", verify_spec,
                     "ordinary | kcup:K | rel-kcup:K | partition:1+1+2")
        ->required();

    std::string example_name;
    auto* cmd_gen = app.add_subcommand("gen-example", "write a curated example input");
    {
        std::vector<std::string> names;
        for (const Example& e : examples) names.push_back(e.name);
        cmd_gen->add_option("name", example_name, "example name")
            ->required()
            ->check(CLI::IsMember(names));
    }
    cmd_gen->add_option("-o,--output", out_path, "output path (default: <name>.flt/.csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::optional<Rng> rng_holder;
    Rng* shuffle = shuffle_rng(seed, rng_holder);

    if (*cmd_barcode) {
        const Filtration f = load_filtration_text(in_path);
        emit_barcode(barcode_to_json(f, persistent_cohomology(f).bars, false), format, out_path);
    } else if (*cmd_rel) {
        const Filtration f = load_filtration_text(in_path);
        emit_barcode(barcode_to_json(f, relative_persistent_cohomology(f).bars, true), format,
                     out_path);
    } else if (*cmd_cup || *cmd_rcup) {
        const bool relative = static_cast<bool>(*cmd_rcup);
        const Filtration f = load_filtration_text(in_path);
        const PersistentBasis basis =
            relative ? relative_persistent_cohomology(f) : persistent_cohomology(f);
        if (all_k) {
            const auto mods = relative ? rel_cup_modules(f, basis) : cup_modules(f, basis);
            emit(all_k_json(f, mods, relative), out_path);
        } else {
            PersistentBasis mod = relative ? rel_cup_pers(f, basis, shuffle)
                                           : cup_pers(f, basis, shuffle);
            for (int i = 3; i <= k; ++i)
                mod = relative ? rel_order_k_step(f, basis, mod, shuffle)
                               : order_k_step(f, basis, mod, shuffle);
            emit_barcode(barcode_to_json(f, mod.bars, relative), format, out_path);
        }
    } else if (*cmd_part) {
        const Filtration f = load_filtration_text(in_path);
        const PersistentBasis basis = persistent_cohomology(f);
        json out = json::object();
        if (!partition_str.empty()) {
            const std::vector<int> lambda = parse_partition_label(partition_str);
            need(lambda.size() >= 2, "partition modules need at least two parts");
            const std::string label = partition_label(lambda);
            out[label] = barcode_to_json(f, partition_module(f, basis, lambda, shuffle).bars,
                                         false, &label);
        } else {
            for (const auto& [lambda, mod] : partition_modules(f, basis)) {
                const std::string label = partition_label(lambda);
                out[label] = barcode_to_json(f, mod.bars, false, &label);
            }
        }
        emit(out, out_path);
    } else if (*cmd_len) {
        const Filtration f = load_filtration_text(in_path);
        const PersistentBasis basis = persistent_cohomology(f);
        const auto mods = cup_modules(f, basis);
        const int a = interval.empty() ? f.n() : interval[0];
        const int b = interval.empty() ? f.n() : interval[1];
        need(1 <= a && a <= b && b <= f.n(), "interval out of range");
        std::cout << cup_length(mods, basis, a, b) << '\n';
    } else if (*cmd_rips) {
        emit_filtration(rips_filtration(load_cloud(points_path), max_dim, threshold), out_path);
    } else if (*cmd_cech) {
        emit_filtration(cech_filtration(load_cloud(points_path), max_dim, threshold), out_path);
    } else if (*cmd_bottle) {
        const double d = bottleneck(diagram_from_json(load_json(diag_a)),
                                    diagram_from_json(load_json(diag_b)));
        if (std::isinf(d))
            std::cout << "inf\n";
        else
            std::cout << d << '\n';
    } else if (*cmd_verify) {
        return run_verify(load_filtration_text(in_path), verify_spec);
    } else if (*cmd_gen) {
        return run_gen_example(example_name, out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
