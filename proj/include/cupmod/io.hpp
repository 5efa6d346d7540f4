#ifndef CUPMOD_IO_HPP
#define CUPMOD_IO_HPP

// File formats beyond the filtration text format (which lives with the
// Filtration type). Barcodes travel as JSON arrays of bar objects
// carrying both index-space and value-space renderings:
//   {degree, birth_index, death_index, birth_value, death_value, partition}
// The bar covers indices death_index+1 .. birth_index and the value
// interval [value(death_index+1), value(birth_index+1)). death_value is
// null for absolute essential bars; for relative bars that are alive all
// the way down to the empty complex, death_index is the 0 sentinel and
// birth_value is null. partition is a "1+1+2" style label or null.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "check.hpp"
#include "complex.hpp"
#include "geometry.hpp"
#include "persistence.hpp"

namespace cupmod {

using json = nlohmann::json;

// Input validation: unlike check(), a failure here blames the data, not
// the computation.
inline void need(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

// Filtration text IO lives with the Filtration type; this layer adds the
// path-based save next to load_filtration_text(path).
inline void save_filtration_text(const Filtration& f, const std::string& path) {
    std::ofstream out(path);
    need(out.is_open(), "cannot open output file: " + path);
    save_filtration_text(f, out);
}

inline std::string partition_label(const std::vector<int>& lambda) {
    std::string s;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(lambda[i]);
    }
    return s;
}

inline std::vector<int> parse_partition_label(const std::string& s) {
    need(!s.empty() && s.front() != '+' && s.back() != '+' && s.find("++") == std::string::npos,
         "bad partition label: " + s);
    std::vector<int> parts;
    std::string token;
    std::istringstream in(s);
    while (std::getline(in, token, '+')) {
        std::size_t used = 0;
        int part = 0;
        try {
            part = std::stoi(token, &used);
        } catch (const std::exception&) {
            need(false, "bad partition label: " + s);
        }
        need(used == token.size() && part >= 1, "bad partition label: " + s);
        parts.push_back(part);
    }
    need(!parts.empty(), "bad partition label: " + s);
    need(std::is_sorted(parts.begin(), parts.end()), "partition parts must ascend: " + s);
    return parts;
}

inline json bar_to_json(const Filtration& f, const Bar& bar, bool relative,
                        const std::string* partition = nullptr) {
    json j;
    j["degree"] = bar.degree;
    j["birth_index"] = bar.birth;
    if (bar.death == -1) {
        check(relative, "only relative bars reach the empty complex");
        j["death_index"] = 0;
        j["birth_value"] = nullptr;
    } else {
        j["death_index"] = bar.death;
        j["birth_value"] = f.value(bar.death + 1);
    }
    if (!relative && bar.birth == f.n())
        j["death_value"] = nullptr;
    else {
        check(bar.birth < f.n(), "relative bars die before the full complex");
        j["death_value"] = f.value(bar.birth + 1);
    }
    j["partition"] = partition ? json(*partition) : json(nullptr);
    return j;
}

// Canonical emit order: degree ascending, then birth and death index
// descending, for diff-stable output.
inline json barcode_to_json(const Filtration& f, std::vector<Bar> bars, bool relative,
                            const std::string* partition = nullptr) {
    std::sort(bars.begin(), bars.end(), bar_order);
    json arr = json::array();
    for (const Bar& b : bars) arr.push_back(bar_to_json(f, b, relative, partition));
    return arr;
}

// Index-space reconstruction. The relative flag resolves the death_index
// 0 sentinel back to the internal -1: a genuine relative death at module
// index 0 cannot occur, the module there is cohomology relative to the
// empty complex.
inline Bar bar_from_json(const json& j, bool relative) {
    Bar b;
    b.degree = j.at("degree").get<int>();
    b.birth = j.at("birth_index").get<int>();
    b.death = j.at("death_index").get<int>();
    if (relative && b.death == 0) {
        need(j.at("birth_value").is_null(), "relative sentinel bar must carry a null birth value");
        b.death = -1;
    }
    need(b.death < b.birth, "bar dies before it is born");
    return b;
}

inline std::vector<Bar> barcode_from_json(const json& arr, bool relative) {
    need(arr.is_array(), "barcode JSON must be an array");
    std::vector<Bar> bars;
    for (const auto& j : arr) bars.push_back(bar_from_json(j, relative));
    return bars;
}

// Value-space reading used by diagram comparison: zero-length bars
// vanish, null death is an infinite bar. Relative sentinel bars have no
// finite birth value and cannot be placed in a diagram.
inline BarcodeDiagram diagram_from_json(const json& arr) {
    need(arr.is_array(), "barcode JSON must be an array");
    BarcodeDiagram out;
    for (const auto& j : arr) {
        need(!j.at("birth_value").is_null(), "diagram bars need a finite birth value");
        const double birth = j.at("birth_value").get<double>();
        const double death = j.at("death_value").is_null()
                                 ? std::numeric_limits<double>::infinity()
                                 : j.at("death_value").get<double>();
        if (death > birth) out.push_back(DiagramBar{j.at("degree").get<int>(), birth, death});
    }
    return out;
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    need(in.is_open(), "cannot open JSON file: " + path);
    return json::parse(in);
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    need(out.is_open(), "cannot open output file: " + path);
    out << j.dump(2) << '\n';
}

// Point cloud CSV: one point per row, comma-separated coordinates,
// '#' comments.
inline std::vector<std::vector<double>> parse_points_csv(std::istream& in) {
    std::vector<std::vector<double>> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n,") == std::string::npos) continue;
        std::vector<double> row;
        std::string cell;
        std::istringstream cells(line);
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                const double x = std::stod(cell, &used);
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
                    ++used;
                need(used == cell.size(), "trailing junk in coordinate");
                row.push_back(x);
            } catch (const std::exception&) {
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad coordinate");
            }
        }
        pts.push_back(std::move(row));
    }
    return pts;
}

inline std::vector<std::vector<double>> load_points_csv(const std::string& path) {
    std::ifstream in(path);
    need(in.is_open(), "cannot open points file: " + path);
    return parse_points_csv(in);
}

inline void save_points_csv(const std::string& path, const std::vector<std::vector<double>>& pts) {
    std::ofstream out(path);
    need(out.is_open(), "cannot open output file: " + path);
    out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& p : pts) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
        out << '\n';
    }
}

} // namespace cupmod

#endif
