#ifndef CUPMOD_COMPLEX_HPP
#define CUPMOD_COMPLEX_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cupmod {

// A simplex is its vertex list in ascending numeric order. That order is
// also the fixed vertex order used by the cup-product front/back splits,
// so it is canonical and never rearranged.
struct Simplex {
    std::vector<int> v;

    int dim() const { return static_cast<int>(v.size()) - 1; }

    bool operator==(const Simplex& o) const { return v == o.v; }
    bool operator<(const Simplex& o) const { return v < o.v; }
};

// A simplex-wise filtration K_0 = {} < K_1 < ... < K_n where K_i adds
// exactly one simplex. Simplices carry 1-based filtration indices; index 0
// stands for the empty complex. Every face of a simplex enters strictly
// earlier, and the value grid a_1 <= a_2 <= ... <= a_n is kept separately
// so barcodes can be rendered in index space or value space.
class Filtration {
public:
    Filtration() = default;

    // Builds a filtration from (value, vertex list) entries. Entries are
    // refined into simplex-wise order with the stable tie-break
    // (value, dimension, lexicographic vertices) and then validated.
    static Filtration from_simplices(std::vector<std::pair<double, std::vector<int>>> entries) {
        Filtration f;
        for (auto& [val, verts] : entries) {
            if (verts.empty()) throw std::runtime_error("simplex with no vertices");
            std::sort(verts.begin(), verts.end());
            for (std::size_t i = 1; i < verts.size(); ++i)
                if (verts[i] == verts[i - 1])
                    throw std::runtime_error("simplex with repeated vertex");
            if (!std::isfinite(val)) throw std::runtime_error("non-finite filtration value");
        }
        std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
            return a.second < b.second;
        });
        const int n = static_cast<int>(entries.size());
        f.simplices_.resize(n + 1);
        f.values_.resize(n + 1, 0.0);
        f.facets_.resize(n + 1);
        f.cofacets_.resize(n + 1);
        f.splits_.resize(n + 1);
        for (int i = 1; i <= n; ++i) {
            f.simplices_[i].v = std::move(entries[i - 1].second);
            f.values_[i] = entries[i - 1].first;
            if (!f.index_.emplace(f.simplices_[i].v, i).second)
                throw std::runtime_error("duplicate simplex in filtration");
            f.max_dim_ = std::max(f.max_dim_, f.simplices_[i].dim());
        }
        f.by_dim_.assign(f.max_dim_ + 1, {});
        for (int i = 1; i <= n; ++i) {
            const Simplex& s = f.simplices_[i];
            f.by_dim_[s.dim()].push_back(i);
            for (int drop = 0; drop <= s.dim(); ++drop) {
                if (s.dim() == 0) break;
                std::vector<int> face = s.v;
                face.erase(face.begin() + drop);
                auto it = f.index_.find(face);
                if (it == f.index_.end() || it->second >= i)
                    throw std::runtime_error("face missing or entering after its coface");
                f.facets_[i].push_back(it->second);
                f.cofacets_[it->second].push_back(i);
            }
            std::sort(f.facets_[i].begin(), f.facets_[i].end());
            // Front/back faces for every split position; faces of a present
            // simplex are always present, so the lookups cannot fail.
            f.splits_[i].resize(s.dim() + 1);
            for (int p = 0; p <= s.dim(); ++p) {
                std::vector<int> front(s.v.begin(), s.v.begin() + p + 1);
                std::vector<int> back(s.v.begin() + p, s.v.end());
                f.splits_[i][p] = {f.index_.at(front), f.index_.at(back)};
            }
        }
        return f;
    }

    int n() const { return static_cast<int>(simplices_.size()) - 1; }
    int max_dim() const { return max_dim_; }

    const Simplex& simplex(int i) const { return simplices_[i]; }
    int dim(int i) const { return simplices_[i].dim(); }
    double value(int i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    // Filtration index of a (sorted) vertex list, or 0 when absent.
    int index_of(const std::vector<int>& verts) const {
        auto it = index_.find(verts);
        return it == index_.end() ? 0 : it->second;
    }

    const std::vector<int>& facet_indices(int i) const { return facets_[i]; }
    const std::vector<int>& cofacet_indices(int i) const { return cofacets_[i]; }

    // Indices (front, back) of the dimension-p front face and the
    // complementary back face of simplex i.
    std::pair<int, int> split(int i, int p) const { return splits_[i][p]; }

    // Ascending filtration indices of all d-simplices; empty for d out of range.
    const std::vector<int>& simplices_of_dim(int d) const {
        static const std::vector<int> none;
        return (d < 0 || d > max_dim_) ? none : by_dim_[d];
    }

    // Coboundary column contents: column i lists the cofacet indices of
    // simplex i. Column i spans delta(sigma_i^*) in the full complex.
    std::vector<std::vector<int>> coboundary_columns() const {
        std::vector<std::vector<int>> cols(n() + 1);
        for (int i = 1; i <= n(); ++i) cols[i] = cofacets_[i];
        return cols;
    }

private:
    std::vector<Simplex> simplices_;
    std::vector<double> values_;
    std::vector<std::vector<int>> facets_;
    std::vector<std::vector<int>> cofacets_;
    std::vector<std::vector<std::pair<int, int>>> splits_;
    std::vector<std::vector<int>> by_dim_;
    std::map<std::vector<int>, int> index_;
    int max_dim_ = 0;
};

// Text format: one simplex per line as "<value> <v0> <v1> ... <vk>",
// '#' starts a comment, blank lines are skipped. Lines may appear in any
// order; loading refines ties into simplex-wise order.
inline Filtration load_filtration_text(std::istream& in) {
    std::vector<std::pair<double, std::vector<int>>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double val;
        if (!(ls >> val)) {
            std::string leftover;
            if (ls.clear(), ls >> leftover)
                throw std::runtime_error("line " + std::to_string(lineno) + ": expected a value");
            continue; // blank or comment-only line
        }
        std::vector<int> verts;
        int v;
        while (ls >> v) verts.push_back(v);
        if (!ls.eof())
            throw std::runtime_error("line " + std::to_string(lineno) + ": bad vertex id");
        if (verts.empty())
            throw std::runtime_error("line " + std::to_string(lineno) + ": no vertices");
        entries.emplace_back(val, std::move(verts));
    }
    return Filtration::from_simplices(std::move(entries));
}

inline Filtration load_filtration_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_filtration_text(in);
}

inline void save_filtration_text(const Filtration& f, std::ostream& out) {
    // Full double precision: reloading must reproduce the exact value
    // grid, or refinement ties could resolve differently.
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    for (int i = 1; i <= f.n(); ++i) {
        out << f.value(i);
        for (int v : f.simplex(i).v) out << ' ' << v;
        out << '\n';
    }
    out.precision(old_precision);
}

} // namespace cupmod

#endif
