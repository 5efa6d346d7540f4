#ifndef CUPMOD_F2LINALG_HPP
#define CUPMOD_F2LINALG_HPP

#include <utility>
#include <vector>

#include "bitset.hpp"
#include "check.hpp"

namespace cupmod {

// A cochain over Z/2: the set of simplex indices where it evaluates to 1,
// together with its degree. A degree is meaningful even when the support
// is empty (the zero cochain of that degree).
struct Cochain {
    int degree = 0;
    Bitset support;

    bool is_zero() const { return support.empty(); }
};

enum class ColumnOrigin { coboundary, product };

// Column matrix over Z/2 with lazily maintained reduced state.
//
// Invariants once reduce() has drained the worklist:
//   - the pivot (highest set position) of every nonzero column is unique,
//   - every column modification was a left-to-right addition: the source
//     column position is strictly smaller than the target position.
//
// Product columns carry their annotations {birth, rep_at_birth, degree}.
// rep_at_birth is a frozen copy taken at append time; later column
// additions and row zeroings only touch the working support.
class ColumnMatrix {
public:
    struct Column {
        Bitset bits;
        long pivot = -1;
        ColumnOrigin origin = ColumnOrigin::coboundary;
        bool alive = false;
        int degree = 0;
        int birth = 0;
        Cochain rep_at_birth; // product columns only
    };

    explicit ColumnMatrix(int width_bits)
        : width_(width_bits), pivot_owner_(width_bits, -1) {}

    int columns() const { return static_cast<int>(cols_.size()); }
    const Column& column(int pos) const { return cols_[pos]; }
    bool reduced() const { return work_.empty(); }

    // Number of alive (nonzero) columns; equals the rank once reduced.
    int rank() const {
        check(work_.empty(), "rank queried on unreduced matrix");
        int r = 0;
        for (const auto& c : cols_)
            if (c.alive) ++r;
        return r;
    }

    // When set, every column addition is recorded as (source, target).
    void set_audit(std::vector<std::pair<int, int>>* log) { audit_ = log; }

    // Appends a coboundary column with the given set positions.
    int append_coboundary(const std::vector<int>& rows) {
        int pos = new_column(ColumnOrigin::coboundary);
        for (int r : rows) cols_[pos].bits.set(static_cast<std::size_t>(r));
        cols_[pos].alive = !cols_[pos].bits.empty();
        if (cols_[pos].alive) work_.push_back(pos);
        return pos;
    }

    // Reserves an empty coboundary column to be populated later (the
    // relative sweep grows its coboundary block incrementally).
    int append_empty_coboundary() { return new_column(ColumnOrigin::coboundary); }

    // Populates a reserved coboundary column. The column may sit to the
    // left of already-populated columns; reduce() restores the pivot
    // invariant with left-to-right additions only.
    void populate_column(int pos, const std::vector<int>& rows) {
        Column& c = cols_[pos];
        check(c.origin == ColumnOrigin::coboundary && !c.alive && c.bits.empty(),
              "populate_column target must be a reserved empty column");
        for (int r : rows) c.bits.set(static_cast<std::size_t>(r));
        c.alive = !c.bits.empty();
        if (c.alive) work_.push_back(pos);
    }

    // Appends a product column as-given (no immediate reduction) and
    // freezes its representative-at-birth annotation.
    int append_product(const Cochain& value, int birth) {
        check(!value.is_zero(), "zero cochain appended as product column");
        int pos = new_column(ColumnOrigin::product);
        Column& c = cols_[pos];
        c.bits = value.support;
        c.degree = value.degree;
        c.birth = birth;
        c.rep_at_birth = value;
        c.alive = true;
        work_.push_back(pos);
        return pos;
    }

    // Zeroes one row across all columns. Reduced state may be invalidated;
    // the affected pivot owner is queued for the next reduce().
    void zero_row(int row) {
        const auto r = static_cast<std::size_t>(row);
        long owner = pivot_owner_[row];
        if (owner >= 0) {
            pivot_owner_[row] = -1;
            cols_[owner].pivot = -1;
            work_.push_back(static_cast<int>(owner));
        }
        for (auto& c : cols_)
            if (c.alive) c.bits.reset(r);
    }

    // Restores the reduced state with left-to-right column additions and
    // returns the positions whose columns became zero during this call.
    std::vector<int> reduce() {
        std::vector<int> zeroed;
        while (!work_.empty()) {
            int pos = work_.back();
            work_.pop_back();
            Column& c = cols_[pos];
            if (!c.alive) continue;
            for (;;) {
                c.pivot = c.bits.highest();
                if (c.pivot < 0) {
                    c.alive = false;
                    c.bits = Bitset(static_cast<std::size_t>(width_));
                    zeroed.push_back(pos);
                    break;
                }
                long owner = pivot_owner_[c.pivot];
                if (owner == pos) break;
                if (owner < 0) {
                    pivot_owner_[c.pivot] = pos;
                    break;
                }
                if (owner < pos) {
                    add_into(static_cast<int>(owner), pos);
                } else {
                    // This column is leftmost for the pivot: it takes
                    // ownership and the previous owner re-reduces.
                    pivot_owner_[c.pivot] = pos;
                    cols_[owner].pivot = -1;
                    work_.push_back(static_cast<int>(owner));
                    break;
                }
            }
        }
        return zeroed;
    }

    // Membership test of c against the current column span. Requires
    // reduced state; never mutates the matrix.
    bool is_independent(const Bitset& c) const {
        check(work_.empty(), "is_independent on unreduced matrix");
        Bitset tmp = c;
        for (;;) {
            long p = tmp.highest();
            if (p < 0) return false;
            long owner = pivot_owner_[p];
            if (owner < 0) return true;
            tmp ^= cols_[owner].bits;
        }
    }

private:
    int new_column(ColumnOrigin origin) {
        Column c;
        c.bits = Bitset(static_cast<std::size_t>(width_));
        c.origin = origin;
        cols_.push_back(std::move(c));
        return static_cast<int>(cols_.size()) - 1;
    }

    void add_into(int src, int dst) {
        check(src < dst, "column addition must go left to right");
        cols_[dst].bits ^= cols_[src].bits;
        if (audit_) audit_->emplace_back(src, dst);
    }

    int width_;
    std::vector<Column> cols_;
    std::vector<long> pivot_owner_;
    std::vector<int> work_;
    std::vector<std::pair<int, int>>* audit_ = nullptr;
};

} // namespace cupmod

#endif
