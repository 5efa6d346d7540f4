#ifndef CUPMOD_BITSET_HPP
#define CUPMOD_BITSET_HPP

#include <cstdint>
#include <cassert>
#include <vector>

namespace cupmod {

// Fixed-width bit vector over Z/2 used for cochain supports and matrix
// columns. Bit positions are filtration indices, so position 0 is unused
// by most callers (simplex indices start at 1).
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size_bits() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    void flip(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    // Highest set position, or -1 when empty.
    long highest() const {
        for (std::size_t w = words_.size(); w-- > 0;)
            if (words_[w]) return static_cast<long>(w * 64 + 63 - __builtin_clzll(words_[w]));
        return -1;
    }

    // Lowest set position, or -1 when empty.
    long lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<long>(w * 64 + __builtin_ctzll(words_[w]));
        return -1;
    }

    Bitset& operator^=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

    // All set positions in increasing order.
    std::vector<int> positions() const {
        std::vector<int> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                out.push_back(static_cast<int>(w * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
        return out;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace cupmod

#endif
