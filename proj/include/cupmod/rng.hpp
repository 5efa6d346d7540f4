#ifndef CUPMOD_RNG_HPP
#define CUPMOD_RNG_HPP

#include <cstdint>
#include <random>

namespace cupmod {

// Seeded generator helpers. std::mt19937_64 output is pinned by the
// standard, but std::uniform_int_distribution is not, so tests and
// fixtures draw through these helpers to stay reproducible across
// toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n). Modulo bias is irrelevant at test scales.
    std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }

    int range(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { // [0, 1)
        return static_cast<double>(eng_() >> 11) * (1.0 / 9007199254740992.0);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace cupmod

#endif
