#pragma once

#include <cstdint>
#include <vector>

namespace rigweb {

/// Deterministic generator (splitmix64). Not std::mt19937 + distributions:
/// those are implementation-defined, and reports must be byte-identical
/// across platforms for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-enough integer in [0, n). n = 0 returns 0.
    std::size_t below(std::size_t n) {
        if (n == 0) return 0;
        return static_cast<std::size_t>(next() % n);
    }

    int range(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1)));
    }

    bool chance(int num, int den) { return static_cast<int>(below(den)) < num; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v.at(below(v.size()));
    }

    /// Fisher-Yates shuffle, stable across platforms.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    Rng fork() { return Rng(next()); }

private:
    std::uint64_t state_;
};

} // namespace rigweb
