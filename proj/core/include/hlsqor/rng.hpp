#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hlsqor {

/// Deterministic random source. std::mt19937_64 has a standard-fixed output
/// sequence, but the standard distributions do not, so every mapping from
/// raw 64-bit draws to values is spelled out here. Identical seeds give
/// identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n). Plain modulo; the bias is irrelevant at the
    /// sizes used here and the mapping stays fixed.
    std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Fisher-Yates shuffle with the fixed next_below mapping.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

    /// splitmix64 mix of a base seed and a stream index, for deriving
    /// independent per-tree / per-record substreams.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hlsqor
