#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

namespace skex {

/// Portable deterministic generator: the splitmix64 sequence. All sampled
/// corpora, training shuffles, and search rollouts draw from this so runs
/// reproduce bit-exactly across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    uint64_t next_below(uint64_t n) {
        return n == 0 ? 0 : static_cast<uint64_t>(next_double() * static_cast<double>(n));
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    int uniform_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Independent child stream (used to shard per-design seeds).
    Rng fork(uint64_t salt) {
        Rng r(state_ ^ (0x5851f42d4c957f2dULL * (salt + 1)));
        r.next_u64();
        return r;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

}  // namespace skex
