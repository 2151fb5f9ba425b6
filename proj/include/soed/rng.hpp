#pragma once

// Seeded, reproducible random streams.
//
// All randomness in the library flows through RandomStream instances seeded
// explicitly by the caller; there is no global generator. Independent
// sub-streams are derived from a master seed and a purpose tag via
// derive_seed(), so the order in which consumers draw from their streams
// cannot affect each other. The generator is std::mt19937_64 (its output
// sequence is fixed by the standard) and Gaussian variates use an explicit
// Box-Muller transform rather than std::normal_distribution, whose algorithm
// is implementation-defined.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace soed {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Sub-seed for a named purpose, e.g. derive_seed(seed, "sketch-omega").
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
    return splitmix64(splitmix64(master) ^ fnv1a64(tag));
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal variate (Box-Muller; the spare of each pair is cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] so log(u1) is finite.
        const double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
        const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    /// Uniform integer in [0, n) via rejection sampling (no modulo bias).
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
        const std::uint64_t threshold = (-n) % n;  // 2^64 mod n
        std::uint64_t x;
        do {
            x = eng_();
        } while (x < threshold);
        return x % n;
    }

    /// k distinct indices drawn uniformly from {0,...,m-1}, returned ascending.
    std::vector<int> sample_without_replacement(int m, int k) {
        if (k < 0 || k > m) throw std::invalid_argument("sample_without_replacement: need 0 <= k <= m");
        std::vector<int> pool(m);
        for (int i = 0; i < m; ++i) pool[i] = i;
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(uniform_index(static_cast<std::uint64_t>(m - i)));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> out(pool.begin(), pool.begin() + k);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace soed
