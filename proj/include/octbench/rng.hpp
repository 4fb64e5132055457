#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace octbench {

// Deterministic random helpers. std::mt19937_64 output is fully specified,
// but the std distributions are not, so the mappings below are hand-rolled
// to keep results identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi].
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n-1] (n > 0), rejection-free modulo of a 64-bit draw
    /// is fine at these scales.
    std::uint64_t uniform_index(std::uint64_t n) { return gen_() % n; }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.28318530717958647692 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// FNV-1a over a string, folded with a 64-bit seed. Stable across platforms,
/// used to derive per-sample seeds so generation order does not matter.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view key) {
    std::uint64_t h = 14695981039346656037ull ^ seed;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    // fold the seed back in so key collisions across seeds stay unlikely
    h ^= seed * 0x9e3779b97f4a7c15ull;
    return h;
}

}  // namespace octbench
