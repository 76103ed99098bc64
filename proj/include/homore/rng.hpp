#pragma once

#include <cstdint>
#include <random>

namespace homore {

// Seeded generator for sampling in checks and tests. Avoids
// std::uniform_int_distribution so streams are identical across standard
// library implementations.
class SampleGen {
public:
    explicit SampleGen(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform-ish in [0, bound); bound > 0
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    // uniform-ish in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace homore
