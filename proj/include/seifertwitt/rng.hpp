#pragma once

#include <cstdint>
#include <random>

namespace sw {

// mt19937_64 output is fixed by the standard; the bounded draw is ours so
// replays match across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed), seed_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [lo, hi]
    long range(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}  // namespace sw
