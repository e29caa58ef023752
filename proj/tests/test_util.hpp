#pragma once

#include <cmath>
#include <cstdint>

namespace testutil {

inline bool rel_close(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

// splitmix64; keeps test data identical across standard libraries
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    double uniform(double lo, double hi) {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= (z >> 31);
        return lo + (hi - lo) * (static_cast<double>(z >> 11) * 0x1.0p-53);
    }

    int integer(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(uniform(0.0, 1.0) * (hi - lo + 1 - 1e-12));
    }

private:
    std::uint64_t state_;
};

} // namespace testutil
