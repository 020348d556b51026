#pragma once

#include <cstdint>

#include "poly.hpp"
#include "rational.hpp"

namespace qumbral {

/// splitmix64: tiny deterministic generator for the seeded verification
/// suites. Identical seeds give identical streams on every platform.
struct splitmix64 {
    std::uint64_t state;

    explicit splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

/// Coefficient distribution of the verification suites: numerator in {-9..9},
/// denominator in {1..9}.
inline rational random_rational(splitmix64& rng) {
    return rational(rng.range(-9, 9), rng.range(1, 9));
}

inline rational random_nonzero_rational(splitmix64& rng) {
    long num = rng.range(1, 9);
    if (rng.below(2) == 0) num = -num;
    return rational(num, rng.range(1, 9));
}

/// Random poly of exactly the drawn degree (uniform 0..max_deg, leading
/// coefficient forced nonzero).
inline poly random_poly(splitmix64& rng, int max_deg) {
    int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    std::vector<rational> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = random_rational(rng);
    c[static_cast<std::size_t>(d)] = random_nonzero_rational(rng);
    return poly(std::move(c));
}

}  // namespace qumbral
