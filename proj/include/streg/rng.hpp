#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "streg/errors.hpp"

namespace streg {

// Deterministic 64-bit generator (splitmix64 core). Chosen over the std
// engines/distributions so that sampled artifacts are byte-identical across
// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n). n must be nonzero.
    std::uint64_t below(std::uint64_t n);

    // Integer in [lo, hi], inclusive.
    int range(int lo, int hi);

    // Double in [0, 1).
    double unit();

    bool chance(double p) { return unit() < p; }

    // Index into `weights`, picked proportionally. Throws DeadEndError if the
    // total mass is zero.
    std::size_t pick_weighted(std::span<const double> weights);

    template <class T>
    const T& choose(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(below(xs.size()))];
    }

    // Independent child stream. derive(m, i, r) is a pure function of its
    // arguments, so per-item streams do not depend on draw order.
    static Rng derive(std::uint64_t master, std::uint64_t stream, std::uint64_t round = 0);

private:
    std::uint64_t state_;
};

} // namespace streg
