#include "streg/rng.hpp"

namespace streg {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0)
        throw Error("Rng::below: n must be nonzero");
    // Rejection sampling to stay unbiased.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

int Rng::range(int lo, int hi) {
    if (hi < lo)
        throw Error("Rng::range: empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t Rng::pick_weighted(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights)
        total += w > 0 ? w : 0;
    if (total <= 0.0)
        throw DeadEndError("pick_weighted: all weights are zero");
    double x = unit() * total;
    double acc = 0.0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0)
            continue;
        acc += weights[i];
        last = i;
        if (x < acc)
            return i;
    }
    return last;
}

Rng Rng::derive(std::uint64_t master, std::uint64_t stream, std::uint64_t round) {
    // Mix the three words through one splitmix pass each so that nearby
    // (stream, round) pairs land far apart.
    Rng mixer(master ^ (0x632be59bd9b4e019ULL * (stream + 1)));
    std::uint64_t a = mixer.next_u64();
    Rng mixer2(a ^ (0x9e6c63d0876a9a45ULL * (round + 1)));
    return Rng(mixer2.next_u64());
}

} // namespace streg
