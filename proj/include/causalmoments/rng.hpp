#ifndef CAUSALMOMENTS_RNG_HPP
#define CAUSALMOMENTS_RNG_HPP

#include <cstdint>
#include <random>

namespace causalmoments {

// Derives an independent sub-seed from (seed, stream). Used everywhere a
// component needs its own reproducible stream: integration axes, bootstrap
// replicates, simulation replications.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic uniform [0,1) stream. mt19937_64 is fully specified by the
// standard, so sequences are identical across platforms for a given seed.
class UniformStream {
public:
    UniformStream(std::uint64_t seed, std::uint64_t stream)
        : engine_(derive_seed(seed, stream)) {}

    double next() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform draw on [lo, hi]; degenerate lo == hi yields lo.
    double next(double lo, double hi) {
        return lo + next() * (hi - lo);
    }

    // Uniform index in [0, n).
    std::size_t next_index(std::size_t n) {
        auto idx = static_cast<std::size_t>(next() * static_cast<double>(n));
        return idx < n ? idx : n - 1;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace causalmoments

#endif
