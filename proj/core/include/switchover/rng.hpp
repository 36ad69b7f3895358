#pragma once

#include <cstdint>

namespace switchover {

// Identifies one reproducible random stream. Streams derived from the same
// master seed with distinct stream ids are independent; the same pair always
// reproduces the same sequence, regardless of thread count or call order.
struct RngStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derive a child stream, e.g. one per Monte Carlo trial.
inline RngStream substream(RngStream base, std::uint64_t index) {
    RngStream out;
    out.master_seed = base.master_seed;
    out.stream_id = splitmix64(base.stream_id ^ splitmix64(index + 0x51ed2701a9b4e0dULL));
    return out;
}

// Small counter-based generator: the state is a hash of (master_seed,
// stream_id), advanced by splitmix64 steps. xoshiro-quality is not needed
// here; splitmix64 passes BigCrush on its own.
class Rng {
public:
    explicit Rng(RngStream stream)
        : state_(splitmix64(stream.master_seed ^ splitmix64(stream.stream_id ^ 0x6a09e667f3bcc909ULL))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // uniform in [0,1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // uniform integer in [0, bound), bound >= 1
    std::uint64_t below(std::uint64_t bound) {
        // Lemire's multiply-shift with rejection
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace switchover
