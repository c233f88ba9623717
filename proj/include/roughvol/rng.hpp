#pragma once

#include <array>
#include <cstdint>

namespace roughvol {

/// Philox 4x32-10 counter-based generator. A draw is a pure function of
/// (key, counter), so Monte Carlo substreams are reproducible regardless of
/// scheduling: same (master_seed, path_index) always yields bit-identical
/// streams.
struct Philox4x32 {
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 2> key,
                                              std::array<std::uint32_t, 4> counter);
};

/// Independent draw channels within one path's substream.
enum class RngChannel : std::uint32_t {
    BrownianW = 0,
    BrownianWbar = 1,
    HybridAux = 2,
    Scratch = 3,
};

struct RngPolicy {
    std::uint64_t master_seed = 0;

    /// Uniform in (0,1), strictly excluding the endpoints.
    double uniform(std::uint64_t path_index, RngChannel channel, std::uint64_t i) const;

    /// Standard normal via the inverse CDF (order-independent substreams).
    double normal(std::uint64_t path_index, RngChannel channel, std::uint64_t i) const;
};

/// Inverse standard normal CDF (Wichura's AS 241, double precision).
double inverse_normal_cdf(double p);

} // namespace roughvol
