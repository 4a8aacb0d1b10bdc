#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace reserve3d {

using Count = std::int64_t;

// Mixes (master_seed, stream_id) into the 64-bit seed of a substream.
//
//   seed = splitmix64(master_seed ^ splitmix64(stream_id + 0x9E3779B97F4A7C15))
//
// where splitmix64 is the finalizer of Steele, Lea and Flood's SplittableRandom.
// The engine is then seeded through std::seed_seq with the four 32-bit halves of
// splitmix64(seed) and splitmix64(seed + 1). The derivation depends only on the
// pair, so replicate r is reproducible regardless of which worker runs it.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_id) noexcept;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// A single-consumer random substream. Copyable; copies continue identically.
class RandomStream {
public:
    using Engine = std::mt19937_64;

    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }
    Engine& engine() noexcept { return engine_; }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    Engine engine_;
};

struct GammaShapeScale {
    double shape;
    double scale;
};

// shape = mean^2 / variance, scale = variance / mean. Requires variance > 0.
GammaShapeScale gamma_shape_scale(double mean, double variance);

Count sample_poisson(RandomStream& stream, double mean);
Count sample_binomial(RandomStream& stream, Count n, double p);
// Sequential conditional-binomial split. Components sum to n exactly and
// zero-probability categories always receive zero.
std::vector<Count> sample_multinomial(RandomStream& stream, Count n, std::span<const double> probs);
// Gamma variate parameterized by mean and variance; variance == 0 returns mean.
double sample_gamma_mv(RandomStream& stream, double mean, double variance);

} // namespace reserve3d
