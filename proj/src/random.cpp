#include "reserve3d/random.hpp"

#include "reserve3d/errors.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <string>

namespace reserve3d {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    std::uint64_t z = x + UINT64_C(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_id) noexcept {
    return splitmix64(master_seed ^ splitmix64(stream_id + UINT64_C(0x9E3779B97F4A7C15)));
}

namespace {

RandomStream::Engine make_engine(std::uint64_t seed) {
    const std::uint64_t a = splitmix64(seed);
    const std::uint64_t b = splitmix64(seed + 1);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return RandomStream::Engine(seq);
}

} // namespace

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed),
      stream_id_(stream_id),
      engine_(make_engine(derive_stream_seed(master_seed, stream_id))) {}

GammaShapeScale gamma_shape_scale(double mean, double variance) {
    if (!(mean > 0.0) || !std::isfinite(mean))
        throw ParameterError("gamma mean must be positive and finite, got " + std::to_string(mean));
    if (!(variance > 0.0) || !std::isfinite(variance))
        throw ParameterError("gamma shape/scale needs a positive variance, got " + std::to_string(variance));
    return {mean * mean / variance, variance / mean};
}

Count sample_poisson(RandomStream& stream, double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw ParameterError("poisson mean must be non-negative and finite, got " + std::to_string(mean));
    if (mean == 0.0) return 0;
    std::poisson_distribution<Count> dist(mean);
    return dist(stream.engine());
}

Count sample_binomial(RandomStream& stream, Count n, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ParameterError("binomial probability must lie in [0, 1], got " + std::to_string(p));
    if (n < 0) throw ParameterError("binomial trial count must be non-negative");
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;
    std::binomial_distribution<Count> dist(n, p);
    return dist(stream.engine());
}

std::vector<Count> sample_multinomial(RandomStream& stream, Count n, std::span<const double> probs) {
    if (probs.empty()) throw ParameterError("multinomial needs at least one category");
    if (n < 0) throw ParameterError("multinomial trial count must be non-negative");
    for (double p : probs) {
        if (!(p >= 0.0) || !std::isfinite(p))
            throw ParameterError("multinomial probabilities must be non-negative and finite");
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9)
        throw ParameterError("multinomial probabilities sum to " + std::to_string(total) + ", not 1");

    // suffix[j] = probs[j] + ... + probs[last]; the last positive category then
    // gets conditional probability exactly 1.
    std::vector<double> suffix(probs.size() + 1, 0.0);
    for (std::size_t j = probs.size(); j-- > 0;) suffix[j] = suffix[j + 1] + probs[j];

    std::vector<Count> out(probs.size(), 0);
    Count remaining = n;
    for (std::size_t j = 0; j < probs.size() && remaining > 0; ++j) {
        if (probs[j] == 0.0) continue;
        const double conditional = std::min(1.0, probs[j] / suffix[j]);
        const Count draw = sample_binomial(stream, remaining, conditional);
        out[j] = draw;
        remaining -= draw;
    }
    return out;
}

double sample_gamma_mv(RandomStream& stream, double mean, double variance) {
    if (!(mean > 0.0) || !std::isfinite(mean))
        throw ParameterError("gamma mean must be positive and finite, got " + std::to_string(mean));
    if (!(variance >= 0.0) || !std::isfinite(variance))
        throw ParameterError("gamma variance must be non-negative and finite, got " + std::to_string(variance));
    if (variance == 0.0) return mean;
    const auto [shape, scale] = gamma_shape_scale(mean, variance);
    std::gamma_distribution<double> dist(shape, scale);
    return dist(stream.engine());
}

} // namespace reserve3d
