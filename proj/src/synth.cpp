#include "spikeclock/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spikeclock/rng.hpp"

namespace spikeclock {

spike_raster synthesize_motion(const motion_spec& spec, std::size_t n_neurons,
                               double duration_ms, double dt_ms) {
    if (n_neurons == 0) throw std::invalid_argument("synthesize_motion: n_neurons must be > 0");
    if (!(dt_ms > 0.0) || !(duration_ms >= dt_ms))
        throw std::invalid_argument("synthesize_motion: need duration >= dt > 0");
    if (spec.frequency_hz < 0.0) throw std::invalid_argument("synthesize_motion: negative frequency");
    if (!(spec.duty_cycle > 0.0 && spec.duty_cycle <= 1.0))
        throw std::invalid_argument("synthesize_motion: duty_cycle must be in (0, 1]");
    if (!(spec.active_fraction > 0.0 && spec.active_fraction <= 1.0))
        throw std::invalid_argument("synthesize_motion: active_fraction must be in (0, 1]");
    if (spec.jitter_ms < 0.0) throw std::invalid_argument("synthesize_motion: negative jitter");

    auto steps = std::size_t(std::llround(duration_ms / dt_ms));
    spike_raster out(n_neurons, steps, dt_ms);
    if (spec.frequency_hz == 0.0) return out;

    double period_ms = 1000.0 / spec.frequency_hz;
    double width_ms = spec.duty_cycle * period_ms;
    auto n_bursts = std::size_t(std::llround(spec.frequency_hz * duration_ms / 1000.0));
    auto burst_neurons = std::size_t(spec.active_fraction * double(n_neurons));

    std::vector<std::uint32_t> pool(n_neurons);
    for (std::size_t b = 0; b < n_bursts; ++b) {
        rng gen(derive_seed(spec.seed, {fnv1a64("burst"), b}));
        std::iota(pool.begin(), pool.end(), 0u);
        // partial Fisher-Yates: the first burst_neurons entries become the burst set
        for (std::size_t i = 0; i < burst_neurons; ++i)
            std::swap(pool[i], pool[i + gen.below(n_neurons - i)]);

        double onset_ms = double(b) * period_ms;
        for (std::size_t i = 0; i < burst_neurons; ++i) {
            double start = onset_ms + gen.symmetric(spec.jitter_ms);
            auto first = std::int64_t(std::floor(start / dt_ms));
            auto last = std::int64_t(std::floor((start + width_ms) / dt_ms));
            first = std::max<std::int64_t>(first, 0);
            last = std::min<std::int64_t>(last, std::int64_t(steps));
            for (std::int64_t s = first; s < last; ++s) out.set(pool[i], std::size_t(s));
        }
    }
    return out;
}

}  // namespace spikeclock
