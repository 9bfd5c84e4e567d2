#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace spikeclock {

// Binary spike activity, n_neurons x timesteps. Storage is bit-packed and
// step-major: each timestep owns words_per_step() consecutive 64-bit words
// holding the population vector for that step, neuron index = bit index.
// Padding bits past n_neurons in the last word of a step are always zero, so
// whole-array popcounts are valid.
struct spike_raster {
    std::size_t n_neurons = 0;
    std::size_t timesteps = 0;
    double dt_ms = 1.0;
    std::vector<std::uint64_t> words;

    spike_raster() = default;
    spike_raster(std::size_t neurons, std::size_t steps, double dt)
        : n_neurons(neurons), timesteps(steps), dt_ms(dt),
          words(words_per_step() * steps, 0) {}

    std::size_t words_per_step() const { return (n_neurons + 63) / 64; }

    const std::uint64_t* step_words(std::size_t step) const {
        return words.data() + step * words_per_step();
    }
    std::uint64_t* step_words(std::size_t step) {
        return words.data() + step * words_per_step();
    }

    bool get(std::size_t neuron, std::size_t step) const {
        return (step_words(step)[neuron >> 6] >> (neuron & 63)) & 1u;
    }

    void set(std::size_t neuron, std::size_t step, bool value = true) {
        std::uint64_t& w = step_words(step)[neuron >> 6];
        std::uint64_t bit = std::uint64_t(1) << (neuron & 63);
        if (value)
            w |= bit;
        else
            w &= ~bit;
    }

    bool same_shape(const spike_raster& o) const {
        return n_neurons == o.n_neurons && timesteps == o.timesteps && dt_ms == o.dt_ms;
    }

    bool operator==(const spike_raster&) const = default;
};

// Total number of set bits (spike count) in the raster.
std::uint64_t information_content(const spike_raster& r);

// Set bits within one timestep column.
std::uint64_t step_popcount(const spike_raster& r, std::size_t step);

}  // namespace spikeclock
