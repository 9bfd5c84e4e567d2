#pragma once

#include <cstdint>
#include <string>

#include "spikeclock/raster.hpp"

namespace spikeclock {

// Parameters of one synthetic periodic motion: population bursts recurring at
// motion_frequency, standing in for the spike trains an encoded gait video
// would produce.
struct motion_spec {
    std::string motion_id;
    double frequency_hz = 0.0;    // burst repetition rate; 0 = static scene
    double duty_cycle = 0.5;      // active fraction of each period, (0, 1]
    double active_fraction = 0.5; // neurons per burst, (0, 1]
    double jitter_ms = 0.0;       // per-(burst, neuron) onset perturbation bound
    std::uint64_t seed = 0;
};

// Builds the n_neurons x (duration/dt) raster for a motion. Burst onsets sit
// at multiples of the period; exactly round(frequency * duration / 1000)
// bursts are emitted, so a trailing fraction of a period shorter than half
// counts as no burst. Each burst activates floor(active_fraction * n) distinct
// neurons drawn from spec.seed, firing through the whole burst window; jitter
// shifts each neuron's window onset by a uniform value in [-jitter, +jitter].
spike_raster synthesize_motion(const motion_spec& spec, std::size_t n_neurons,
                               double duration_ms, double dt_ms);

}  // namespace spikeclock
