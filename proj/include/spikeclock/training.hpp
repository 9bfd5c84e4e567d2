#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "spikeclock/network.hpp"
#include "spikeclock/raster.hpp"

namespace spikeclock {

// ============================================================================
// Teaching signal
// ============================================================================

struct teaching_entry {
    std::string motion_id;
    double frequency_hz = 0.0;
    int rank_weight = 0;
};

// Entries ordered fastest first. Equal rank_weight means same rank group;
// adjacent distinct groups must keep a frequency gap of at least f_base.
struct teaching_signal {
    std::vector<teaching_entry> entries;
    double f_base = 5.0;
};

// All invariant violations, empty when the signal is well formed. Ties are
// allowed within a rank group and cross-group gaps may equal f_base exactly.
std::vector<std::string> validate_teaching(const teaching_signal& ts);

// Ranking error of measured rates against the teaching signal. Motions are
// sorted by mean rate descending (ties broken by teaching order); the first
// term sums |own weight - weight of the landed position|, the second counts
// adjacent cross-group pairs whose measured rate gap falls below f_base.
double rank_error(const teaching_signal& ts, const std::vector<motion_measurement>& rates);

// ============================================================================
// Two-stage learning
// ============================================================================

struct training_config {
    double delta = 0.05;  // multiplicative learning rate
    std::size_t max_trials = 200;
    double k_max = exc_weight::ceiling;
    double k_min = 0.05;
};

struct band_classification {
    std::array<double, 4> errors{};   // indexed by band multiplier - 1
    std::vector<clock_band> selected;  // every band attaining the minimum
};

// Stage 1: evaluate all four band presets on the motion set and keep every
// band with minimal ranking error.
band_classification classify_band(const teaching_signal& ts,
                                  const std::vector<spike_raster>& motions,
                                  const network_config& base_cfg);

// Topology stream of one band: fixed across trials so only k varies during
// training, and reusable later to rebuild the trained network.
std::uint64_t band_seed(std::uint64_t base_seed, clock_band band);

// Measures every motion with one network; the autonomous run is simulated
// once per distinct duration and gated against each motion. motions[i] is
// reported under ts.entries[i].motion_id.
std::vector<motion_measurement> measure_set(const network& net, const teaching_signal& ts,
                                            const std::vector<spike_raster>& motions);

// One weight update: shrink k by delta if the error grew, expand otherwise,
// clamped to [k_min, k_max].
double nddp_step(double k, double e_c, double e_p, const training_config& cfg);

struct training_trial {
    std::size_t trial = 0;
    double k = 0.0;
    double error = 0.0;
};

struct training_trace {
    clock_band band = clock_band::slow;
    std::array<double, 4> stage1_errors{};
    std::vector<training_trial> trials;
    double final_k = 0.0;
    bool converged = false;
};

// Stage 1 then stage 2: for each selected band, rebuild the network each
// trial with the band's fixed seed so only k varies, stop at zero error or
// after max_trials. The first trial has no previous error and performs no
// update. motions[i] must carry the spikes for ts.entries[i].
std::vector<training_trace> train(const teaching_signal& ts,
                                  const std::vector<spike_raster>& motions,
                                  const network_config& base_cfg, const training_config& tcfg);

}  // namespace spikeclock
