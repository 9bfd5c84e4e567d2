#pragma once

#include <string>
#include <vector>

#include "spikeclock/network.hpp"
#include "spikeclock/training.hpp"

namespace spikeclock {

// Speed classes separated by descending rate thresholds; labels ordered
// fastest first, one more label than thresholds.
struct class_boundaries {
    std::vector<double> thresholds;
    std::vector<std::string> labels;
};

// Labels rank groups of a teaching signal by their weight: "rank-6" etc.
std::string group_label(int rank_weight);

// Midpoint rule: each threshold halves the gap between the slowest trained
// rate of the faster group and the fastest trained rate of the slower group.
// Requires the measured ranking to match the teaching order (a converged
// system); throws otherwise.
class_boundaries derive_boundaries(const teaching_signal& ts,
                                   const std::vector<motion_measurement>& trained);

// Label of the fastest class whose lower threshold does not exceed the rate;
// a rate exactly on a threshold goes to the faster class.
const std::string& classify(double rate_hz, const class_boundaries& b);

struct labeled_motion {
    std::string motion_id;
    std::string truth;
    spike_raster spikes;
};

struct motion_verdict {
    std::string motion_id;
    double rate_hz = 0.0;
    std::string predicted;
    std::string truth;
};

struct evaluation_report {
    class_boundaries boundaries;
    std::vector<motion_verdict> per_motion;
    double accuracy = 0.0;
};

// Measure every test motion with the trained network, classify by rate, and
// score against the ground truth. The test set must be non-empty.
evaluation_report evaluate(const network& net, const class_boundaries& b,
                           const std::vector<labeled_motion>& tests);

}  // namespace spikeclock
