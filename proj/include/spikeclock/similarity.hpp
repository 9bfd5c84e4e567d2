#pragma once

#include <cstddef>
#include <vector>

#include "spikeclock/network.hpp"
#include "spikeclock/raster.hpp"

namespace spikeclock {

// Cosine similarity of the population activity at two timesteps. Exactly 1
// for bit-identical nonzero columns; 0 whenever either column is silent
// (silence counts as orthogonal to everything, never NaN).
double similarity_index(const spike_raster& z, std::size_t t1, std::size_t t2);

struct similarity_matrix {
    std::size_t timesteps = 0;
    std::vector<double> values;  // timesteps x timesteps, row-major

    double at(std::size_t t1, std::size_t t2) const { return values[t1 * timesteps + t2]; }
};

similarity_matrix build_similarity(const spike_raster& z);

// Counts how often the population pattern recurs. The diagonal-offset profile
// p(d) = mean_t M[t][t+d] is scanned for local maxima above theta_rep, kept
// greedily at least min_separation apart; the base pattern itself adds one,
// so a raster that never recurs yields 1. A maximum pressed against the
// min_separation cutoff is indistinguishable from the near-diagonal
// correlation shoulder and is not counted.
std::size_t estimate_clock_repetitions(const similarity_matrix& m, double theta_rep = 0.9,
                                       std::size_t min_separation = 20);

// 1 -> slow, 2 -> middle, 3 -> fast, >= 4 -> ultra_fast
clock_band assign_band(std::size_t repetitions);

}  // namespace spikeclock
