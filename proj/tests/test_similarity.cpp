#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "spikeclock/network.hpp"
#include "spikeclock/raster.hpp"
#include "spikeclock/rng.hpp"
#include "spikeclock/similarity.hpp"
#include "spikeclock/training.hpp"

using namespace spikeclock;

namespace {

spike_raster column_raster(const std::vector<std::vector<int>>& columns) {
    spike_raster r(columns.front().size(), columns.size(), 1.0);
    for (std::size_t t = 0; t < columns.size(); ++t)
        for (std::size_t i = 0; i < columns[t].size(); ++i)
            if (columns[t][i]) r.set(i, t);
    return r;
}

// independent cosine of two binary columns
double cosine(const spike_raster& z, std::size_t t1, std::size_t t2) {
    double dot = 0.0, n1 = 0.0, n2 = 0.0;
    for (std::size_t i = 0; i < z.n_neurons; ++i) {
        double a = z.get(i, t1) ? 1.0 : 0.0;
        double b = z.get(i, t2) ? 1.0 : 0.0;
        dot += a * b;
        n1 += a;
        n2 += b;
    }
    if (n1 == 0.0 || n2 == 0.0) return 0.0;
    return dot / (std::sqrt(n1) * std::sqrt(n2));
}

// a matrix whose mean-offset profile is exactly the supplied function, built
// by writing profile(|t1-t2|) into every diagonal
similarity_matrix profile_matrix(std::size_t timesteps, const std::vector<double>& by_offset) {
    similarity_matrix m;
    m.timesteps = timesteps;
    m.values.assign(timesteps * timesteps, 0.0);
    for (std::size_t t1 = 0; t1 < timesteps; ++t1)
        for (std::size_t t2 = 0; t2 < timesteps; ++t2) {
            std::size_t d = t1 > t2 ? t1 - t2 : t2 - t1;
            m.values[t1 * timesteps + t2] = d < by_offset.size() ? by_offset[d] : 0.0;
        }
    return m;
}

// random block with one pinned bit per column so every column is nonzero
spike_raster random_block(rng& gen, std::size_t n, std::size_t steps) {
    spike_raster r(n, steps, 1.0);
    for (std::size_t t = 0; t < steps; ++t) {
        r.set(t % n, t);
        for (std::size_t i = 0; i < n; ++i)
            if (gen.uniform01() < 0.4) r.set(i, t);
    }
    return r;
}

spike_raster tile(const spike_raster& block, std::size_t copies) {
    spike_raster r(block.n_neurons, block.timesteps * copies, block.dt_ms);
    for (std::size_t q = 0; q < copies; ++q)
        for (std::size_t t = 0; t < block.timesteps; ++t)
            for (std::size_t i = 0; i < block.n_neurons; ++i)
                if (block.get(i, t)) r.set(i, q * block.timesteps + t);
    return r;
}

}  // namespace

TEST_CASE("similarity index handles the pinned hand values") {
    spike_raster z = column_raster({
        {1, 1, 0},  // t0
        {1, 0, 1},  // t1
        {1, 1, 0},  // t2: identical to t0
        {0, 0, 0},  // t3: silent
        {0, 0, 1},  // t4: disjoint from t0
    });
    CHECK(similarity_index(z, 0, 2) == 1.0);           // identical nonzero columns
    CHECK(similarity_index(z, 0, 4) == 0.0);           // disjoint support
    CHECK(similarity_index(z, 0, 1) == 0.5);  // dot 1 over sqrt(2*2), exact
    CHECK(similarity_index(z, 0, 3) == 0.0);           // silent column convention
    CHECK(similarity_index(z, 3, 3) == 0.0);
    CHECK(similarity_index(z, 1, 1) == 1.0);           // nonzero diagonal
    CHECK_THROWS_AS(similarity_index(z, 0, 5), std::out_of_range);
    CHECK_THROWS_AS(similarity_index(z, 9, 0), std::out_of_range);
}

TEST_CASE("similarity values are bounded symmetric cosines") {
    rng gen(51);
    spike_raster z(16, 24, 1.0);
    for (std::size_t t = 0; t < 24; ++t)
        for (std::size_t i = 0; i < 16; ++i)
            if (gen.uniform01() < 0.3) z.set(i, t);

    similarity_matrix m = build_similarity(z);
    REQUIRE(m.timesteps == 24);
    for (std::size_t t1 = 0; t1 < 24; ++t1) {
        for (std::size_t t2 = 0; t2 < 24; ++t2) {
            double v = m.at(t1, t2);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            CHECK(std::abs(v - m.at(t2, t1)) <= 1e-12);
        }
        if (step_popcount(z, t1) > 0) CHECK(m.at(t1, t1) == 1.0);
    }
}

TEST_CASE("the matrix agrees with pairwise index calls on a small raster") {
    rng gen(52);
    spike_raster z(4, 6, 1.0);
    for (std::size_t t = 0; t < 6; ++t)
        for (std::size_t i = 0; i < 4; ++i)
            if (gen.uniform01() < 0.5) z.set(i, t);
    similarity_matrix m = build_similarity(z);
    for (std::size_t t1 = 0; t1 < 6; ++t1)
        for (std::size_t t2 = 0; t2 < 6; ++t2) {
            CHECK(m.at(t1, t2) == similarity_index(z, t1, t2));
            CHECK(m.at(t1, t2) == doctest::Approx(cosine(z, t1, t2)).epsilon(1e-12));
        }
}

TEST_CASE("similarity is invariant under neuron permutation and zero padding") {
    rng gen(53);
    spike_raster z = random_block(gen, 10, 60);

    std::vector<std::size_t> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 9; i > 0; --i) std::swap(perm[i], perm[gen.below(i + 1)]);

    spike_raster shuffled(10, 60, 1.0);
    spike_raster padded(13, 60, 1.0);  // three always-silent neurons appended
    for (std::size_t t = 0; t < 60; ++t)
        for (std::size_t i = 0; i < 10; ++i)
            if (z.get(i, t)) {
                shuffled.set(perm[i], t);
                padded.set(i, t);
            }

    similarity_matrix base = build_similarity(z);
    similarity_matrix after = build_similarity(shuffled);
    similarity_matrix wide = build_similarity(padded);
    for (std::size_t t1 = 0; t1 < 60; ++t1)
        for (std::size_t t2 = 0; t2 < 60; ++t2) {
            CHECK(base.at(t1, t2) == after.at(t1, t2));
            CHECK(base.at(t1, t2) == wide.at(t1, t2));
        }

    CHECK(estimate_clock_repetitions(base) == estimate_clock_repetitions(after));
    CHECK(estimate_clock_repetitions(base) == estimate_clock_repetitions(wide));
}

TEST_CASE("tiling a base pattern q times reports q repetitions") {
    rng gen(54);
    spike_raster block = random_block(gen, 10, 40);
    for (std::size_t q = 1; q <= 4; ++q) {
        spike_raster tiled = tile(block, q);
        similarity_matrix m = build_similarity(tiled);
        INFO("q = ", q);
        CHECK(estimate_clock_repetitions(m, 0.9, 20) == q);
    }
}

TEST_CASE("a decaying profile has no repetitions") {
    std::vector<double> decay(80);
    for (std::size_t d = 0; d < 80; ++d) decay[d] = std::exp(-double(d) / 25.0);
    CHECK(estimate_clock_repetitions(profile_matrix(80, decay), 0.9, 20) == 1);
}

TEST_CASE("peaks must rise strictly, may plateau right, and respect separation") {
    auto with_peaks = [](std::vector<std::size_t> offsets, double lift,
                         std::vector<double> base) {
        for (std::size_t d : offsets) base[d] = lift;
        return base;
    };
    std::vector<double> flat(100, 0.3);

    // one sharp above-threshold peak -> base pattern plus one recurrence
    CHECK(estimate_clock_repetitions(profile_matrix(100, with_peaks({40}, 0.95, flat)), 0.9, 20) == 2);

    // below the threshold it is ignored
    CHECK(estimate_clock_repetitions(profile_matrix(100, with_peaks({40}, 0.85, flat)), 0.9, 20) == 1);

    // two peaks closer than min_separation collapse onto the first
    CHECK(estimate_clock_repetitions(profile_matrix(100, with_peaks({40, 50}, 0.95, flat)), 0.9,
                                     20) == 2);

    // spaced peaks both count
    CHECK(estimate_clock_repetitions(profile_matrix(100, with_peaks({40, 70}, 0.95, flat)), 0.9,
                                     20) == 3);

    // a two-step plateau counts once, at its left edge
    CHECK(estimate_clock_repetitions(profile_matrix(100, with_peaks({40, 41}, 0.95, flat)), 0.9,
                                     20) == 2);

    // a peak exactly at min_separation has no left neighbour inside the
    // profile and is not eligible
    CHECK(estimate_clock_repetitions(profile_matrix(100, with_peaks({20}, 0.95, flat)), 0.9, 20) ==
          1);

    // stricter thresholds can only lower the count
    std::vector<double> two = with_peaks({40, 70}, 0.92, flat);
    CHECK(estimate_clock_repetitions(profile_matrix(100, two), 0.95, 20) <=
          estimate_clock_repetitions(profile_matrix(100, two), 0.9, 20));
}

TEST_CASE("repetition estimation validates its parameters") {
    similarity_matrix m = profile_matrix(40, std::vector<double>(40, 0.2));
    CHECK_THROWS_AS(estimate_clock_repetitions(m, 0.0, 20), std::invalid_argument);
    CHECK_THROWS_AS(estimate_clock_repetitions(m, 1.0, 20), std::invalid_argument);
    CHECK_THROWS_AS(estimate_clock_repetitions(m, 0.9, 0), std::invalid_argument);
    // a separation beyond the matrix leaves only the base pattern
    CHECK(estimate_clock_repetitions(m, 0.9, 40) == 1);
    similarity_matrix empty;
    CHECK(estimate_clock_repetitions(empty, 0.9, 20) == 1);
}

TEST_CASE("repetition counts map onto the four clock bands") {
    CHECK(assign_band(1) == clock_band::slow);
    CHECK(assign_band(2) == clock_band::middle);
    CHECK(assign_band(3) == clock_band::fast);
    CHECK(assign_band(4) == clock_band::ultra_fast);
    CHECK(assign_band(7) == clock_band::ultra_fast);  // saturates
    CHECK_THROWS_AS(assign_band(0), std::invalid_argument);
}

TEST_CASE("band presets order the measured clock frequency") {
    // small network whose four presets separate cleanly; the exact counts are
    // frozen as a regression oracle
    std::size_t reps[4];
    for (std::size_t b = 0; b < 4; ++b) {
        network_config cfg;
        cfg.n_neurons = 120;
        cfg.p_conn = 0.4;
        cfg.w_inh = 2.8;
        cfg.external_input = 30.0;
        cfg = apply_band(cfg, all_bands[b]);
        cfg.seed = band_seed(2, all_bands[b]);
        spike_raster z = simulate(build_network(cfg), 500);
        reps[b] = estimate_clock_repetitions(build_similarity(z), 0.9, 20);
    }
    INFO("counts ", reps[0], " ", reps[1], " ", reps[2], " ", reps[3]);
    CHECK(reps[0] == 1);
    CHECK(reps[0] < reps[1]);
    CHECK(reps[1] < reps[2]);
    CHECK(reps[2] < reps[3]);
}
