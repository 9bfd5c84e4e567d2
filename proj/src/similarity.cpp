#include "spikeclock/similarity.hpp"

#include <cmath>
#include <stdexcept>

#include "spikeclock/kernels.hpp"

namespace spikeclock {

namespace {

double from_counts(std::uint64_t dot, std::uint64_t n1, std::uint64_t n2) {
    if (n1 == 0 || n2 == 0) return 0.0;
    if (dot == n1 && dot == n2) return 1.0;
    // single rounding: exact whenever n1 * n2 is a perfect square
    return double(dot) / std::sqrt(double(n1) * double(n2));
}

}  // namespace

double similarity_index(const spike_raster& z, std::size_t t1, std::size_t t2) {
    if (t1 >= z.timesteps || t2 >= z.timesteps)
        throw std::out_of_range("similarity step outside the raster");
    std::size_t w = z.words_per_step();
    const std::uint64_t* c1 = z.step_words(t1);
    const std::uint64_t* c2 = z.step_words(t2);
    return from_counts(kernels::and_popcount_words(c1, c2, w), kernels::popcount_words(c1, w),
                       kernels::popcount_words(c2, w));
}

similarity_matrix build_similarity(const spike_raster& z) {
    similarity_matrix m;
    m.timesteps = z.timesteps;
    m.values.assign(z.timesteps * z.timesteps, 0.0);

    std::size_t w = z.words_per_step();
    std::vector<std::uint64_t> ones(z.timesteps);
    for (std::size_t t = 0; t < z.timesteps; ++t)
        ones[t] = kernels::popcount_words(z.step_words(t), w);

    for (std::size_t t1 = 0; t1 < z.timesteps; ++t1) {
        for (std::size_t t2 = t1; t2 < z.timesteps; ++t2) {
            std::uint64_t dot =
                kernels::and_popcount_words(z.step_words(t1), z.step_words(t2), w);
            double s = from_counts(dot, ones[t1], ones[t2]);
            m.values[t1 * m.timesteps + t2] = s;
            m.values[t2 * m.timesteps + t1] = s;
        }
    }
    return m;
}

std::size_t estimate_clock_repetitions(const similarity_matrix& m, double theta_rep,
                                       std::size_t min_separation) {
    if (!(theta_rep > 0.0) || !(theta_rep < 1.0))
        throw std::invalid_argument("theta_rep must lie strictly between 0 and 1");
    if (min_separation < 1) throw std::invalid_argument("min_separation must be at least 1");

    std::size_t t_total = m.timesteps;
    if (t_total == 0 || min_separation >= t_total) return 1;

    // p[i] = mean over t of M[t][t + (min_separation + i)]
    std::size_t offsets = t_total - min_separation;
    std::vector<double> p(offsets);
    for (std::size_t i = 0; i < offsets; ++i) {
        std::size_t d = min_separation + i;
        double sum = 0.0;
        for (std::size_t t = 0; t + d < t_total; ++t) sum += m.at(t, t + d);
        p[i] = sum / double(t_total - d);
    }

    std::size_t count = 0;
    std::size_t last = 0;
    bool have_last = false;
    for (std::size_t i = 1; i + 1 < offsets; ++i) {
        if (!(p[i] > theta_rep) || !(p[i] > p[i - 1]) || !(p[i] >= p[i + 1])) continue;
        std::size_t d = min_separation + i;
        if (have_last && d - last < min_separation) continue;
        ++count;
        last = d;
        have_last = true;
    }
    return count + 1;
}

clock_band assign_band(std::size_t repetitions) {
    switch (repetitions) {
        case 0: throw std::invalid_argument("repetition count must be at least 1");
        case 1: return clock_band::slow;
        case 2: return clock_band::middle;
        case 3: return clock_band::fast;
        default: return clock_band::ultra_fast;
    }
}

}  // namespace spikeclock
