#include "spikeclock/inference.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace spikeclock {

std::string group_label(int rank_weight) { return "rank-" + std::to_string(rank_weight); }

class_boundaries derive_boundaries(const teaching_signal& ts,
                                   const std::vector<motion_measurement>& trained) {
    const auto& entries = ts.entries;
    if (entries.empty()) throw std::invalid_argument("teaching signal is empty");
    if (trained.size() != entries.size())
        throw std::invalid_argument("measurement count does not match the teaching signal");

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!index.emplace(entries[i].motion_id, i).second)
            throw std::invalid_argument("duplicate motion id in the teaching signal");

    std::vector<double> rate(entries.size(), 0.0);
    std::vector<char> seen(entries.size(), 0);
    for (const auto& m : trained) {
        auto it = index.find(m.motion_id);
        if (it == index.end())
            throw std::invalid_argument("measured motion '" + m.motion_id +
                                        "' is not in the teaching signal");
        if (seen[it->second])
            throw std::invalid_argument("motion '" + m.motion_id + "' measured twice");
        seen[it->second] = 1;
        rate[it->second] = m.mean_rate_hz;
    }

    // converged means the measured descending order lands every motion in its
    // own rank group
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rate[a] != rate[b]) return rate[a] > rate[b];
        return a < b;
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        if (entries[order[pos]].rank_weight != entries[pos].rank_weight)
            throw std::invalid_argument(
                "measured ranking violates the teaching order; train to convergence first");

    struct group_span {
        int weight;
        double lo, hi;
    };
    std::vector<group_span> groups;
    for (std::size_t start = 0; start < entries.size();) {
        std::size_t stop = start;
        group_span g{entries[start].rank_weight, rate[start], rate[start]};
        while (stop < entries.size() && entries[stop].rank_weight == g.weight) {
            g.lo = std::min(g.lo, rate[stop]);
            g.hi = std::max(g.hi, rate[stop]);
            ++stop;
        }
        groups.push_back(g);
        start = stop;
    }

    class_boundaries out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i > 0) out.thresholds.push_back((groups[i - 1].lo + groups[i].hi) / 2.0);
        out.labels.push_back(group_label(groups[i].weight));
    }
    return out;
}

const std::string& classify(double rate_hz, const class_boundaries& b) {
    if (b.labels.empty()) throw std::invalid_argument("boundaries carry no classes");
    if (b.labels.size() != b.thresholds.size() + 1)
        throw std::invalid_argument("boundary labels and thresholds disagree");
    for (std::size_t i = 0; i < b.thresholds.size(); ++i)
        if (rate_hz >= b.thresholds[i]) return b.labels[i];
    return b.labels.back();
}

evaluation_report evaluate(const network& net, const class_boundaries& b,
                           const std::vector<labeled_motion>& tests) {
    if (tests.empty()) throw std::invalid_argument("test set is empty");
    evaluation_report out;
    out.boundaries = b;

    std::map<std::size_t, spike_raster> runs;
    std::size_t correct = 0;
    for (const auto& t : tests) {
        if (t.spikes.n_neurons != net.size())
            throw std::invalid_argument("motion raster does not match the network size");
        if (t.spikes.dt_ms != net.config().dt_ms)
            throw std::invalid_argument("motion raster dt does not match the network dt");
        auto it = runs.find(t.spikes.timesteps);
        if (it == runs.end())
            it = runs.emplace(t.spikes.timesteps, simulate(net, t.spikes.timesteps)).first;
        motion_verdict v;
        v.motion_id = t.motion_id;
        v.rate_hz = mean_firing_rate(gate(it->second, t.spikes));
        v.predicted = classify(v.rate_hz, b);
        v.truth = t.truth;
        if (v.predicted == v.truth) ++correct;
        out.per_motion.push_back(std::move(v));
    }
    out.accuracy = double(correct) / double(tests.size());
    return out;
}

}  // namespace spikeclock
