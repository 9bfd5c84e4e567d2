#include "spikeclock/training.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "spikeclock/rng.hpp"

namespace spikeclock {

std::vector<std::string> validate_teaching(const teaching_signal& ts) {
    std::vector<std::string> out;
    const auto& e = ts.entries;

    if (!(ts.f_base > 0.0)) out.push_back("f_base must be positive");
    std::unordered_map<std::string, int> seen;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].rank_weight <= 0)
            out.push_back("entry " + std::to_string(i) + ": rank weight must be positive");
        if (++seen[e[i].motion_id] == 2)
            out.push_back("duplicate motion id '" + e[i].motion_id + "'");
    }
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i].frequency_hz < e[i + 1].frequency_hz)
            out.push_back("entries " + std::to_string(i) + "," + std::to_string(i + 1) +
                          ": frequencies must be non-increasing");
        if (e[i].rank_weight < e[i + 1].rank_weight)
            out.push_back("entries " + std::to_string(i) + "," + std::to_string(i + 1) +
                          ": rank weights must be non-increasing");
        bool group_boundary = e[i].rank_weight != e[i + 1].rank_weight;
        if (group_boundary && e[i].frequency_hz - e[i + 1].frequency_hz < ts.f_base)
            out.push_back("entries " + std::to_string(i) + "," + std::to_string(i + 1) +
                          ": cross-group frequency gap below f_base");
    }
    return out;
}

double rank_error(const teaching_signal& ts, const std::vector<motion_measurement>& rates) {
    const auto& entries = ts.entries;
    if (rates.size() != entries.size())
        throw std::invalid_argument("measurement count does not match the teaching signal");

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!index.emplace(entries[i].motion_id, i).second)
            throw std::invalid_argument("duplicate motion id in the teaching signal");

    // teaching index and rate per measurement, sorted by rate descending with
    // ties broken by teaching order
    std::vector<std::size_t> teach(rates.size());
    std::vector<char> taken(entries.size(), 0);
    for (std::size_t i = 0; i < rates.size(); ++i) {
        auto it = index.find(rates[i].motion_id);
        if (it == index.end())
            throw std::invalid_argument("measured motion '" + rates[i].motion_id +
                                        "' is not in the teaching signal");
        if (taken[it->second])
            throw std::invalid_argument("motion '" + rates[i].motion_id + "' measured twice");
        taken[it->second] = 1;
        teach[i] = it->second;
    }

    std::vector<std::size_t> order(rates.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rates[a].mean_rate_hz != rates[b].mean_rate_hz)
            return rates[a].mean_rate_hz > rates[b].mean_rate_hz;
        return teach[a] < teach[b];
    });

    long term1 = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        int own = entries[teach[order[pos]]].rank_weight;
        int landed = entries[pos].rank_weight;
        term1 += std::abs(own - landed);
    }

    long term2 = 0;
    for (std::size_t pos = 0; pos + 1 < order.size(); ++pos) {
        const auto& hi = rates[order[pos]];
        const auto& lo = rates[order[pos + 1]];
        bool cross = entries[teach[order[pos]]].rank_weight !=
                     entries[teach[order[pos + 1]]].rank_weight;
        if (cross && hi.mean_rate_hz - lo.mean_rate_hz < ts.f_base) ++term2;
    }
    return double(term1 + term2);
}

std::uint64_t band_seed(std::uint64_t base_seed, clock_band band) {
    return derive_seed(base_seed, {fnv1a64("band"), std::uint64_t(band_multiplier(band))});
}

std::vector<motion_measurement> measure_set(const network& net, const teaching_signal& ts,
                                            const std::vector<spike_raster>& motions) {
    std::map<std::size_t, spike_raster> runs;
    std::vector<motion_measurement> out;
    out.reserve(motions.size());
    for (std::size_t i = 0; i < motions.size(); ++i) {
        const spike_raster& m = motions[i];
        if (m.n_neurons != net.size())
            throw std::invalid_argument("motion raster does not match the network size");
        if (m.dt_ms != net.config().dt_ms)
            throw std::invalid_argument("motion raster dt does not match the network dt");
        auto it = runs.find(m.timesteps);
        if (it == runs.end()) it = runs.emplace(m.timesteps, simulate(net, m.timesteps)).first;
        motion_measurement mm;
        mm.motion_id = ts.entries[i].motion_id;
        mm.response = gate(it->second, m);
        mm.mean_rate_hz = mean_firing_rate(mm.response);
        out.push_back(std::move(mm));
    }
    return out;
}

namespace {

double band_error(const teaching_signal& ts, const std::vector<spike_raster>& motions,
                  const network_config& base_cfg, clock_band band, double k) {
    network_config cfg = apply_band(base_cfg, band);
    cfg.k_exc = exc_weight(k);
    cfg.seed = band_seed(base_cfg.seed, band);
    network net = build_network(cfg);
    return rank_error(ts, measure_set(net, ts, motions));
}

void check_training_config(const training_config& t) {
    if (!(t.delta > 0.0) || !(t.delta < 1.0))
        throw std::invalid_argument("delta must lie strictly between 0 and 1");
    if (t.max_trials < 1) throw std::invalid_argument("max_trials must be at least 1");
    if (!(t.k_min > 0.0) || !(t.k_min <= t.k_max))
        throw std::invalid_argument("need 0 < k_min <= k_max");
    if (t.k_max > exc_weight::ceiling)
        throw std::invalid_argument("k_max cannot exceed the excitatory ceiling");
}

}  // namespace

band_classification classify_band(const teaching_signal& ts,
                                  const std::vector<spike_raster>& motions,
                                  const network_config& base_cfg) {
    if (motions.size() != ts.entries.size())
        throw std::invalid_argument("motion count does not match the teaching signal");
    band_classification out;
    for (clock_band band : all_bands) {
        double k = configure_band(band).k_exc;
        out.errors[std::size_t(band)] = band_error(ts, motions, base_cfg, band, k);
    }
    double best = *std::min_element(out.errors.begin(), out.errors.end());
    for (clock_band band : all_bands)
        if (out.errors[std::size_t(band)] == best) out.selected.push_back(band);
    return out;
}

double nddp_step(double k, double e_c, double e_p, const training_config& cfg) {
    double next = e_c > e_p ? k * (1.0 - cfg.delta) : k * (1.0 + cfg.delta);
    return std::clamp(next, cfg.k_min, cfg.k_max);
}

std::vector<training_trace> train(const teaching_signal& ts,
                                  const std::vector<spike_raster>& motions,
                                  const network_config& base_cfg,
                                  const training_config& tcfg) {
    check_training_config(tcfg);
    if (auto violations = validate_teaching(ts); !violations.empty()) {
        std::ostringstream msg;
        msg << "invalid teaching signal:";
        for (const auto& v : violations) msg << ' ' << v;
        throw std::invalid_argument(msg.str());
    }

    band_classification stage1 = classify_band(ts, motions, base_cfg);

    std::vector<training_trace> out;
    for (clock_band band : stage1.selected) {
        training_trace trace;
        trace.band = band;
        trace.stage1_errors = stage1.errors;

        double k = std::clamp(configure_band(band).k_exc, tcfg.k_min, tcfg.k_max);
        double e_p = std::numeric_limits<double>::infinity();
        for (std::size_t trial = 1; trial <= tcfg.max_trials; ++trial) {
            double e_c = band_error(ts, motions, base_cfg, band, k);
            trace.trials.push_back({trial, k, e_c});
            trace.final_k = k;
            if (e_c == 0.0) {
                trace.converged = true;
                break;
            }
            if (trial > 1) k = nddp_step(k, e_c, e_p, tcfg);
            e_p = e_c;
        }
        out.push_back(std::move(trace));
    }
    return out;
}

}  // namespace spikeclock
