#include "spikeclock/network.hpp"

#include <cmath>

#include "spikeclock/kernels.hpp"
#include "spikeclock/rng.hpp"

namespace spikeclock {

band_preset configure_band(clock_band band) {
    switch (band) {
        case clock_band::slow: return {1, 100.0, 1.0};
        case clock_band::middle: return {5, 100.0, 1.0};
        case clock_band::fast: return {10, 50.0, 2.5};
        case clock_band::ultra_fast: return {15, 50.0, 2.5};
    }
    throw std::invalid_argument("unknown clock band");
}

network_config apply_band(network_config base, clock_band band) {
    band_preset p = configure_band(band);
    base.module_size = p.module_size;
    base.tau_ms = p.tau_ms;
    base.k_exc = exc_weight(p.k_exc);
    return base;
}

network build_network(const network_config& cfg) {
    if (cfg.n_neurons == 0) throw std::invalid_argument("network needs at least one neuron");
    if (cfg.module_size == 0 || cfg.n_neurons % cfg.module_size != 0)
        throw std::invalid_argument("module size must evenly divide the neuron count");
    if (!(cfg.tau_ms > 0.0) || !(cfg.dt_ms > 0.0))
        throw std::invalid_argument("tau and dt must be positive");
    if (!(cfg.w_inh > 0.0)) throw std::invalid_argument("inhibitory weight must be positive");
    if (cfg.p_conn < 0.0 || cfg.p_conn > 1.0 || cfg.p_exc < 0.0 || cfg.p_exc > 1.0)
        throw std::invalid_argument("connection probabilities must lie in [0, 1]");

    network net;
    net.cfg_ = cfg;
    net.modules_ = cfg.n_neurons / cfg.module_size;
    net.rows_.assign(net.modules_ * cfg.n_neurons, 0.0);

    rng gen(derive_seed(cfg.seed, {fnv1a64("topology")}));
    double k = cfg.k_exc.value();
    for (std::size_t m = 0; m < net.modules_; ++m) {
        double* row = net.rows_.data() + m * cfg.n_neurons;
        for (std::size_t j = 0; j < cfg.n_neurons; ++j) {
            if (gen.uniform01() >= cfg.p_conn) continue;
            row[j] = gen.uniform01() < cfg.p_exc ? -k : cfg.w_inh;
        }
    }
    return net;
}

namespace {

template <class Membrane>
spike_raster run(const network& net, std::size_t timesteps, Membrane&& record) {
    const network_config& cfg = net.config();
    std::size_t n = cfg.n_neurons;
    spike_raster out(n, timesteps, cfg.dt_ms);
    if (timesteps == 0) return out;

    double decay = std::exp(-cfg.dt_ms / cfg.tau_ms);
    std::vector<double> trace(n, 0.0);
    std::vector<double> module_dot(net.module_count());

    for (std::size_t t = 0; t < timesteps; ++t) {
        if (t > 0) {
            const std::uint64_t* prev = out.step_words(t - 1);
            for (std::size_t j = 0; j < n; ++j) {
                double fired = (prev[j >> 6] >> (j & 63)) & 1u ? 1.0 : 0.0;
                trace[j] = std::fma(decay, trace[j], fired);
            }
        }
        for (std::size_t m = 0; m < net.module_count(); ++m)
            module_dot[m] = kernels::dot_f64(net.module_row(m), trace.data(), n);

        std::uint64_t* col = out.step_words(t);
        std::size_t m = 0, left = cfg.module_size;
        for (std::size_t i = 0; i < n; ++i) {
            // the shared module row includes w_ii * trace_i; add it back to
            // honour the zero self-connection
            double u =
                cfg.external_input - module_dot[m] + net.module_row(m)[i] * trace[i];
            if (u >= 0.0) col[i >> 6] |= std::uint64_t(1) << (i & 63);
            record(t, i, u);
            if (--left == 0) {
                ++m;
                left = cfg.module_size;
            }
        }
    }
    return out;
}

}  // namespace

spike_raster simulate(const network& net, std::size_t timesteps) {
    return run(net, timesteps, [](std::size_t, std::size_t, double) {});
}

simulation_record simulate_recorded(const network& net, std::size_t timesteps) {
    simulation_record rec;
    rec.membrane.assign(timesteps * net.size(), 0.0);
    std::size_t n = net.size();
    rec.spikes = run(net, timesteps, [&](std::size_t t, std::size_t i, double u) {
        rec.membrane[t * n + i] = u;
    });
    return rec;
}

spike_raster gate(const spike_raster& z, const spike_raster& m) {
    if (!z.same_shape(m))
        throw std::invalid_argument("gating needs rasters of identical shape and dt");
    spike_raster out(z.n_neurons, z.timesteps, z.dt_ms);
    kernels::and_words(out.words.data(), z.words.data(), m.words.data(), out.words.size());
    return out;
}

double mean_firing_rate(const spike_raster& r) {
    if (r.n_neurons == 0 || r.timesteps == 0) return 0.0;
    double seconds = double(r.timesteps) * r.dt_ms / 1000.0;
    return double(information_content(r)) / (double(r.n_neurons) * seconds);
}

motion_measurement respond(const network& net, const spike_raster& motion,
                           std::string motion_id) {
    if (motion.n_neurons != net.size())
        throw std::invalid_argument("motion raster does not match the network size");
    if (motion.dt_ms != net.config().dt_ms)
        throw std::invalid_argument("motion raster dt does not match the network dt");
    motion_measurement out;
    out.motion_id = std::move(motion_id);
    spike_raster z = simulate(net, motion.timesteps);
    out.response = gate(z, motion);
    out.mean_rate_hz = mean_firing_rate(out.response);
    return out;
}

}  // namespace spikeclock
