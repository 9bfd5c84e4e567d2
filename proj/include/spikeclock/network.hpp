#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spikeclock/raster.hpp"

namespace spikeclock {

// ============================================================================
// Clock bands
// ============================================================================

enum class clock_band { slow, middle, fast, ultra_fast };

constexpr std::array<clock_band, 4> all_bands = {clock_band::slow, clock_band::middle,
                                                 clock_band::fast, clock_band::ultra_fast};

constexpr int band_multiplier(clock_band b) { return int(b) + 1; }

constexpr const char* band_name(clock_band b) {
    switch (b) {
        case clock_band::slow: return "slow";
        case clock_band::middle: return "middle";
        case clock_band::fast: return "fast";
        case clock_band::ultra_fast: return "ultra_fast";
    }
    return "?";
}

// Global excitatory weight with the hard 2.5 ceiling baked into the type:
// construction clamps from above and rejects non-positive values, so no
// configuration path can exceed the ceiling.
class exc_weight {
  public:
    static constexpr double ceiling = 2.5;

    exc_weight() = default;
    explicit exc_weight(double v) {
        if (!(v > 0.0)) throw std::invalid_argument("excitatory weight must be positive");
        v_ = v < ceiling ? v : ceiling;
    }
    double value() const { return v_; }

  private:
    double v_ = 1.0;
};

// ============================================================================
// Configuration
// ============================================================================

struct network_config {
    std::size_t n_neurons = 900;
    std::size_t module_size = 1;   // neurons sharing one incoming pattern
    double tau_ms = 100.0;         // synaptic trace decay
    exc_weight k_exc{1.0};         // global excitatory weight
    double w_inh = 3.6;            // inhibitory weight magnitude
    double external_input = 30.0;  // constant drive I
    double p_conn = 0.5;           // per-pair connection probability
    double p_exc = 0.5;            // excitatory share of connections
    double dt_ms = 1.0;
    std::uint64_t seed = 0;
};

struct band_preset {
    std::size_t module_size;
    double tau_ms;
    double k_exc;
};

// (b, tau, k) per band: slow (1,100,1), middle (5,100,1), fast (10,50,2.5),
// ultra_fast (15,50,2.5).
band_preset configure_band(clock_band band);

// base config with the band's (module_size, tau, k) applied
network_config apply_band(network_config base, clock_band band);

// ============================================================================
// Network
// ============================================================================

// Immutable after build. One signed weight row is drawn per module over all
// n_neurons sources: +w_inh inhibitory, -k_exc excitatory, 0 absent. Every
// neuron of the module shares the row; the self-connection is zeroed per
// neuron on read (and excluded from the simulated sum).
class network {
  public:
    const network_config& config() const { return cfg_; }
    std::size_t size() const { return cfg_.n_neurons; }
    std::size_t module_count() const { return modules_; }
    std::size_t module_of(std::size_t neuron) const { return neuron / cfg_.module_size; }
    const double* module_row(std::size_t m) const { return rows_.data() + m * cfg_.n_neurons; }

    double weight(std::size_t dst, std::size_t src) const {
        return dst == src ? 0.0 : module_row(module_of(dst))[src];
    }

  private:
    friend network build_network(const network_config&);
    network_config cfg_;
    std::size_t modules_ = 0;
    std::vector<double> rows_;
};

network build_network(const network_config& cfg);

// Runs the threshold dynamics for `timesteps` steps from the all-silent state:
// u_i(t) = I - sum_j w_ij * trace_j(t), spike iff u_i(t) >= 0, where trace_j
// accumulates exp(-dt/tau)-decayed spikes of neuron j with one step of delay.
spike_raster simulate(const network& net, std::size_t timesteps);

struct simulation_record {
    spike_raster spikes;
    std::vector<double> membrane;  // step-major, timesteps x n
};
simulation_record simulate_recorded(const network& net, std::size_t timesteps);

// Element-wise AND of two equally-shaped rasters.
spike_raster gate(const spike_raster& z, const spike_raster& m);

// Per-neuron average rate in Hz: ones / (n * steps * dt_seconds).
double mean_firing_rate(const spike_raster& r);

struct motion_measurement {
    std::string motion_id;
    double mean_rate_hz = 0.0;
    spike_raster response;
};

// simulate for the motion's length, gate with it, measure the result.
motion_measurement respond(const network& net, const spike_raster& motion,
                           std::string motion_id = {});

}  // namespace spikeclock
