#include "spikeclock/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "spikeclock/exports.hpp"
#include "spikeclock/frames.hpp"
#include "spikeclock/inference.hpp"
#include "spikeclock/parallel.hpp"
#include "spikeclock/rng.hpp"
#include "spikeclock/similarity.hpp"

namespace spikeclock {

using nlohmann::json;

// ============================================================================
// Config parsing
// ============================================================================

namespace {

struct violations {
    std::vector<std::string> list;

    void add(std::string msg) { list.push_back(std::move(msg)); }

    void raise_if_any() const {
        if (list.empty()) return;
        std::ostringstream msg;
        msg << "invalid configuration:";
        for (const auto& v : list) msg << "\n  - " << v;
        throw std::invalid_argument(msg.str());
    }
};

void check_keys(const json& j, const char* where, std::initializer_list<const char*> known,
                violations& out) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || item.key() == k;
        if (!ok) out.add(std::string(where) + ": unknown key '" + item.key() + "'");
    }
}

template <class T>
void fetch(const json& j, const char* where, const char* key, T& out, violations& v) {
    auto it = j.find(key);
    if (it == j.end()) return;
    try {
        it->get_to(out);
    } catch (const json::exception&) {
        v.add(std::string(where) + "." + key + ": wrong type");
    }
}

void parse_network(const json& j, network_config& cfg, violations& v) {
    check_keys(j, "network",
               {"n_neurons", "module_size", "tau_ms", "k_exc", "w_inh", "external_input",
                "p_conn", "p_exc", "dt_ms"},
               v);
    fetch(j, "network", "n_neurons", cfg.n_neurons, v);
    fetch(j, "network", "module_size", cfg.module_size, v);
    fetch(j, "network", "tau_ms", cfg.tau_ms, v);
    double k = cfg.k_exc.value();
    fetch(j, "network", "k_exc", k, v);
    if (k > 0.0)
        cfg.k_exc = exc_weight(k);
    else
        v.add("network.k_exc: must be positive");
    fetch(j, "network", "w_inh", cfg.w_inh, v);
    fetch(j, "network", "external_input", cfg.external_input, v);
    fetch(j, "network", "p_conn", cfg.p_conn, v);
    fetch(j, "network", "p_exc", cfg.p_exc, v);
    fetch(j, "network", "dt_ms", cfg.dt_ms, v);

    if (cfg.n_neurons == 0) v.add("network.n_neurons: must be positive");
    if (cfg.module_size == 0 || cfg.n_neurons % cfg.module_size != 0)
        v.add("network.module_size: must evenly divide n_neurons");
    if (!(cfg.tau_ms > 0.0)) v.add("network.tau_ms: must be positive");
    if (!(cfg.dt_ms > 0.0)) v.add("network.dt_ms: must be positive");
    if (!(cfg.w_inh > 0.0)) v.add("network.w_inh: must be positive");
    if (cfg.p_conn < 0.0 || cfg.p_conn > 1.0) v.add("network.p_conn: must lie in [0, 1]");
    if (cfg.p_exc < 0.0 || cfg.p_exc > 1.0) v.add("network.p_exc: must lie in [0, 1]");
}

void parse_encoder(const json& j, encoder_config& cfg, violations& v) {
    check_keys(j, "encoder",
               {"delta_s", "delta_t", "pixel_threshold", "grid_rows", "grid_cols", "dt_ms"},
               v);
    fetch(j, "encoder", "delta_s", cfg.delta_s, v);
    fetch(j, "encoder", "delta_t", cfg.delta_t, v);
    fetch(j, "encoder", "pixel_threshold", cfg.pixel_threshold, v);
    fetch(j, "encoder", "grid_rows", cfg.grid_rows, v);
    fetch(j, "encoder", "grid_cols", cfg.grid_cols, v);
    fetch(j, "encoder", "dt_ms", cfg.dt_ms, v);

    if (cfg.delta_s == 0) v.add("encoder.delta_s: must be at least 1");
    if (cfg.delta_t == 0) v.add("encoder.delta_t: must be at least 1");
    if (cfg.grid_rows == 0 || cfg.grid_cols == 0) v.add("encoder: grid must be nonempty");
    if (!(cfg.dt_ms > 0.0)) v.add("encoder.dt_ms: must be positive");
    if (cfg.pixel_threshold < 0.0) v.add("encoder.pixel_threshold: must be nonnegative");
}

void parse_teaching(const json& j, teaching_signal& ts, violations& v) {
    check_keys(j, "teaching", {"f_base", "entries"}, v);
    fetch(j, "teaching", "f_base", ts.f_base, v);
    auto it = j.find("entries");
    if (it == j.end()) return;
    if (!it->is_array()) {
        v.add("teaching.entries: must be an array");
        return;
    }
    ts.entries.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& e = (*it)[i];
        std::string where = "teaching.entries[" + std::to_string(i) + "]";
        check_keys(e, where.c_str(), {"motion_id", "frequency_hz", "rank_weight"}, v);
        teaching_entry entry;
        fetch(e, where.c_str(), "motion_id", entry.motion_id, v);
        fetch(e, where.c_str(), "frequency_hz", entry.frequency_hz, v);
        fetch(e, where.c_str(), "rank_weight", entry.rank_weight, v);
        if (entry.motion_id.empty()) v.add(where + ".motion_id: required");
        ts.entries.push_back(std::move(entry));
    }
    for (const auto& problem : validate_teaching(ts)) v.add("teaching: " + problem);
}

void parse_training(const json& j, training_config& cfg, violations& v) {
    check_keys(j, "training", {"delta", "max_trials", "k_max", "k_min"}, v);
    fetch(j, "training", "delta", cfg.delta, v);
    fetch(j, "training", "max_trials", cfg.max_trials, v);
    fetch(j, "training", "k_max", cfg.k_max, v);
    fetch(j, "training", "k_min", cfg.k_min, v);

    if (!(cfg.delta > 0.0) || !(cfg.delta < 1.0))
        v.add("training.delta: must lie strictly between 0 and 1");
    if (cfg.max_trials < 1) v.add("training.max_trials: must be at least 1");
    if (!(cfg.k_min > 0.0) || !(cfg.k_min <= cfg.k_max))
        v.add("training: need 0 < k_min <= k_max");
    if (cfg.k_max > exc_weight::ceiling)
        v.add("training.k_max: cannot exceed the excitatory ceiling");
}

void parse_motion_spec(const json& j, const std::string& where, motion_spec& spec,
                       violations& v) {
    check_keys(j, where.c_str(),
               {"frequency_hz", "duty_cycle", "active_fraction", "jitter_ms", "seed"}, v);
    fetch(j, where.c_str(), "frequency_hz", spec.frequency_hz, v);
    fetch(j, where.c_str(), "duty_cycle", spec.duty_cycle, v);
    fetch(j, where.c_str(), "active_fraction", spec.active_fraction, v);
    fetch(j, where.c_str(), "jitter_ms", spec.jitter_ms, v);
    fetch(j, where.c_str(), "seed", spec.seed, v);

    if (spec.frequency_hz < 0.0) v.add(where + ".frequency_hz: must be nonnegative");
    if (spec.duty_cycle <= 0.0 || spec.duty_cycle > 1.0)
        v.add(where + ".duty_cycle: must lie in (0, 1]");
    if (spec.active_fraction < 0.0 || spec.active_fraction > 1.0)
        v.add(where + ".active_fraction: must lie in [0, 1]");
    if (spec.jitter_ms < 0.0) v.add(where + ".jitter_ms: must be nonnegative");
}

void parse_sources(const json& j, const char* where, bool labeled,
                   const std::filesystem::path& base_dir, std::vector<motion_source>& out,
                   violations& v) {
    if (!j.is_array()) {
        v.add(std::string(where) + ": must be an array");
        return;
    }
    out.clear();
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& e = j[i];
        std::string at = std::string(where) + "[" + std::to_string(i) + "]";
        check_keys(e, at.c_str(), {"motion_id", "truth", "frames", "synthetic"}, v);
        motion_source src;
        fetch(e, at.c_str(), "motion_id", src.motion_id, v);
        if (src.motion_id.empty()) v.add(at + ".motion_id: required");
        if (labeled) {
            fetch(e, at.c_str(), "truth", src.truth, v);
            if (src.truth.empty()) v.add(at + ".truth: required");
        } else if (e.contains("truth")) {
            v.add(at + ".truth: only test motions carry labels");
        }

        bool has_frames = e.contains("frames");
        bool has_synth = e.contains("synthetic");
        if (has_frames == has_synth) {
            v.add(at + ": needs exactly one of 'frames' or 'synthetic'");
        } else if (has_frames) {
            std::string p;
            fetch(e, at.c_str(), "frames", p, v);
            src.frames = (base_dir / p).lexically_normal();
            if (!std::filesystem::exists(src.frames))
                v.add(at + ".frames: no such file: " + src.frames.string());
        } else {
            motion_spec spec;
            spec.motion_id = src.motion_id;
            parse_motion_spec(e["synthetic"], at + ".synthetic", spec, v);
            src.synthetic = spec;
        }
        out.push_back(std::move(src));
    }
}

}  // namespace

experiment_config config_from_json_text(const std::string& text,
                                        const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid configuration:\n  - not valid JSON: ") +
                                    e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("invalid configuration:\n  - top level must be an object");
    // a manifest embeds the resolved config it was produced from
    if (j.contains("config") && j["config"].is_object()) j = j["config"];

    violations v;
    check_keys(j,
               "config", {"seed", "duration_ms", "theta_rep", "min_separation", "network",
                          "encoder", "teaching", "training", "motions", "tests"},
               v);

    experiment_config cfg;
    fetch(j, "config", "seed", cfg.seed, v);
    fetch(j, "config", "duration_ms", cfg.duration_ms, v);
    fetch(j, "config", "theta_rep", cfg.theta_rep, v);
    fetch(j, "config", "min_separation", cfg.min_separation, v);
    if (!(cfg.duration_ms > 0.0)) v.add("duration_ms: must be positive");
    if (!(cfg.theta_rep > 0.0) || !(cfg.theta_rep < 1.0))
        v.add("theta_rep: must lie strictly between 0 and 1");
    if (cfg.min_separation < 1) v.add("min_separation: must be at least 1");

    if (j.contains("network")) parse_network(j["network"], cfg.network, v);
    if (j.contains("encoder")) parse_encoder(j["encoder"], cfg.encoder, v);
    if (j.contains("teaching")) parse_teaching(j["teaching"], cfg.teaching, v);
    if (j.contains("training")) parse_training(j["training"], cfg.training, v);
    if (j.contains("motions")) parse_sources(j["motions"], "motions", false, base_dir, cfg.motions, v);
    if (j.contains("tests")) parse_sources(j["tests"], "tests", true, base_dir, cfg.tests, v);

    v.raise_if_any();
    return cfg;
}

experiment_config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("invalid configuration:\n  - cannot open config file: " +
                                    path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str(), path.parent_path());
}

namespace {

json spec_to_json(const motion_spec& s) {
    return {{"frequency_hz", s.frequency_hz},
            {"duty_cycle", s.duty_cycle},
            {"active_fraction", s.active_fraction},
            {"jitter_ms", s.jitter_ms},
            {"seed", s.seed}};
}

json sources_to_json(const std::vector<motion_source>& sources, bool labeled) {
    json arr = json::array();
    for (const auto& s : sources) {
        json e;
        e["motion_id"] = s.motion_id;
        if (labeled) e["truth"] = s.truth;
        if (s.synthetic)
            e["synthetic"] = spec_to_json(*s.synthetic);
        else
            e["frames"] = s.frames.string();
        arr.push_back(std::move(e));
    }
    return arr;
}

json config_to_json_value(const experiment_config& cfg) {
    json j;
    j["seed"] = cfg.seed;
    j["duration_ms"] = cfg.duration_ms;
    j["theta_rep"] = cfg.theta_rep;
    j["min_separation"] = cfg.min_separation;
    j["network"] = {{"n_neurons", cfg.network.n_neurons},
                    {"module_size", cfg.network.module_size},
                    {"tau_ms", cfg.network.tau_ms},
                    {"k_exc", cfg.network.k_exc.value()},
                    {"w_inh", cfg.network.w_inh},
                    {"external_input", cfg.network.external_input},
                    {"p_conn", cfg.network.p_conn},
                    {"p_exc", cfg.network.p_exc},
                    {"dt_ms", cfg.network.dt_ms}};
    j["encoder"] = {{"delta_s", cfg.encoder.delta_s},
                    {"delta_t", cfg.encoder.delta_t},
                    {"pixel_threshold", cfg.encoder.pixel_threshold},
                    {"grid_rows", cfg.encoder.grid_rows},
                    {"grid_cols", cfg.encoder.grid_cols},
                    {"dt_ms", cfg.encoder.dt_ms}};
    json entries = json::array();
    for (const auto& e : cfg.teaching.entries)
        entries.push_back({{"motion_id", e.motion_id},
                           {"frequency_hz", e.frequency_hz},
                           {"rank_weight", e.rank_weight}});
    j["teaching"] = {{"f_base", cfg.teaching.f_base}, {"entries", std::move(entries)}};
    j["training"] = {{"delta", cfg.training.delta},
                     {"max_trials", cfg.training.max_trials},
                     {"k_max", cfg.training.k_max},
                     {"k_min", cfg.training.k_min}};
    j["motions"] = sources_to_json(cfg.motions, false);
    j["tests"] = sources_to_json(cfg.tests, true);
    return j;
}

}  // namespace

std::string config_to_json(const experiment_config& cfg) {
    return config_to_json_value(cfg).dump(2) + "\n";
}

// ============================================================================
// Pipeline pieces
// ============================================================================

namespace {

std::size_t duration_steps(double duration_ms, double dt_ms) {
    return std::size_t(std::llround(duration_ms / dt_ms));
}

spike_raster materialize_motion(const experiment_config& cfg, const motion_source& src) {
    if (src.synthetic) {
        motion_spec spec = *src.synthetic;
        spec.motion_id = src.motion_id;
        spec.seed = derive_seed(cfg.seed,
                                {fnv1a64("motion"), fnv1a64(spec.motion_id), spec.seed});
        return synthesize_motion(spec, cfg.network.n_neurons, cfg.duration_ms,
                                 cfg.network.dt_ms);
    }
    frame_sequence frames = load_frames(src.frames);
    return encode(frames, cfg.encoder, cfg.duration_ms).raster;
}

std::vector<spike_raster> materialize_all(const experiment_config& cfg,
                                          const std::vector<motion_source>& sources) {
    std::vector<spike_raster> out(sources.size());
    parallel_for(sources.size(), cfg.threads,
                 [&](std::size_t i) { out[i] = materialize_motion(cfg, sources[i]); });
    return out;
}

network_config derived_network_config(const experiment_config& cfg) {
    network_config net = cfg.network;
    net.seed = derive_seed(cfg.seed, {fnv1a64("network")});
    return net;
}

void require_training_inputs(const experiment_config& cfg) {
    if (cfg.teaching.entries.empty())
        throw std::invalid_argument("training needs teaching entries in the config");
    if (cfg.motions.size() != cfg.teaching.entries.size())
        throw std::invalid_argument("training needs one motion per teaching entry");
    for (std::size_t i = 0; i < cfg.motions.size(); ++i)
        if (cfg.motions[i].motion_id != cfg.teaching.entries[i].motion_id)
            throw std::invalid_argument(
                "motions must list the teaching motions in teaching order; mismatch at '" +
                cfg.motions[i].motion_id + "'");
}

void append_trace_artifacts(const training_trace& trace, std::vector<artifact>& out) {
    std::string stem = std::string("trace_") + band_name(trace.band);
    out.push_back({stem + ".json", trace_to_json(trace)});
    out.push_back({stem + ".csv", trace_to_csv(trace)});
}

const training_trace* pick_converged(const std::vector<training_trace>& traces) {
    const training_trace* best = nullptr;
    for (const auto& t : traces)
        if (t.converged && (!best || t.trials.size() < best->trials.size())) best = &t;
    return best;
}

network rebuild_trained(const experiment_config& cfg, clock_band band, double k) {
    network_config net_cfg = apply_band(derived_network_config(cfg), band);
    net_cfg.k_exc = exc_weight(k);
    net_cfg.seed = band_seed(derived_network_config(cfg).seed, band);
    return build_network(net_cfg);
}

std::vector<labeled_motion> labeled_tests(const experiment_config& cfg) {
    std::vector<spike_raster> rasters = materialize_all(cfg, cfg.tests);
    std::vector<labeled_motion> out;
    out.reserve(cfg.tests.size());
    for (std::size_t i = 0; i < cfg.tests.size(); ++i)
        out.push_back({cfg.tests[i].motion_id, cfg.tests[i].truth, std::move(rasters[i])});
    return out;
}

}  // namespace

std::vector<artifact> run_encode(const experiment_config& cfg,
                                 const std::filesystem::path& frames_path) {
    frame_sequence frames = load_frames(frames_path);
    encoding_report rep = encode(frames, cfg.encoder, cfg.duration_ms);

    json j;
    j["total_bits"] = rep.total_bits;
    j["spikes_per_frame"] = rep.spikes_per_frame;
    std::vector<artifact> out;
    out.push_back({"raster.csv", raster_to_csv(rep.raster)});
    out.push_back({"raster.json", raster_sidecar_json(rep.raster)});
    out.push_back({"encoding.json", j.dump(2) + "\n"});
    return out;
}

std::vector<artifact> run_simulate(const experiment_config& cfg) {
    network net = build_network(derived_network_config(cfg));
    spike_raster z = simulate(net, duration_steps(cfg.duration_ms, cfg.network.dt_ms));
    similarity_matrix m = build_similarity(z);
    std::size_t reps = estimate_clock_repetitions(m, cfg.theta_rep, cfg.min_separation);

    std::vector<artifact> out;
    out.push_back({"raster.csv", raster_to_csv(z)});
    out.push_back({"raster.json", raster_sidecar_json(z)});
    out.push_back({"similarity.csv", similarity_to_csv(m)});
    out.push_back({"similarity.json", similarity_report_json(m, cfg.theta_rep, reps)});
    return out;
}

std::vector<artifact> run_similarity(const experiment_config& cfg,
                                     const std::filesystem::path& raster_csv,
                                     const std::filesystem::path& raster_json) {
    spike_raster z = load_raster(raster_csv, raster_json);
    similarity_matrix m = build_similarity(z);
    std::size_t reps = estimate_clock_repetitions(m, cfg.theta_rep, cfg.min_separation);

    std::vector<artifact> out;
    out.push_back({"similarity.csv", similarity_to_csv(m)});
    out.push_back({"similarity.json", similarity_report_json(m, cfg.theta_rep, reps)});
    return out;
}

std::vector<artifact> run_train(const experiment_config& cfg) {
    require_training_inputs(cfg);
    std::vector<spike_raster> motions = materialize_all(cfg, cfg.motions);
    std::vector<training_trace> traces =
        train(cfg.teaching, motions, derived_network_config(cfg), cfg.training);

    std::vector<artifact> out;
    for (const auto& t : traces) append_trace_artifacts(t, out);
    return out;
}

std::vector<artifact> run_infer(const experiment_config& cfg,
                                const std::filesystem::path& trace_path) {
    require_training_inputs(cfg);
    if (cfg.tests.empty()) throw std::invalid_argument("inference needs test motions");

    std::ifstream in(trace_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open trace file: " + trace_path.string());
    json j = json::parse(in);
    std::string name = j.at("band").get<std::string>();
    std::optional<clock_band> band;
    for (clock_band b : all_bands)
        if (name == band_name(b)) band = b;
    if (!band) throw std::invalid_argument("trace names an unknown band: " + name);
    if (!j.at("converged").get<bool>())
        throw std::invalid_argument("trace did not converge; cannot derive boundaries");
    double k = j.at("final_k").get<double>();

    network net = rebuild_trained(cfg, *band, k);
    std::vector<spike_raster> motions = materialize_all(cfg, cfg.motions);
    class_boundaries bounds = derive_boundaries(cfg.teaching, measure_set(net, cfg.teaching, motions));
    evaluation_report report = evaluate(net, bounds, labeled_tests(cfg));

    std::vector<artifact> out;
    out.push_back({"evaluation.json", evaluation_to_json(report)});
    out.push_back({"evaluation.csv", evaluation_to_csv(report)});
    return out;
}

std::vector<artifact> run_repro_synthetic(const experiment_config& cfg) {
    require_training_inputs(cfg);
    if (cfg.tests.empty()) throw std::invalid_argument("the benchmark needs test motions");

    std::vector<spike_raster> motions = materialize_all(cfg, cfg.motions);
    std::vector<training_trace> traces =
        train(cfg.teaching, motions, derived_network_config(cfg), cfg.training);

    std::vector<artifact> out;
    for (const auto& t : traces) append_trace_artifacts(t, out);

    const training_trace* winner = pick_converged(traces);
    if (!winner)
        throw std::runtime_error("no band converged; adjust training settings or the seed");

    network net = rebuild_trained(cfg, winner->band, winner->final_k);
    class_boundaries bounds =
        derive_boundaries(cfg.teaching, measure_set(net, cfg.teaching, motions));
    evaluation_report report = evaluate(net, bounds, labeled_tests(cfg));

    out.push_back({"evaluation.json", evaluation_to_json(report)});
    out.push_back({"evaluation.csv", evaluation_to_csv(report)});
    return out;
}

// ============================================================================
// Output
// ============================================================================

std::string write_run(const experiment_config& cfg, const std::string& command,
                      const std::vector<artifact>& artifacts) {
    std::filesystem::create_directories(cfg.out_dir);
    json manifest;
    manifest["command"] = command;
    manifest["seed"] = cfg.seed;
    manifest["config"] = config_to_json_value(cfg);
    json checksums = json::object();
    for (const auto& a : artifacts) {
        std::filesystem::path target = cfg.out_dir / a.relpath;
        if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
        atomic_write_file(target, a.content);
        checksums[a.relpath] = sha256_hex(a.content);
    }
    manifest["artifacts"] = std::move(checksums);
    std::string text = manifest.dump(2) + "\n";
    atomic_write_file(cfg.out_dir / "manifest.json", text);
    return text;
}

// ============================================================================
// Built-in benchmark
// ============================================================================

experiment_config synthetic_benchmark_config(std::uint64_t seed) {
    experiment_config cfg;
    cfg.seed = seed;

    struct group {
        double freq;
        int weight;
        double active_fraction;
        const char* tag;
    };
    const group groups[3] = {{15.0, 6, 0.9, "15hz"}, {10.0, 3, 0.6, "10hz"}, {5.0, 1, 0.3, "5hz"}};

    cfg.teaching.f_base = 5.0;
    for (const group& g : groups) {
        for (int copy = 0; copy < 2; ++copy) {
            std::string id = std::string("train-") + g.tag + (copy == 0 ? "-a" : "-b");
            cfg.teaching.entries.push_back({id, g.freq, g.weight});

            motion_source src;
            src.motion_id = id;
            motion_spec spec;
            spec.frequency_hz = g.freq;
            spec.duty_cycle = 0.5;
            spec.active_fraction = g.active_fraction;
            spec.jitter_ms = 0.0;
            spec.seed = std::uint64_t(copy);
            src.synthetic = spec;
            cfg.motions.push_back(std::move(src));
        }
        for (int variant = 0; variant < 6; ++variant) {
            motion_source src;
            src.motion_id = std::string("test-") + g.tag + "-" + std::to_string(variant);
            src.truth = group_label(g.weight);
            motion_spec spec;
            spec.frequency_hz = g.freq;
            spec.duty_cycle = 0.45 + 0.05 * (variant % 3);
            spec.active_fraction = g.active_fraction + 0.02 * (variant % 3 - 1);
            spec.jitter_ms = variant < 3 ? 0.0 : 2.0;
            spec.seed = std::uint64_t(variant);
            src.synthetic = spec;
            cfg.tests.push_back(std::move(src));
        }
    }
    return cfg;
}

}  // namespace spikeclock
