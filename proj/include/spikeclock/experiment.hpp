#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "spikeclock/encoder.hpp"
#include "spikeclock/network.hpp"
#include "spikeclock/synth.hpp"
#include "spikeclock/training.hpp"

namespace spikeclock {

// A motion enters the pipeline either as a frame container on disk (encoded
// with the experiment's encoder settings) or as a synthetic burst pattern.
struct motion_source {
    std::string motion_id;
    std::string truth;  // ground-truth label, test motions only
    std::filesystem::path frames;
    std::optional<motion_spec> synthetic;
};

struct experiment_config {
    std::uint64_t seed = 0;
    std::filesystem::path out_dir = "out";
    std::size_t threads = 1;
    double duration_ms = 600.0;
    network_config network;
    encoder_config encoder;
    teaching_signal teaching;
    training_config training;
    double theta_rep = 0.9;
    std::size_t min_separation = 20;
    std::vector<motion_source> motions;  // training set, aligned with teaching
    std::vector<motion_source> tests;
};

// Parses a config JSON document (or a manifest embedding one under "config").
// Collects every violation into the thrown message. Referenced frame paths
// must resolve relative to the config file's directory.
experiment_config load_config(const std::filesystem::path& path);
experiment_config config_from_json_text(const std::string& text,
                                        const std::filesystem::path& base_dir);

// Full resolved configuration, defaults filled in.
std::string config_to_json(const experiment_config& cfg);

struct artifact {
    std::string relpath;
    std::string content;
};

// Pipeline runs: pure functions from config to artifact lists; nothing
// touches the filesystem except declared inputs.
std::vector<artifact> run_encode(const experiment_config& cfg,
                                 const std::filesystem::path& frames_path);
std::vector<artifact> run_simulate(const experiment_config& cfg);
std::vector<artifact> run_similarity(const experiment_config& cfg,
                                     const std::filesystem::path& raster_csv,
                                     const std::filesystem::path& raster_json);
std::vector<artifact> run_train(const experiment_config& cfg);
std::vector<artifact> run_infer(const experiment_config& cfg,
                                const std::filesystem::path& trace_path);
std::vector<artifact> run_repro_synthetic(const experiment_config& cfg);

// Materializes the artifacts under cfg.out_dir (each file written atomically)
// and finishes with manifest.json: resolved config, master seed, and a
// sha256 per artifact. Returns the manifest text.
std::string write_run(const experiment_config& cfg, const std::string& command,
                      const std::vector<artifact>& artifacts);

// The built-in synthetic speed benchmark: three frequency groups at
// 15/10/5 Hz, two training motions each, eighteen perturbed test motions.
experiment_config synthetic_benchmark_config(std::uint64_t seed);

}  // namespace spikeclock
