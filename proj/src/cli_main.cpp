#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spikeclock/experiment.hpp"

namespace {

constexpr const char* usage_text =
    "usage: spikeclock <subcommand> [flags]\n"
    "\n"
    "subcommands:\n"
    "  encode           frame container -> spike raster + encoding report\n"
    "  simulate         run the autonomous network, export raster + similarity\n"
    "  similarity       similarity matrix + repetition count of a raster file\n"
    "  train            two-stage training, export per-band traces\n"
    "  infer            classify test motions with a trained trace\n"
    "  repro-synthetic  full synthetic benchmark: train, derive boundaries, evaluate\n"
    "\n"
    "common flags: --config <path> --seed <u64> --out <dir> --threads <n>\n"
    "run 'spikeclock <subcommand> --help' for the full flag list\n";

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> known = {"encode",  "simulate", "similarity",
                                            "train",   "infer",    "repro-synthetic"};
    if (argc < 2) {
        std::cerr << usage_text;
        return 2;
    }
    std::string cmd = argv[1];
    if (cmd == "-h" || cmd == "--help") {
        std::cout << usage_text;
        return 0;
    }
    if (std::find(known.begin(), known.end(), cmd) == known.end()) {
        std::cerr << "unknown subcommand '" << cmd << "'\n\n" << usage_text;
        return 2;
    }

    CLI::App app{"internal-clock spiking network toolkit", "spikeclock " + cmd};
    std::string config_path, frames_path, raster_csv, raster_json, trace_path;
    std::uint64_t seed = 0;
    std::string out_dir;
    std::size_t threads = 1;

    app.add_option("--config", config_path, "experiment config JSON (or a manifest)");
    auto* seed_opt = app.add_option("--seed", seed, "master seed (overrides the config)");
    app.add_option("--out", out_dir, "output directory (overrides the config)");
    app.add_option("--threads", threads, "worker threads for independent motions");
    if (cmd == "encode")
        app.add_option("--frames", frames_path, "input frame container")->required();
    if (cmd == "similarity") {
        app.add_option("--raster-csv", raster_csv, "raster CSV file")->required();
        app.add_option("--raster-json", raster_json, "raster JSON sidecar")->required();
    }
    if (cmd == "infer")
        app.add_option("--trace", trace_path, "training trace JSON of a converged band")
            ->required();

    try {
        app.parse(argc - 1, argv + 1);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        spikeclock::experiment_config cfg;
        if (!config_path.empty()) cfg = spikeclock::load_config(config_path);
        if (*seed_opt) cfg.seed = seed;
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (threads < 1) threads = 1;
        cfg.threads = threads;
        if (cmd == "repro-synthetic" && cfg.motions.empty()) {
            spikeclock::experiment_config bench =
                spikeclock::synthetic_benchmark_config(cfg.seed);
            cfg.teaching = bench.teaching;
            cfg.motions = bench.motions;
            cfg.tests = bench.tests;
        }

        std::vector<spikeclock::artifact> artifacts;
        if (cmd == "encode")
            artifacts = spikeclock::run_encode(cfg, frames_path);
        else if (cmd == "simulate")
            artifacts = spikeclock::run_simulate(cfg);
        else if (cmd == "similarity")
            artifacts = spikeclock::run_similarity(cfg, raster_csv, raster_json);
        else if (cmd == "train")
            artifacts = spikeclock::run_train(cfg);
        else if (cmd == "infer")
            artifacts = spikeclock::run_infer(cfg, trace_path);
        else
            artifacts = spikeclock::run_repro_synthetic(cfg);

        spikeclock::write_run(cfg, cmd, artifacts);
        std::cout << (cfg.out_dir / "manifest.json").string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
