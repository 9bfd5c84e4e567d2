#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "spikeclock/inference.hpp"
#include "spikeclock/raster.hpp"
#include "spikeclock/similarity.hpp"
#include "spikeclock/training.hpp"

namespace spikeclock {

// Shortest decimal form that round-trips the exact double.
std::string format_double(double v);

// Writes to a sibling temp file and renames into place, so the target path
// either keeps its old content or holds the complete new content.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

std::string sha256_hex(std::string_view bytes);

// Raster exports: CSV listing only the 1-entries as neuron,step,spike plus a
// JSON sidecar {n_neurons, timesteps, dt_ms}.
std::string raster_to_csv(const spike_raster& r);
std::string raster_sidecar_json(const spike_raster& r);
void save_raster(const spike_raster& r, const std::filesystem::path& csv_path,
                 const std::filesystem::path& json_path);
spike_raster load_raster(const std::filesystem::path& csv_path,
                         const std::filesystem::path& json_path);

// Similarity exports: bare CSV grid plus JSON {timesteps, theta_rep,
// repetitions}.
std::string similarity_to_csv(const similarity_matrix& m);
std::string similarity_report_json(const similarity_matrix& m, double theta_rep,
                                   std::size_t repetitions);

std::string trace_to_json(const training_trace& t);
std::string trace_to_csv(const training_trace& t);

std::string evaluation_to_json(const evaluation_report& r);
std::string evaluation_to_csv(const evaluation_report& r);

}  // namespace spikeclock
