#pragma once

#include <cstdint>
#include <vector>

#include "spikeclock/frames.hpp"
#include "spikeclock/raster.hpp"

namespace spikeclock {

struct encoder_config {
    std::uint32_t delta_s = 4;       // pixels per pooling block side
    std::uint32_t delta_t = 1;       // frame lag for differencing
    double pixel_threshold = 16.0;   // |pooled change| must exceed this to spike
    std::uint32_t grid_rows = 30;
    std::uint32_t grid_cols = 30;
    double dt_ms = 1.0;
};

struct encoding_report {
    std::uint64_t total_bits = 0;                 // 1-entries in raster
    std::vector<std::uint32_t> spikes_per_frame;  // active cells per source frame
    spike_raster raster;
};

// Frame pipeline: (1) block-average the source plane by delta_s (trailing
// partial blocks average over their actual pixels), (2) partition the pooled
// plane into grid_rows x grid_cols rectangles -- integer division, remainder
// columns/rows joining the last rectangle -- and average each, (3) a cell
// spikes for frame i >= delta_t iff |cell_i - cell_{i-delta_t}| >
// pixel_threshold, (4) the spike fills every step of the frame's window
// [floor(i*ms_per_frame/dt), floor((i+1)*ms_per_frame/dt)). Neuron index is
// row-major over the grid. Frames past duration are dropped; a short sequence
// leaves the tail silent.
encoding_report encode(const frame_sequence& seq, const encoder_config& cfg, double duration_ms);

}  // namespace spikeclock
