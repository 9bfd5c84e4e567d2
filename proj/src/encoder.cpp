#include "spikeclock/encoder.hpp"

#include <cmath>
#include <stdexcept>

namespace spikeclock {
namespace {

// Stage 1: block-average by delta_s. Output is ph x pw, row-major.
void pool_blocks(const frame_sequence& seq, std::size_t frame, std::uint32_t delta_s,
                 std::size_t pw, std::size_t ph, std::vector<double>& out) {
    const std::uint8_t* px = seq.frame(frame);
    for (std::size_t by = 0; by < ph; ++by) {
        std::size_t y0 = by * delta_s;
        std::size_t y1 = std::min<std::size_t>(y0 + delta_s, seq.height);
        for (std::size_t bx = 0; bx < pw; ++bx) {
            std::size_t x0 = bx * delta_s;
            std::size_t x1 = std::min<std::size_t>(x0 + delta_s, seq.width);
            std::uint64_t sum = 0;
            for (std::size_t y = y0; y < y1; ++y)
                for (std::size_t x = x0; x < x1; ++x) sum += px[y * seq.width + x];
            out[by * pw + bx] = double(sum) / double((y1 - y0) * (x1 - x0));
        }
    }
}

// Stage 2: collapse the pooled plane onto the neuron grid.
void pool_grid(const std::vector<double>& plane, std::size_t pw, std::size_t ph,
               std::uint32_t rows, std::uint32_t cols, std::vector<double>& cells) {
    std::size_t cw = pw / cols, ch = ph / rows;
    for (std::uint32_t r = 0; r < rows; ++r) {
        std::size_t y0 = std::size_t(r) * ch;
        std::size_t y1 = (r + 1 == rows) ? ph : y0 + ch;
        for (std::uint32_t c = 0; c < cols; ++c) {
            std::size_t x0 = std::size_t(c) * cw;
            std::size_t x1 = (c + 1 == cols) ? pw : x0 + cw;
            double sum = 0.0;
            for (std::size_t y = y0; y < y1; ++y)
                for (std::size_t x = x0; x < x1; ++x) sum += plane[y * pw + x];
            cells[std::size_t(r) * cols + c] = sum / double((y1 - y0) * (x1 - x0));
        }
    }
}

}  // namespace

encoding_report encode(const frame_sequence& seq, const encoder_config& cfg, double duration_ms) {
    if (seq.width == 0 || seq.height == 0 || seq.frame_count() == 0)
        throw std::invalid_argument("encode: empty frame sequence");
    if (cfg.delta_s < 1 || cfg.delta_t < 1)
        throw std::invalid_argument("encode: delta_s and delta_t must be >= 1");
    if (cfg.grid_rows == 0 || cfg.grid_cols == 0)
        throw std::invalid_argument("encode: grid must be nonempty");
    if (!(cfg.dt_ms > 0.0) || !(duration_ms >= cfg.dt_ms))
        throw std::invalid_argument("encode: need duration >= dt > 0");

    std::size_t pw = (seq.width + cfg.delta_s - 1) / cfg.delta_s;
    std::size_t ph = (seq.height + cfg.delta_s - 1) / cfg.delta_s;
    if (cfg.grid_cols > pw || cfg.grid_rows > ph)
        throw std::invalid_argument("encode: grid larger than pooled source");

    std::size_t n = std::size_t(cfg.grid_rows) * cfg.grid_cols;
    auto steps = std::size_t(std::llround(duration_ms / cfg.dt_ms));
    double mpf = seq.ms_per_frame();

    encoding_report rep;
    rep.raster = spike_raster(n, steps, cfg.dt_ms);
    rep.spikes_per_frame.assign(seq.frame_count(), 0);

    std::vector<double> plane(pw * ph);
    std::vector<std::vector<double>> cells(seq.frame_count(), std::vector<double>(n));
    for (std::size_t i = 0; i < seq.frame_count(); ++i) {
        pool_blocks(seq, i, cfg.delta_s, pw, ph, plane);
        pool_grid(plane, pw, ph, cfg.grid_rows, cfg.grid_cols, cells[i]);
    }

    for (std::size_t i = cfg.delta_t; i < seq.frame_count(); ++i) {
        auto first = std::int64_t(std::floor(double(i) * mpf / cfg.dt_ms));
        auto last = std::int64_t(std::floor(double(i + 1) * mpf / cfg.dt_ms));
        first = std::max<std::int64_t>(first, 0);
        last = std::min<std::int64_t>(last, std::int64_t(steps));

        std::uint32_t active = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(cells[i][j] - cells[i - cfg.delta_t][j]) > cfg.pixel_threshold) {
                ++active;
                for (std::int64_t s = first; s < last; ++s)
                    rep.raster.set(j, std::size_t(s));
            }
        }
        rep.spikes_per_frame[i] = active;
    }

    rep.total_bits = information_content(rep.raster);
    return rep;
}

}  // namespace spikeclock
