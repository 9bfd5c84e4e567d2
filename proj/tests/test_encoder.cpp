#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "spikeclock/encoder.hpp"
#include "spikeclock/frames.hpp"
#include "spikeclock/raster.hpp"
#include "spikeclock/rng.hpp"

using namespace spikeclock;

namespace {

frame_sequence make_sequence(std::uint32_t w, std::uint32_t h, std::size_t frames,
                             std::uint32_t fps_num, std::uint32_t fps_den = 1) {
    frame_sequence seq;
    seq.width = w;
    seq.height = h;
    seq.fps_num = fps_num;
    seq.fps_den = fps_den;
    seq.pixels.assign(std::size_t(w) * h * frames, 0);
    return seq;
}

frame_sequence random_sequence(rng& gen, std::uint32_t w, std::uint32_t h, std::size_t frames,
                               std::uint32_t fps_num) {
    frame_sequence seq = make_sequence(w, h, frames, fps_num);
    for (auto& px : seq.pixels) px = std::uint8_t(gen.below(256));
    return seq;
}

// Independent reference: pool every frame cell by cell, difference against the
// lagged frame, and paint each active cell over the frame's step window. The
// grid must tile the pooled plane exactly (delta_s * grid == source extent).
spike_raster reference_encode(const frame_sequence& seq, const encoder_config& cfg,
                              double duration_ms) {
    std::size_t n = std::size_t(cfg.grid_rows) * cfg.grid_cols;
    auto steps = std::size_t(std::llround(duration_ms / cfg.dt_ms));
    spike_raster out(n, steps, cfg.dt_ms);

    auto cell_mean = [&](std::size_t frame, std::uint32_t r, std::uint32_t c) {
        double sum = 0.0;
        const std::uint8_t* px = seq.frame(frame);
        for (std::uint32_t y = r * cfg.delta_s; y < (r + 1) * cfg.delta_s; ++y)
            for (std::uint32_t x = c * cfg.delta_s; x < (c + 1) * cfg.delta_s; ++x)
                sum += px[y * seq.width + x];
        return sum / double(cfg.delta_s * cfg.delta_s);
    };

    for (std::size_t i = cfg.delta_t; i < seq.frame_count(); ++i) {
        for (std::uint32_t r = 0; r < cfg.grid_rows; ++r) {
            for (std::uint32_t c = 0; c < cfg.grid_cols; ++c) {
                double change = cell_mean(i, r, c) - cell_mean(i - cfg.delta_t, r, c);
                if (!(std::abs(change) > cfg.pixel_threshold)) continue;
                auto first = std::int64_t(std::floor(double(i) * seq.ms_per_frame() / cfg.dt_ms));
                auto last =
                    std::int64_t(std::floor(double(i + 1) * seq.ms_per_frame() / cfg.dt_ms));
                for (std::int64_t s = std::max<std::int64_t>(first, 0);
                     s < std::min<std::int64_t>(last, std::int64_t(steps)); ++s)
                    out.set(r * cfg.grid_cols + c, std::size_t(s));
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("encoder matches the cell-by-cell reference on random sequences") {
    rng gen(31);
    encoder_config cfg;
    cfg.delta_s = 2;
    cfg.delta_t = 1;
    cfg.pixel_threshold = 16.0;
    cfg.grid_rows = 3;
    cfg.grid_cols = 3;
    cfg.dt_ms = 1.0;

    for (int trial = 0; trial < 20; ++trial) {
        frame_sequence seq = random_sequence(gen, 6, 6, 8, 100);  // frame every 10 ms
        double duration = 80.0;
        encoding_report rep = encode(seq, cfg, duration);
        spike_raster expect = reference_encode(seq, cfg, duration);
        INFO("trial ", trial);
        CHECK(rep.raster == expect);
        CHECK(rep.total_bits == information_content(expect));
    }
}

TEST_CASE("a static scene encodes to silence") {
    encoder_config cfg;
    cfg.delta_s = 2;
    cfg.grid_rows = 2;
    cfg.grid_cols = 2;
    frame_sequence seq = make_sequence(4, 4, 5, 50);
    for (auto& px : seq.pixels) px = 173;
    encoding_report rep = encode(seq, cfg, 100.0);
    CHECK(rep.total_bits == 0);
    CHECK(information_content(rep.raster) == 0);
    for (std::uint32_t c : rep.spikes_per_frame) CHECK(c == 0);
}

TEST_CASE("one bright step lands on the second frame's step window") {
    // 2x2 source pooled to one cell; frame 1 jumps 0 -> 200; at 2 ms per frame
    // and 1 ms steps, frame 1 owns steps 2 and 3
    encoder_config cfg;
    cfg.delta_s = 2;
    cfg.delta_t = 1;
    cfg.pixel_threshold = 10.0;
    cfg.grid_rows = 1;
    cfg.grid_cols = 1;
    cfg.dt_ms = 1.0;

    frame_sequence seq = make_sequence(2, 2, 2, 500);  // 2 ms per frame
    for (std::size_t p = 0; p < 4; ++p) seq.frame(1)[p] = 200;

    encoding_report rep = encode(seq, cfg, 6.0);
    CHECK(rep.raster.timesteps == 6);
    for (std::size_t t = 0; t < 6; ++t) CHECK(rep.raster.get(0, t) == (t == 2 || t == 3));
    CHECK(rep.total_bits == 2);
    CHECK(rep.spikes_per_frame == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("a single frame has no reference to difference against") {
    encoder_config cfg;
    cfg.delta_s = 1;
    cfg.grid_rows = 2;
    cfg.grid_cols = 2;
    rng gen(32);
    frame_sequence seq = random_sequence(gen, 2, 2, 1, 25);
    encoding_report rep = encode(seq, cfg, 50.0);
    CHECK(rep.total_bits == 0);
}

TEST_CASE("a uniform brightness offset leaves the encoding unchanged") {
    rng gen(33);
    encoder_config cfg;
    cfg.delta_s = 2;
    cfg.grid_rows = 3;
    cfg.grid_cols = 3;
    frame_sequence seq = random_sequence(gen, 6, 6, 6, 100);
    for (auto& px : seq.pixels) px = std::uint8_t(gen.below(200));  // headroom for +40

    frame_sequence shifted = seq;
    for (auto& px : shifted.pixels) px = std::uint8_t(px + 40);

    CHECK(encode(seq, cfg, 60.0).raster == encode(shifted, cfg, 60.0).raster);
}

TEST_CASE("lowering the threshold never loses spikes") {
    rng gen(34);
    encoder_config high;
    high.delta_s = 2;
    high.grid_rows = 3;
    high.grid_cols = 3;
    high.pixel_threshold = 40.0;
    encoder_config low = high;
    low.pixel_threshold = 5.0;

    for (int trial = 0; trial < 5; ++trial) {
        frame_sequence seq = random_sequence(gen, 6, 6, 6, 100);
        encoding_report rh = encode(seq, high, 60.0);
        encoding_report rl = encode(seq, low, 60.0);
        CHECK(rl.total_bits >= rh.total_bits);
        // spikes at the high threshold survive at the low one
        for (std::size_t i = 0; i < rh.raster.words.size(); ++i)
            CHECK((rh.raster.words[i] & ~rl.raster.words[i]) == 0);
    }
}

TEST_CASE("frames beyond the duration are dropped and short videos zero-fill") {
    encoder_config cfg;
    cfg.delta_s = 2;
    cfg.grid_rows = 1;
    cfg.grid_cols = 1;
    cfg.pixel_threshold = 10.0;

    // alternating bright/dark 2x2 frames at 2 ms per frame: every frame from
    // index 1 on is a change; 10 frames cover 20 ms
    frame_sequence seq = make_sequence(2, 2, 10, 500);
    for (std::size_t f = 1; f < 10; f += 2)
        for (std::size_t p = 0; p < 4; ++p) seq.frame(f)[p] = 255;

    encoding_report cut = encode(seq, cfg, 9.0);  // duration shorter than the video
    CHECK(cut.raster.timesteps == 9);
    CHECK(cut.total_bits == 7);  // steps 2..8, each covered by some changed frame

    encoding_report padded = encode(seq, cfg, 50.0);  // longer than the video
    CHECK(padded.raster.timesteps == 50);
    for (std::size_t t = 20; t < 50; ++t) CHECK(!padded.raster.get(0, t));
}

TEST_CASE("encode rejects impossible geometry and durations") {
    rng gen(35);
    frame_sequence seq = random_sequence(gen, 6, 6, 3, 100);

    encoder_config grid_too_big;
    grid_too_big.delta_s = 2;
    grid_too_big.grid_rows = 4;  // pooled plane is only 3x3
    grid_too_big.grid_cols = 3;
    CHECK_THROWS_AS(encode(seq, grid_too_big, 30.0), std::invalid_argument);

    encoder_config ok;
    ok.delta_s = 2;
    ok.grid_rows = 3;
    ok.grid_cols = 3;
    CHECK_THROWS_AS(encode(seq, ok, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(encode(seq, ok, -5.0), std::invalid_argument);

    encoder_config bad_dt = ok;
    bad_dt.dt_ms = 0.0;
    CHECK_THROWS_AS(encode(seq, bad_dt, 30.0), std::invalid_argument);

    frame_sequence empty;
    CHECK_THROWS_AS(encode(empty, ok, 30.0), std::invalid_argument);
}
