#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace spikeclock {

// Raw grayscale frame sequence. Pixels are stored frame-major, row-major
// within a frame. Frame rate is kept rational (fps_num / fps_den) so the
// frame-to-timestep mapping stays exact for rates like 30000/1001.
struct frame_sequence {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::uint32_t fps_num = 0;
    std::uint32_t fps_den = 1;
    std::vector<std::uint8_t> pixels;

    std::size_t frame_size() const { return std::size_t(width) * height; }
    std::size_t frame_count() const {
        return frame_size() == 0 ? 0 : pixels.size() / frame_size();
    }
    const std::uint8_t* frame(std::size_t i) const { return pixels.data() + i * frame_size(); }
    std::uint8_t* frame(std::size_t i) { return pixels.data() + i * frame_size(); }
    double fps() const { return double(fps_num) / double(fps_den); }
    double ms_per_frame() const { return 1000.0 * double(fps_den) / double(fps_num); }
};

enum class frame_io_code {
    missing_file,
    bad_magic,
    bad_version,
    truncated_payload,
    zero_dimension,
    invalid_sequence,
    unwritable_path,
};

class frame_io_error : public std::runtime_error {
  public:
    frame_io_error(frame_io_code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    frame_io_code code() const { return code_; }

  private:
    frame_io_code code_;
};

// Container layout (little-endian): "SPKV", version byte 0x01, then
// u32 width, height, frame_count, fps_numerator, fps_denominator,
// then frame_count * width * height payload bytes.
frame_sequence load_frames(const std::filesystem::path& path);
void store_frames(const frame_sequence& seq, const std::filesystem::path& path);

}  // namespace spikeclock
