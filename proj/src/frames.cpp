#include "spikeclock/frames.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace spikeclock {
namespace {

constexpr std::array<char, 4> magic = {'S', 'P', 'K', 'V'};
constexpr std::uint8_t container_version = 0x01;

std::uint32_t read_u32le(const unsigned char* p) {
    return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
           std::uint32_t(p[3]) << 24;
}

void put_u32le(std::string& out, std::uint32_t v) {
    out.push_back(char(v & 0xff));
    out.push_back(char((v >> 8) & 0xff));
    out.push_back(char((v >> 16) & 0xff));
    out.push_back(char((v >> 24) & 0xff));
}

void validate(const frame_sequence& seq) {
    if (seq.width == 0 || seq.height == 0)
        throw frame_io_error(frame_io_code::invalid_sequence, "frame dimensions must be nonzero");
    if (seq.fps_num == 0 || seq.fps_den == 0)
        throw frame_io_error(frame_io_code::invalid_sequence, "fps must be positive");
    if (seq.pixels.empty() || seq.pixels.size() % seq.frame_size() != 0)
        throw frame_io_error(frame_io_code::invalid_sequence,
                             "pixel payload must hold a whole number of frames (>= 1)");
}

}  // namespace

frame_sequence load_frames(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw frame_io_error(frame_io_code::missing_file, "cannot open " + path.string());

    unsigned char header[25];
    in.read(reinterpret_cast<char*>(header), sizeof header);
    if (std::size_t(in.gcount()) < sizeof header) {
        if (in.gcount() >= 4 && std::memcmp(header, magic.data(), 4) != 0)
            throw frame_io_error(frame_io_code::bad_magic, "not a SPKV container: " + path.string());
        throw frame_io_error(frame_io_code::truncated_payload,
                             "header truncated: " + path.string());
    }
    if (std::memcmp(header, magic.data(), 4) != 0)
        throw frame_io_error(frame_io_code::bad_magic, "not a SPKV container: " + path.string());
    if (header[4] != container_version)
        throw frame_io_error(frame_io_code::bad_version,
                             "unsupported container version in " + path.string());

    frame_sequence seq;
    seq.width = read_u32le(header + 5);
    seq.height = read_u32le(header + 9);
    std::uint32_t frame_count = read_u32le(header + 13);
    seq.fps_num = read_u32le(header + 17);
    seq.fps_den = read_u32le(header + 21);
    if (seq.width == 0 || seq.height == 0 || frame_count == 0 || seq.fps_num == 0 ||
        seq.fps_den == 0)
        throw frame_io_error(frame_io_code::zero_dimension,
                             "zero dimension in header of " + path.string());

    std::size_t payload = seq.frame_size() * frame_count;
    seq.pixels.resize(payload);
    in.read(reinterpret_cast<char*>(seq.pixels.data()), std::streamsize(payload));
    if (std::size_t(in.gcount()) != payload)
        throw frame_io_error(frame_io_code::truncated_payload,
                             "payload truncated: " + path.string());
    return seq;
}

void store_frames(const frame_sequence& seq, const std::filesystem::path& path) {
    validate(seq);

    std::string blob;
    blob.reserve(25 + seq.pixels.size());
    blob.append(magic.data(), magic.size());
    blob.push_back(char(container_version));
    put_u32le(blob, seq.width);
    put_u32le(blob, seq.height);
    put_u32le(blob, std::uint32_t(seq.frame_count()));
    put_u32le(blob, seq.fps_num);
    put_u32le(blob, seq.fps_den);
    blob.append(reinterpret_cast<const char*>(seq.pixels.data()), seq.pixels.size());

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw frame_io_error(frame_io_code::unwritable_path, "cannot write " + path.string());
    out.write(blob.data(), std::streamsize(blob.size()));
    out.flush();
    if (!out)
        throw frame_io_error(frame_io_code::unwritable_path, "write failed: " + path.string());
}

}  // namespace spikeclock
