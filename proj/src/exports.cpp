#include "spikeclock/exports.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace spikeclock {

std::string format_double(double v) {
    std::array<char, 32> buf;
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf.data(), end);
}

void atomic_write_file(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), std::streamsize(content.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

// ============================================================================
// SHA-256 (FIPS 180-4)
// ============================================================================

namespace {

constexpr std::array<std::uint32_t, 64> sha_k = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
    0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
    0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
    0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
    0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
    0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
    0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
    0xc67178f2};

void sha_block(std::array<std::uint32_t, 8>& h, const unsigned char* p) {
    std::uint32_t w[64];
    for (int i = 0; i < 16; ++i)
        w[i] = std::uint32_t(p[4 * i]) << 24 | std::uint32_t(p[4 * i + 1]) << 16 |
               std::uint32_t(p[4 * i + 2]) << 8 | std::uint32_t(p[4 * i + 3]);
    for (int i = 16; i < 64; ++i) {
        std::uint32_t s0 = std::rotr(w[i - 15], 7) ^ std::rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
        std::uint32_t s1 = std::rotr(w[i - 2], 17) ^ std::rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
        w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    auto [a, b, c, d, e, f, g, hh] = h;
    for (int i = 0; i < 64; ++i) {
        std::uint32_t s1 = std::rotr(e, 6) ^ std::rotr(e, 11) ^ std::rotr(e, 25);
        std::uint32_t ch = (e & f) ^ (~e & g);
        std::uint32_t t1 = hh + s1 + ch + sha_k[i] + w[i];
        std::uint32_t s0 = std::rotr(a, 2) ^ std::rotr(a, 13) ^ std::rotr(a, 22);
        std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
        std::uint32_t t2 = s0 + maj;
        hh = g;
        g = f;
        f = e;
        e = d + t1;
        d = c;
        c = b;
        b = a;
        a = t1 + t2;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
    h[5] += f;
    h[6] += g;
    h[7] += hh;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
    std::array<std::uint32_t, 8> h = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                                      0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    std::size_t n = bytes.size();
    std::size_t full = n / 64;
    for (std::size_t i = 0; i < full; ++i) sha_block(h, p + 64 * i);

    unsigned char tail[128] = {};
    std::size_t rest = n - full * 64;
    std::memcpy(tail, p + 64 * full, rest);
    tail[rest] = 0x80;
    std::size_t blocks = rest + 9 <= 64 ? 1 : 2;
    std::uint64_t bits = std::uint64_t(n) * 8;
    for (int i = 0; i < 8; ++i) tail[blocks * 64 - 1 - i] = (unsigned char)(bits >> (8 * i));
    for (std::size_t i = 0; i < blocks; ++i) sha_block(h, tail + 64 * i);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (std::uint32_t v : h)
        for (int shift = 28; shift >= 0; shift -= 4) out.push_back(hex[(v >> shift) & 0xf]);
    return out;
}

// ============================================================================
// Raster CSV + sidecar
// ============================================================================

std::string raster_to_csv(const spike_raster& r) {
    std::string out = "neuron,step,spike\n";
    for (std::size_t i = 0; i < r.n_neurons; ++i)
        for (std::size_t t = 0; t < r.timesteps; ++t)
            if (r.get(i, t)) {
                out += std::to_string(i);
                out += ',';
                out += std::to_string(t);
                out += ",1\n";
            }
    return out;
}

std::string raster_sidecar_json(const spike_raster& r) {
    nlohmann::json j;
    j["n_neurons"] = r.n_neurons;
    j["timesteps"] = r.timesteps;
    j["dt_ms"] = r.dt_ms;
    return j.dump(2) + "\n";
}

void save_raster(const spike_raster& r, const std::filesystem::path& csv_path,
                 const std::filesystem::path& json_path) {
    atomic_write_file(csv_path, raster_to_csv(r));
    atomic_write_file(json_path, raster_sidecar_json(r));
}

spike_raster load_raster(const std::filesystem::path& csv_path,
                         const std::filesystem::path& json_path) {
    std::ifstream jf(json_path, std::ios::binary);
    if (!jf) throw std::runtime_error("cannot open raster sidecar: " + json_path.string());
    nlohmann::json j = nlohmann::json::parse(jf);
    spike_raster r(j.at("n_neurons").get<std::size_t>(), j.at("timesteps").get<std::size_t>(),
                   j.at("dt_ms").get<double>());

    std::ifstream cf(csv_path, std::ios::binary);
    if (!cf) throw std::runtime_error("cannot open raster csv: " + csv_path.string());
    std::string line;
    if (!std::getline(cf, line) || line != "neuron,step,spike")
        throw std::runtime_error("raster csv is missing its header: " + csv_path.string());
    std::size_t lineno = 1;
    while (std::getline(cf, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t neuron = 0, step = 0;
        int spike = 0;
        char c1 = 0, c2 = 0;
        std::istringstream row(line);
        if (!(row >> neuron >> c1 >> step >> c2 >> spike) || c1 != ',' || c2 != ',' ||
            spike != 1 || neuron >= r.n_neurons || step >= r.timesteps)
            throw std::runtime_error("bad raster csv row at line " + std::to_string(lineno) +
                                     ": " + csv_path.string());
        r.set(neuron, step);
    }
    return r;
}

// ============================================================================
// Similarity
// ============================================================================

std::string similarity_to_csv(const similarity_matrix& m) {
    std::string out;
    for (std::size_t t1 = 0; t1 < m.timesteps; ++t1) {
        for (std::size_t t2 = 0; t2 < m.timesteps; ++t2) {
            if (t2) out += ',';
            out += format_double(m.at(t1, t2));
        }
        out += '\n';
    }
    return out;
}

std::string similarity_report_json(const similarity_matrix& m, double theta_rep,
                                   std::size_t repetitions) {
    nlohmann::json j;
    j["timesteps"] = m.timesteps;
    j["theta_rep"] = theta_rep;
    j["repetitions"] = repetitions;
    return j.dump(2) + "\n";
}

// ============================================================================
// Training trace
// ============================================================================

std::string trace_to_json(const training_trace& t) {
    nlohmann::json j;
    j["band"] = band_name(t.band);
    nlohmann::json errs;
    for (clock_band b : all_bands) errs[band_name(b)] = t.stage1_errors[std::size_t(b)];
    j["stage1_errors"] = errs;
    j["trials"] = nlohmann::json::array();
    for (const auto& tr : t.trials)
        j["trials"].push_back({{"trial", tr.trial}, {"k", tr.k}, {"error", tr.error}});
    j["final_k"] = t.final_k;
    j["converged"] = t.converged;
    return j.dump(2) + "\n";
}

std::string trace_to_csv(const training_trace& t) {
    std::string out = "trial,k,error\n";
    for (const auto& tr : t.trials) {
        out += std::to_string(tr.trial);
        out += ',';
        out += format_double(tr.k);
        out += ',';
        out += format_double(tr.error);
        out += '\n';
    }
    return out;
}

// ============================================================================
// Evaluation report
// ============================================================================

std::string evaluation_to_json(const evaluation_report& r) {
    nlohmann::json j;
    j["boundaries"] = {{"thresholds", r.boundaries.thresholds},
                       {"labels", r.boundaries.labels}};
    j["per_motion"] = nlohmann::json::array();
    for (const auto& v : r.per_motion)
        j["per_motion"].push_back({{"id", v.motion_id},
                                   {"rate_hz", v.rate_hz},
                                   {"predicted", v.predicted},
                                   {"truth", v.truth}});
    j["accuracy"] = r.accuracy;
    return j.dump(2) + "\n";
}

std::string evaluation_to_csv(const evaluation_report& r) {
    std::string out = "motion_id,rate_hz,predicted,truth\n";
    for (const auto& v : r.per_motion) {
        out += v.motion_id;
        out += ',';
        out += format_double(v.rate_hz);
        out += ',';
        out += v.predicted;
        out += ',';
        out += v.truth;
        out += '\n';
    }
    return out;
}

}  // namespace spikeclock
