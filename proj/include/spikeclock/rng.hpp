#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

// Deterministic randomness. The engine is std::mt19937_64 (portable by
// definition); the value mappings below are pinned here instead of using
// std::uniform_*_distribution, whose output is implementation-defined.

namespace spikeclock {

// splitmix64 finalizer, used for seed derivation and string hashing.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// Folds a tag tuple into an independent stream seed. Used to split one master
// seed into per-band / per-motion / per-trial streams that do not collide.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t s = mix64(base ^ 0x9e3779b97f4a7c15ull);
    for (std::uint64_t p : parts) s = mix64(s ^ (p + 0x9e3779b97f4a7c15ull + (s << 6) + (s >> 2)));
    return s;
}

class rng {
  public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // 53-bit mantissa uniform in [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, n); n > 0. Multiply-shift map: deterministic everywhere.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // uniform in [-half, +half]
    double symmetric(double half) { return (uniform01() * 2.0 - 1.0) * half; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace spikeclock
