#pragma once

#include <cstddef>
#include <cstdint>

// Low-level array kernels with runtime CPU dispatch.
//
// Every operation has a portable scalar reference implementation plus optional
// vector variants (AVX2 on x86-64, NEON on aarch64). All variants of one
// operation are bit-exact with each other:
//
//   * integer kernels (popcount / and) are exact by nature;
//   * dot_f64 follows a fixed accumulation contract: element j is folded into
//     stripe accumulator (j mod 4) with a fused multiply-add, and the four
//     stripes are reduced as (s0+s2) + (s1+s3). Scalar code uses std::fma so
//     rounding matches the vector FMA exactly.
//
// Changing the contract changes results; keep all backends in sync.

namespace spikeclock::kernels {

struct backend {
    const char* name;
    double (*dot_f64)(const double* a, const double* b, std::size_t n);
    std::uint64_t (*popcount_words)(const std::uint64_t* a, std::size_t n);
    std::uint64_t (*and_popcount_words)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    void (*and_words)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

const backend& scalar_backend();
const backend* avx2_backend();  // nullptr if not compiled in or CPU lacks avx2+fma+popcnt
const backend* neon_backend();  // nullptr off aarch64

// Best available backend. Honours SPIKECLOCK_KERNELS=scalar|avx2|neon (checked
// once) and force_backend() overrides, in that priority order.
const backend& active_backend();

// Test hook: pin a specific backend; nullptr restores automatic selection.
void force_backend(const backend* b);

inline double dot_f64(const double* a, const double* b, std::size_t n) {
    return active_backend().dot_f64(a, b, n);
}
inline std::uint64_t popcount_words(const std::uint64_t* a, std::size_t n) {
    return active_backend().popcount_words(a, n);
}
inline std::uint64_t and_popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return active_backend().and_popcount_words(a, b, n);
}
inline void and_words(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    active_backend().and_words(dst, a, b, n);
}

}  // namespace spikeclock::kernels
