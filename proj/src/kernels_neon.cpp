#include "spikeclock/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <cmath>

// aarch64 NEON variants. float64x2_t is two lanes wide, so the four stripe
// accumulators of the dot contract live in two vectors: {s0,s1} and {s2,s3}.
// vfmaq_f64 is fused, matching std::fma in the scalar reference.

namespace spikeclock::kernels {
namespace {

double dot_f64_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t head = n & ~std::size_t(3);
    for (std::size_t j = 0; j < head; j += 4) {
        acc01 = vfmaq_f64(acc01, vld1q_f64(a + j), vld1q_f64(b + j));
        acc23 = vfmaq_f64(acc23, vld1q_f64(a + j + 2), vld1q_f64(b + j + 2));
    }
    double lanes[4] = {vgetq_lane_f64(acc01, 0), vgetq_lane_f64(acc01, 1),
                       vgetq_lane_f64(acc23, 0), vgetq_lane_f64(acc23, 1)};
    for (std::size_t j = head; j < n; ++j)
        lanes[j & 3] = std::fma(a[j], b[j], lanes[j & 3]);
    return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
}

std::uint64_t popcount_words_neon(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t head = n & ~std::size_t(1);
    for (std::size_t i = 0; i < head; i += 2) {
        uint8x16_t bytes = vreinterpretq_u8_u64(vld1q_u64(a + i));
        total += vaddlvq_u8(vcntq_u8(bytes));
    }
    if (n & 1) total += std::uint64_t(__builtin_popcountll(a[n - 1]));
    return total;
}

std::uint64_t and_popcount_words_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t head = n & ~std::size_t(1);
    for (std::size_t i = 0; i < head; i += 2) {
        uint64x2_t x = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        total += vaddlvq_u8(vcntq_u8(vreinterpretq_u8_u64(x)));
    }
    if (n & 1) total += std::uint64_t(__builtin_popcountll(a[n - 1] & b[n - 1]));
    return total;
}

void and_words_neon(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t head = n & ~std::size_t(1);
    for (std::size_t i = 0; i < head; i += 2)
        vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    if (n & 1) dst[n - 1] = a[n - 1] & b[n - 1];
}

const backend neon = {
    "neon",
    dot_f64_neon,
    popcount_words_neon,
    and_popcount_words_neon,
    and_words_neon,
};

}  // namespace

const backend* neon_backend() { return &neon; }

}  // namespace spikeclock::kernels

#else

namespace spikeclock::kernels {
const backend* neon_backend() { return nullptr; }
}  // namespace spikeclock::kernels

#endif
