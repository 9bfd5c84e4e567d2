#include "spikeclock/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>
#include <nmmintrin.h>

#include <cmath>

// Compiled with -mavx2 -mfma -mpopcnt (see CMakeLists); callers must check
// avx2_backend() != nullptr before use.

namespace spikeclock::kernels {
namespace {

double dot_f64_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t head = n & ~std::size_t(3);
    for (std::size_t j = 0; j < head; j += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j), acc);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (std::size_t j = head; j < n; ++j)
        lanes[j & 3] = std::fma(a[j], b[j], lanes[j & 3]);
    return (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
}

std::uint64_t popcount_words_avx2(const std::uint64_t* a, std::size_t n) {
    std::uint64_t t0 = 0, t1 = 0;
    std::size_t head = n & ~std::size_t(1);
    for (std::size_t i = 0; i < head; i += 2) {
        t0 += std::uint64_t(_mm_popcnt_u64(a[i]));
        t1 += std::uint64_t(_mm_popcnt_u64(a[i + 1]));
    }
    if (n & 1) t0 += std::uint64_t(_mm_popcnt_u64(a[n - 1]));
    return t0 + t1;
}

std::uint64_t and_popcount_words_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t head = n & ~std::size_t(3);
    for (std::size_t i = 0; i < head; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        alignas(32) std::uint64_t w[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(w), _mm256_and_si256(va, vb));
        total += std::uint64_t(_mm_popcnt_u64(w[0])) + std::uint64_t(_mm_popcnt_u64(w[1])) +
                 std::uint64_t(_mm_popcnt_u64(w[2])) + std::uint64_t(_mm_popcnt_u64(w[3]));
    }
    for (std::size_t i = head; i < n; ++i)
        total += std::uint64_t(_mm_popcnt_u64(a[i] & b[i]));
    return total;
}

void and_words_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t head = n & ~std::size_t(3);
    for (std::size_t i = 0; i < head; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
    }
    for (std::size_t i = head; i < n; ++i) dst[i] = a[i] & b[i];
}

const backend avx2 = {
    "avx2",
    dot_f64_avx2,
    popcount_words_avx2,
    and_popcount_words_avx2,
    and_words_avx2,
};

bool cpu_ok() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma") &&
           __builtin_cpu_supports("popcnt");
}

}  // namespace

const backend* avx2_backend() {
    static const backend* chosen = cpu_ok() ? &avx2 : nullptr;
    return chosen;
}

}  // namespace spikeclock::kernels

#else

namespace spikeclock::kernels {
const backend* avx2_backend() { return nullptr; }
}  // namespace spikeclock::kernels

#endif
