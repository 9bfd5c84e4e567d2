#include "spikeclock/kernels.hpp"

#include <bit>
#include <cmath>

namespace spikeclock::kernels {
namespace {

double dot_f64_scalar(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t head = n & ~std::size_t(3);
    for (std::size_t j = 0; j < head; j += 4) {
        s0 = std::fma(a[j], b[j], s0);
        s1 = std::fma(a[j + 1], b[j + 1], s1);
        s2 = std::fma(a[j + 2], b[j + 2], s2);
        s3 = std::fma(a[j + 3], b[j + 3], s3);
    }
    double tail[4] = {s0, s1, s2, s3};
    for (std::size_t j = head; j < n; ++j)
        tail[j & 3] = std::fma(a[j], b[j], tail[j & 3]);
    return (tail[0] + tail[2]) + (tail[1] + tail[3]);
}

std::uint64_t popcount_words_scalar(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::uint64_t(std::popcount(a[i]));
    return total;
}

std::uint64_t and_popcount_words_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::uint64_t(std::popcount(a[i] & b[i]));
    return total;
}

void and_words_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

const backend scalar = {
    "scalar",
    dot_f64_scalar,
    popcount_words_scalar,
    and_popcount_words_scalar,
    and_words_scalar,
};

}  // namespace

const backend& scalar_backend() { return scalar; }

}  // namespace spikeclock::kernels
