#include "spikeclock/raster.hpp"

#include "spikeclock/kernels.hpp"

namespace spikeclock {

std::uint64_t information_content(const spike_raster& r) {
    return kernels::popcount_words(r.words.data(), r.words.size());
}

std::uint64_t step_popcount(const spike_raster& r, std::size_t step) {
    return kernels::popcount_words(r.step_words(step), r.words_per_step());
}

}  // namespace spikeclock
