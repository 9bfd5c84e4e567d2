#include "spikeclock/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace spikeclock::kernels {
namespace {

std::atomic<const backend*> forced{nullptr};

const backend* from_env() {
    const char* want = std::getenv("SPIKECLOCK_KERNELS");
    if (!want) return nullptr;
    if (std::strcmp(want, "scalar") == 0) return &scalar_backend();
    if (std::strcmp(want, "avx2") == 0) return avx2_backend();
    if (std::strcmp(want, "neon") == 0) return neon_backend();
    return nullptr;  // unknown or unavailable name: fall through to auto
}

const backend* auto_select() {
    if (const backend* b = from_env()) return b;
    if (const backend* b = avx2_backend()) return b;
    if (const backend* b = neon_backend()) return b;
    return &scalar_backend();
}

}  // namespace

const backend& active_backend() {
    if (const backend* f = forced.load(std::memory_order_relaxed)) return *f;
    static const backend* selected = auto_select();
    return *selected;
}

void force_backend(const backend* b) { forced.store(b, std::memory_order_relaxed); }

}  // namespace spikeclock::kernels
