#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <vector>

#include "spikeclock/kernels.hpp"
#include "spikeclock/rng.hpp"

using namespace spikeclock;
namespace k = spikeclock::kernels;

namespace {

// restores automatic backend selection even if a CHECK throws
struct backend_guard {
    ~backend_guard() { k::force_backend(nullptr); }
};

std::vector<double> random_doubles(rng& gen, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = gen.uniform01() * 4.0 - 2.0;
    return v;
}

std::vector<std::uint64_t> random_words(rng& gen, std::size_t n) {
    std::vector<std::uint64_t> v(n);
    for (auto& x : v) x = gen.next();
    return v;
}

// the documented accumulation contract, written independently: element j goes
// into stripe j mod 4 via fma, stripes reduce as (s0+s2)+(s1+s3)
double striped_dot(const double* a, const double* b, std::size_t n) {
    double s[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) s[j % 4] = std::fma(a[j], b[j], s[j % 4]);
    return (s[0] + s[2]) + (s[1] + s[3]);
}

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

TEST_CASE("scalar dot follows the striped accumulation contract bit for bit") {
    rng gen(11);
    const k::backend& sc = k::scalar_backend();
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 63u, 100u}) {
        auto a = random_doubles(gen, n);
        auto b = random_doubles(gen, n);
        CHECK(same_bits(sc.dot_f64(a.data(), b.data(), n), striped_dot(a.data(), b.data(), n)));
    }
    CHECK(sc.dot_f64(nullptr, nullptr, 0) == 0.0);
}

TEST_CASE("scalar popcount and and-popcount match naive bit loops") {
    rng gen(12);
    const k::backend& sc = k::scalar_backend();
    for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 8u, 13u}) {
        auto a = random_words(gen, n);
        auto b = random_words(gen, n);
        std::uint64_t pop = 0, both = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (int bit = 0; bit < 64; ++bit) {
                pop += (a[i] >> bit) & 1u;
                both += ((a[i] & b[i]) >> bit) & 1u;
            }
        }
        CHECK(sc.popcount_words(a.data(), n) == pop);
        CHECK(sc.and_popcount_words(a.data(), b.data(), n) == both);
    }
}

TEST_CASE("and_words writes the elementwise conjunction into dst") {
    rng gen(13);
    const k::backend& sc = k::scalar_backend();
    auto a = random_words(gen, 9);
    auto b = random_words(gen, 9);
    std::vector<std::uint64_t> dst(9, ~0ull);
    sc.and_words(dst.data(), a.data(), b.data(), 9);
    for (std::size_t i = 0; i < 9; ++i) CHECK(dst[i] == (a[i] & b[i]));
}

TEST_CASE("every available backend is bit-exact with the scalar reference") {
    rng gen(14);
    std::vector<const k::backend*> variants = {&k::scalar_backend()};
    if (k::avx2_backend()) variants.push_back(k::avx2_backend());
    if (k::neon_backend()) variants.push_back(k::neon_backend());

    for (std::size_t n = 0; n <= 67; ++n) {
        auto fa = random_doubles(gen, n);
        auto fb = random_doubles(gen, n);
        auto wa = random_words(gen, n);
        auto wb = random_words(gen, n);

        double ref_dot = k::scalar_backend().dot_f64(fa.data(), fb.data(), n);
        std::uint64_t ref_pop = k::scalar_backend().popcount_words(wa.data(), n);
        std::uint64_t ref_and = k::scalar_backend().and_popcount_words(wa.data(), wb.data(), n);
        std::vector<std::uint64_t> ref_dst(n);
        k::scalar_backend().and_words(ref_dst.data(), wa.data(), wb.data(), n);

        for (const k::backend* v : variants) {
            INFO("backend ", v->name, " n=", n);
            CHECK(same_bits(v->dot_f64(fa.data(), fb.data(), n), ref_dot));
            CHECK(v->popcount_words(wa.data(), n) == ref_pop);
            CHECK(v->and_popcount_words(wa.data(), wb.data(), n) == ref_and);
            std::vector<std::uint64_t> dst(n, 0xfeedfeedfeedfeedull);
            v->and_words(dst.data(), wa.data(), wb.data(), n);
            CHECK(dst == ref_dst);
        }
    }
}

TEST_CASE("force_backend pins selection and nullptr restores it") {
    backend_guard guard;
    k::force_backend(&k::scalar_backend());
    CHECK(std::strcmp(k::active_backend().name, "scalar") == 0);
    if (const k::backend* v = k::avx2_backend()) {
        k::force_backend(v);
        CHECK(std::strcmp(k::active_backend().name, "avx2") == 0);
    }
    k::force_backend(nullptr);
    const k::backend& active = k::active_backend();
    CHECK(active.dot_f64 != nullptr);
    CHECK(active.name != nullptr);
}

TEST_CASE("wrapper functions route through the forced backend") {
    backend_guard guard;
    k::force_backend(&k::scalar_backend());
    rng gen(15);
    auto a = random_doubles(gen, 21);
    auto b = random_doubles(gen, 21);
    CHECK(same_bits(k::dot_f64(a.data(), b.data(), 21), striped_dot(a.data(), b.data(), 21)));
    auto w = random_words(gen, 4);
    CHECK(k::popcount_words(w.data(), 4) == k::scalar_backend().popcount_words(w.data(), 4));
}
