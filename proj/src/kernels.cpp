#include "tetra/kernels.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace tetra::kernels {

void axpy_scalar(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t f, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        acc[i] += f * src[i];
}

void reduce_scalar(std::uint64_t* v, std::size_t n, std::uint64_t p)
{
    for (std::size_t i = 0; i < n; ++i)
        v[i] %= p;
}

#if defined(__x86_64__) || defined(_M_X64)
__attribute__((target("avx2")))
void axpy_avx2(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t f, std::size_t n)
{
    // src lanes are < 2^32, f < 2^32: vpmuludq on the low halves is exact.
    const __m256i vf = _mm256_set1_epi64x(static_cast<long long>(f));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + i));
        __m256i prod = _mm256_mul_epu32(s, vf);
        a = _mm256_add_epi64(a, prod);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
    }
    for (; i < n; ++i)
        acc[i] += f * src[i];
}
#endif

namespace {

Dispatch detect()
{
    const char* want = std::getenv("TETRA_KERNEL");
#if defined(__x86_64__) || defined(_M_X64)
    bool avx2 = __builtin_cpu_supports("avx2");
    if (want && std::strcmp(want, "scalar") == 0) avx2 = false;
    if (want && std::strcmp(want, "avx2") == 0 && !__builtin_cpu_supports("avx2")) avx2 = false;
    if (avx2) return {axpy_avx2, reduce_scalar, "avx2"};
#else
    (void)want;
#endif
    return {axpy_scalar, reduce_scalar, "scalar"};
}

} // namespace

const Dispatch& active()
{
    static const Dispatch d = detect();
    return d;
}

} // namespace tetra::kernels
