#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace tetra::kernels {

/// acc[i] += f * src[i] over raw uint64 lanes.
/// Contract: src[i] < 2^32 and f < 2^32, so each product fits in 64 bits;
/// the caller owns overflow headroom of the accumulators (see FpMat).
using AxpyFn = void (*)(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t f, std::size_t n);

/// v[i] %= p
using ReduceFn = void (*)(std::uint64_t* v, std::size_t n, std::uint64_t p);

void axpy_scalar(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t f, std::size_t n);
void reduce_scalar(std::uint64_t* v, std::size_t n, std::uint64_t p);

#if defined(__x86_64__) || defined(_M_X64)
void axpy_avx2(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t f, std::size_t n);
#endif

/// Kernel set selected once at startup. TETRA_KERNEL=scalar|avx2 in the
/// environment overrides detection (used by the equivalence tests).
struct Dispatch {
    AxpyFn axpy;
    ReduceFn reduce;
    const char* variant;
};

const Dispatch& active();

} // namespace tetra::kernels
