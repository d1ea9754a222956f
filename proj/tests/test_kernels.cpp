#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "tetra/fp.hpp"
#include "tetra/fpmatrix.hpp"
#include "tetra/kernels.hpp"
#include "tetra/matrix.hpp"

using namespace tetra;

TEST_CASE("axpy variants agree with the scalar reference")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 300;
        std::vector<std::uint64_t> acc(n), src(n);
        for (auto& x : acc) x = rng() % (1ull << 40);
        for (auto& x : src) x = rng() % (1ull << 32);
        std::uint64_t f = rng() % (1ull << 20);
        auto acc0 = acc;
        auto acc2 = acc;
        kernels::axpy_scalar(acc.data(), src.data(), f, n);
#if defined(__x86_64__) || defined(_M_X64)
        if (__builtin_cpu_supports("avx2")) {
            kernels::axpy_avx2(acc2.data(), src.data(), f, n);
            CHECK(acc == acc2);
        }
#endif
        // widened reference
        for (std::size_t i = 0; i < n; ++i) {
            unsigned __int128 want = static_cast<unsigned __int128>(acc0[i]) +
                                     static_cast<unsigned __int128>(f) * src[i];
            CHECK(acc[i] == static_cast<std::uint64_t>(want));
        }
    }
}

TEST_CASE("active dispatch works")
{
    const auto& d = kernels::active();
    std::vector<std::uint64_t> acc{1, 2, 3, 4, 5}, src{10, 20, 30, 40, 50};
    d.axpy(acc.data(), src.data(), 3, acc.size());
    CHECK(acc == std::vector<std::uint64_t>{31, 62, 93, 124, 155});
    d.reduce(acc.data(), acc.size(), 7);
    CHECK(acc == std::vector<std::uint64_t>{3, 6, 2, 5, 1});
}

TEST_CASE("FpMat rank equals generic rank on random matrices")
{
    PrimeField f(1000003);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = 1 + rng() % 40, c = 1 + rng() % 40;
        std::size_t target_rank = rng() % (std::min(r, c) + 1);
        // build as product of random (r x k) (k x c)
        Mat<PrimeField> a = Mat<PrimeField>::zero(f, r, target_rank ? target_rank : 1);
        Mat<PrimeField> b = Mat<PrimeField>::zero(f, target_rank ? target_rank : 1, c);
        for (auto& x : a.a) x = rng() % f.modulus();
        for (auto& x : b.a) x = rng() % f.modulus();
        Mat<PrimeField> m = mat_mul(f, a, b);
        if (target_rank == 0)
            for (auto& x : m.a) x = 0;
        FpMat fm(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) fm.set(i, j, m.at(i, j));
        CHECK(fm.rank() == rank_of(f, m));
    }
}
