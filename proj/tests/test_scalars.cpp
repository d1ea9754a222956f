#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tetra/fp.hpp"
#include "tetra/rational.hpp"

using namespace tetra;

TEST_CASE("prime field basics")
{
    PrimeField f5(5);
    CHECK(f5.inv(2) == 3); // 2*3 = 6 = 1 mod 5
    CHECK(f5.mul(2, f5.inv(2)) == 1);
    CHECK_THROWS_AS(f5.inv(0), std::domain_error);
    CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
    PrimeField f(1000003);
    CHECK(f.from_long(-1) == 1000002);
    CHECK(f.parse("2/3").value() == f.div(2, 3));
}

TEST_CASE("rational basics")
{
    RationalField q;
    auto half = q.parse("1/2").value();
    auto third = q.parse("1/3").value();
    auto s = q.add(half, third);
    CHECK(s == Rat{5, 6});
    CHECK(q.to_string(s) == "5/6");
    CHECK(q.eq(q.mul(s, q.inv(s)), q.one()));
    CHECK_THROWS_AS(q.inv(q.zero()), std::domain_error);
    // canonicalization: parse of non-reduced input is reduced
    CHECK(q.parse("4/6").value() == Rat{2, 3});
    CHECK(q.parse("-4/-6").value() == Rat{2, 3}); // canonical form has a positive denominator
    CHECK(q.parse("-4/6").value() == Rat{-2, 3});
}

TEST_CASE("field axioms on random triples")
{
    PrimeField f(1000003);
    RationalField q;
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = f.from_long(static_cast<long long>(rng() % 2000) - 1000);
        auto b = f.from_long(static_cast<long long>(rng() % 2000) - 1000);
        auto c = f.from_long(static_cast<long long>(rng() % 2000) - 1000);
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());

        Rat x{static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(rng() % 7) + 1};
        Rat y{static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(rng() % 7) + 1};
        Rat z{static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(rng() % 7) + 1};
        x = q.add(x, q.zero()); // canonicalize
        y = q.add(y, q.zero());
        z = q.add(z, q.zero());
        CHECK(q.add(q.add(x, y), z) == q.add(x, q.add(y, z)));
        CHECK(q.mul(q.mul(x, y), z) == q.mul(x, q.mul(y, z)));
        CHECK(q.mul(x, q.add(y, z)) == q.add(q.mul(x, y), q.mul(x, z)));
        if (!q.is_zero(x)) CHECK(q.eq(q.mul(x, q.inv(x)), q.one()));
    }
}

TEST_CASE("nth_root")
{
    PrimeField f5(5);
    // squares mod 5 are {0,1,4}: 2 has no square root
    CHECK(f5.nth_root(2, 2) == std::nullopt);
    CHECK(f5.nth_root(4, 2).has_value());
    CHECK(f5.pow(f5.nth_root(4, 2).value(), 2) == 4);

    PrimeField f(1000003);
    CHECK(f.nth_root(1, 3).has_value());
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        // round-trip: construct t = a^n, then some n-th root of t must exist
        for (std::uint64_t n : {3ull, 6ull, 8ull, 9ull}) {
            auto t = f.pow(a, n);
            auto r = f.nth_root(t, n);
            REQUIRE(r.has_value());
            CHECK(f.pow(*r, n) == t);
        }
    }

    RationalField q;
    CHECK(q.nth_root(Rat{8, 27}, 3).value() == Rat{2, 3});
    CHECK(q.nth_root(Rat{2, 1}, 2) == std::nullopt);
    CHECK(q.nth_root(Rat{-8, 1}, 3).value() == Rat{-2, 1});
    CHECK(q.nth_root(Rat{-4, 1}, 2) == std::nullopt);
}
