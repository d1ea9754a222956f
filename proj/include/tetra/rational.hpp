#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace tetra {

struct RationalOverflow : std::runtime_error {
    RationalOverflow() : std::runtime_error("rational coefficient overflow; rerun over a prime field") {}
};

/// Reduced fraction num/den with den > 0. Arithmetic goes through
/// __int128 and throws RationalOverflow instead of wrapping.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool operator==(const Rat&) const = default;
};

/// Field of rationals over checked 64-bit fractions. The coefficients in
/// this engine stay tiny (products of ±1 and the λ parameter), so 64 bits
/// is plenty; the overflow guard keeps us honest.
class RationalField {
public:
    using Elem = Rat;
    static constexpr bool is_prime_field = false;

    std::string name() const { return "q"; }

    Elem zero() const { return {0, 1}; }
    Elem one() const { return {1, 1}; }
    bool is_zero(const Elem& a) const { return a.num == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a.num == b.num && a.den == b.den; }

    Elem add(const Elem& a, const Elem& b) const {
        __int128 n = i128(a.num) * b.den + i128(b.num) * a.den;
        __int128 d = i128(a.den) * b.den;
        return make(n, d);
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(const Elem& a) const { return {-a.num, a.den}; }
    Elem mul(const Elem& a, const Elem& b) const {
        return make(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    Elem inv(const Elem& a) const {
        if (a.num == 0) throw std::domain_error("inversion of zero in q");
        return make(i128(a.den), i128(a.num));
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem from_long(long long v) const { return {v, 1}; }

    std::optional<Elem> parse(const std::string& s) const {
        if (s.empty()) return std::nullopt;
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Elem{std::stoll(s), 1};
            long long num = std::stoll(s.substr(0, slash));
            long long den = std::stoll(s.substr(slash + 1));
            if (den == 0) return std::nullopt;
            return make(i128(num), i128(den));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    std::string to_string(const Elem& a) const {
        if (a.den == 1) return std::to_string(a.num);
        return std::to_string(a.num) + "/" + std::to_string(a.den);
    }

    /// Exact n-th root: both components must be perfect n-th powers
    /// (sign permitting). Returns nullopt when no rational root exists.
    std::optional<Elem> nth_root(const Elem& a, std::uint64_t n) const {
        if (n == 0) throw std::invalid_argument("nth_root: n must be >= 1");
        if (n == 1) return a;
        if (a.num == 0) return zero();
        if (a.num < 0 && n % 2 == 0) return std::nullopt;
        bool negate = a.num < 0;
        auto rn = int_root(negate ? -a.num : a.num, n);
        auto rd = int_root(a.den, n);
        if (!rn || !rd) return std::nullopt;
        return Elem{negate ? -*rn : *rn, *rd};
    }

private:
    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    static Elem make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw RationalOverflow();
        return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { auto t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    static std::optional<std::int64_t> int_root(std::int64_t v, std::uint64_t n) {
        // binary search for x with x^n = v
        std::int64_t lo = 1, hi = v;
        if (v == 1) return 1;
        while (lo <= hi) {
            std::int64_t mid = lo + (hi - lo) / 2;
            __int128 acc = 1;
            bool over = false;
            for (std::uint64_t i = 0; i < n; ++i) {
                acc *= mid;
                if (acc > v) { over = true; break; }
            }
            if (!over && acc == v) return mid;
            if (over || acc > v) hi = mid - 1; else lo = mid + 1;
        }
        return std::nullopt;
    }
};

} // namespace tetra
