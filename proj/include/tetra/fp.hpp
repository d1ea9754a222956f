#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tetra {

/// Prime field F_p with elements stored as canonical residues in [0, p).
/// p must be a prime below 2^31 so that products fit in uint64_t and the
/// lazy-reduction dense kernels have headroom.
class PrimeField {
public:
    using Elem = std::uint64_t;
    static constexpr bool is_prime_field = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (std::uint64_t(1) << 31))
            throw std::invalid_argument("prime field modulus must be in [2, 2^31)");
        if (!probably_prime(p))
            throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }
    std::string name() const { return "fp:" + std::to_string(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return p_ == 1 ? 0 : 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inversion of zero in " + name());
        return pow(a, p_ - 2);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_long(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<Elem>(m);
    }

    /// Parses "n" or "a/b" (both components integers).
    std::optional<Elem> parse(const std::string& s) const;

    /// Symmetric representative: residues above p/2 print negated.
    std::string to_string(Elem a) const
    {
        if (a > p_ / 2) return "-" + std::to_string(p_ - a);
        return std::to_string(a);
    }

    /// Some x with x^n = a, or nullopt when no n-th root exists in F_p.
    /// Uses the exponent shortcut when gcd(n, p-1) = 1, else scans; the
    /// scan is O(p) which is fine at the moduli this engine targets.
    std::optional<Elem> nth_root(Elem a, std::uint64_t n) const {
        if (n == 0) throw std::invalid_argument("nth_root: n must be >= 1");
        a %= p_;
        if (a == 0) return Elem(0);
        std::uint64_t g = gcd(n, p_ - 1);
        if (g == 1) {
            // n invertible mod p-1: unique root a^(n^{-1} mod p-1)
            return pow(a, inv_mod(n % (p_ - 1), p_ - 1));
        }
        if (pow(a, (p_ - 1) / g) != one()) return std::nullopt;
        for (Elem x = 1; x < p_; ++x)
            if (pow(x, n) == a) return x;
        return std::nullopt;
    }

    static bool probably_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    static std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
        while (b) { auto t = a % b; a = b; b = t; }
        return a;
    }
    static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
        // extended euclid, a coprime to m
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<long long>(m);
        return static_cast<std::uint64_t>(t);
    }

    std::uint64_t p_;
};

inline std::optional<PrimeField::Elem> PrimeField::parse(const std::string& s) const {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return from_long(std::stoll(s));
        }
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return div(from_long(num), from_long(den));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace tetra
