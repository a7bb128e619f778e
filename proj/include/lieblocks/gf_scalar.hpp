#pragma once

#include <cstdint>
#include <string>

#include "lieblocks/errors.hpp"

namespace lieblocks {

bool is_prime(std::uint32_t p);

// Modular inverse for 0 < a < p, p prime.
std::uint16_t gf_inverse(std::uint16_t a, std::uint16_t p);

inline std::uint16_t gf_reduce_i64(std::int64_t v, std::uint16_t p) {
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint16_t>(r);
}

/// An element of the prime field GF(p), p < 2^16.
struct GFScalar {
    std::uint16_t value = 0;
    std::uint16_t p = 2;

    GFScalar() = default;
    GFScalar(std::int64_t v, std::uint16_t prime) : value(0), p(prime) {
        if (!is_prime(prime)) throw domain_error("modulus is not prime: " + std::to_string(prime));
        value = gf_reduce_i64(v, prime);
    }

    GFScalar operator+(GFScalar o) const {
        require_same(o);
        std::uint32_t s = value + o.value;
        if (s >= p) s -= p;
        return with(static_cast<std::uint16_t>(s));
    }
    GFScalar operator-(GFScalar o) const {
        require_same(o);
        std::uint32_t s = value + p - o.value;
        if (s >= p) s -= p;
        return with(static_cast<std::uint16_t>(s));
    }
    GFScalar operator*(GFScalar o) const {
        require_same(o);
        return with(static_cast<std::uint16_t>((std::uint32_t(value) * o.value) % p));
    }
    GFScalar inverse() const {
        if (value == 0) throw domain_error("inverse of zero in GF(p)");
        return with(gf_inverse(value, p));
    }
    bool operator==(GFScalar o) const { return value == o.value && p == o.p; }

private:
    GFScalar with(std::uint16_t v) const { GFScalar s; s.value = v; s.p = p; return s; }
    void require_same(GFScalar o) const {
        if (p != o.p) throw domain_error("GF(p) modulus mismatch");
    }
};

// Division-free reduction of t < 2^16 modulo p, for SIMD-friendly inner loops.
// magic = floor(2^16 / p); the quotient estimate is off by at most one.
struct BarrettU16 {
    std::uint32_t p = 2;
    std::uint32_t magic = 1u << 15;

    BarrettU16() = default;
    explicit BarrettU16(std::uint16_t prime)
        : p(prime), magic((1u << 16) / prime) {}

    std::uint32_t reduce(std::uint32_t t) const {
        std::uint32_t q = (t * magic) >> 16;
        std::uint32_t r = t - q * p;
        return r >= p ? r - p : r;
    }
};

} // namespace lieblocks
