#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "lieblocks/errors.hpp"

namespace lieblocks {

// Exact 64-bit integer arithmetic that aborts loudly instead of wrapping.
// Character values, class sizes and idempotent numerators at desk scale
// (n <= 8, comfortably up to n <= 10) sit far below the 63-bit limit; the
// checks turn a violated size assumption into a visible failure.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_overflow("integer addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw arithmetic_overflow("integer subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_overflow("integer multiplication overflow");
    return r;
}

inline std::int64_t factorial_i64(unsigned n) {
    if (n > 20)
        throw capacity_error("factorial beyond 64-bit range: " + std::to_string(n));
    std::int64_t f = 1;
    for (unsigned k = 2; k <= n; ++k) f = checked_mul(f, static_cast<std::int64_t>(k));
    return f;
}

// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        std::int64_t g = std::gcd(den_, o.den_);
        std::int64_t l = checked_mul(den_ / g, o.den_);
        std::int64_t n = checked_add(checked_mul(num_, o.den_ / g), checked_mul(o.num_, den_ / g));
        return Rational(n, l);
    }
    Rational operator-(const Rational& o) const { return *this + Rational(-o.num_, o.den_); }
    Rational operator*(const Rational& o) const {
        std::int64_t g1 = std::gcd(std::llabs(num_), o.den_);
        std::int64_t g2 = std::gcd(std::llabs(o.num_), den_);
        return Rational(checked_mul(num_ / g1, o.num_ / g2),
                        checked_mul(den_ / g2, o.den_ / g1));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw domain_error("rational division by zero");
        return *this * Rational(o.den_, o.num_);
    }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Image in GF(p); requires the denominator to be a unit mod p.
    std::uint16_t mod_p(std::uint16_t p) const;

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(std::llabs(num_), den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace lieblocks
