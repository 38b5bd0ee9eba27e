#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cbkit/errors.hpp"

namespace cbkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Primality by trial division; fine for the word-sized moduli used here.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Element of a prime field F_p. Each element carries its modulus, so values
/// from different fields never combine silently. p must fit in 31 bits so
/// products stay inside uint64_t.
class Fp {
public:
    static constexpr std::uint64_t max_prime = (1ull << 31) - 1;

    Fp() = default;
    Fp(std::int64_t value, std::uint64_t p) : p_(p) {
        if (p < 2 || p > max_prime)
            throw ConfigError("prime out of range: " + std::to_string(p));
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t prime() const { return p_; }

    bool operator==(const Fp& o) const {
        check_same_field(o);
        return v_ == o.v_;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    bool operator<(const Fp& o) const {
        check_same_field(o);
        return v_ < o.v_;
    }

    Fp operator+(const Fp& o) const {
        check_same_field(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check_same_field(o);
        std::uint64_t s = v_ + p_ - o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator*(const Fp& o) const {
        check_same_field(o);
        return raw((v_ * o.v_) % p_, p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (v_ == 0) throw Error("division by zero in F_p");
        // extended euclid on (v, p)
        std::int64_t a = static_cast<std::int64_t>(v_);
        std::int64_t b = static_cast<std::int64_t>(p_);
        std::int64_t x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        return Fp(x0, p_);
    }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }
    void check_same_field(const Fp& o) const {
        if (p_ != o.p_)
            throw DimensionMismatch("mixed prime fields: " + std::to_string(p_) +
                                    " vs " + std::to_string(o.p_));
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 2;
};

// --- field helpers shared by the generic linear algebra and polynomial code ---

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.value() == 0; }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.prime()); }

inline Rational one_like(const Rational&) { return Rational(1); }
inline Fp one_like(const Fp& x) { return Fp(1, x.prime()); }

inline Rational inverse(const Rational& x) {
    if (is_zero(x)) throw Error("division by zero in Q");
    return Rational(1) / x;
}
inline Fp inverse(const Fp& x) { return x.inverse(); }

template <class K>
K field_pow(K base, unsigned e) {
    K acc = one_like(base);
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

/// Describes a coefficient field without reference to an element: the
/// rationals, or F_p for a stated prime. Used wherever elements must be
/// synthesized from scratch (random draws, empty configurations).
template <class K>
struct FieldSpec;

template <>
struct FieldSpec<Rational> {
    Rational from_int(std::int64_t v) const { return Rational(v); }
};

template <>
struct FieldSpec<Fp> {
    std::uint64_t p = 0;
    Fp from_int(std::int64_t v) const {
        if (!is_prime(p)) throw ConfigError("not a prime: " + std::to_string(p));
        return Fp(v, p);
    }
};

/// Reduce a rational a/b to F_p; throws when p divides b.
inline Fp reduce_mod(const Rational& x, std::uint64_t p) {
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);
    const Integer ip(p);
    const Integer dr = den % ip;
    if (dr == 0)
        throw Error("denominator divisible by " + std::to_string(p));
    Integer nr = num % ip;
    if (nr < 0) nr += ip;
    Fp n(static_cast<std::int64_t>(nr), p);
    Fp d(static_cast<std::int64_t>(dr < 0 ? dr + ip : dr), p);
    return n / d;
}

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

} // namespace cbkit
