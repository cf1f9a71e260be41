#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "zwdpp/common.hpp"

namespace zwdpp {

// Exact small rational. All values produced here are lattice-sized
// (numerators bounded by parts*N), so plain long long arithmetic is safe.
struct Rational {
    long long num = 0;
    long long den = 1;  // > 0, coprime with num

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DomainError("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw DomainError("Rational: division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const { return Rational(-num, den); }

    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend std::strong_ordering operator<=>(Rational a, Rational b) {
        return a.num * b.den <=> b.num * a.den;
    }
};

// Half-integer stored exactly as twice its value.
struct Half {
    long long twice = 0;

    constexpr Half() = default;
    static constexpr Half from_twice(long long t) {
        Half h;
        h.twice = t;
        return h;
    }
    static constexpr Half whole(long long n) { return from_twice(2 * n); }

    double value() const { return static_cast<double>(twice) / 2.0; }
    Rational over(long long n) const { return Rational(twice, 2 * n); }
    Half negated() const { return from_twice(-twice); }

    friend Half operator+(Half a, Half b) { return from_twice(a.twice + b.twice); }
    friend Half operator-(Half a, Half b) { return from_twice(a.twice - b.twice); }
    friend auto operator<=>(Half a, Half b) = default;
};

}  // namespace zwdpp
