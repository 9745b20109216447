#pragma once

// Tiny exact-rational helper so expected values in tests are written as the
// fractions they really are instead of pre-rounded decimal literals.

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace testsupport {

struct Rat {
    long long num = 0;
    long long den = 1;

    constexpr Rat(long long n, long long d) : num(n), den(d) {
        if (d == 0)
            throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    constexpr Rat operator+(const Rat& o) const {
        return Rat(num * o.den + o.num * den, den * o.den);
    }
    constexpr Rat operator-(const Rat& o) const {
        return Rat(num * o.den - o.num * den, den * o.den);
    }
    constexpr Rat operator*(const Rat& o) const {
        return Rat(num * o.num, den * o.den);
    }
    constexpr Rat operator/(const Rat& o) const {
        return Rat(num * o.den, den * o.num);
    }

    constexpr double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

} // namespace testsupport
