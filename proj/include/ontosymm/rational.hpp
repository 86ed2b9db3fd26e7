// Copyright 2026 The onto-symm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOSYMM_RATIONAL_HPP
#define ONTOSYMM_RATIONAL_HPP

#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "ontosymm/errors.hpp"

namespace ontosymm {

namespace detail {

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

/// Signed rational in lowest terms, denominator always positive.
/// Intermediates use 128-bit arithmetic; a result whose canonical form does
/// not fit back into 64 bits throws OverflowError instead of wrapping.
class Rational {
   public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d) : Rational(make(n, d)) {}

    std::int64_t num() const {
        return num_;
    }
    std::int64_t den() const {
        return den_;
    }
    bool is_zero() const {
        return num_ == 0;
    }
    int sign() const {
        return (num_ > 0) - (num_ < 0);
    }
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend Rational operator+(const Rational &a, const Rational &b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational &a, const Rational &b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational &a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend Rational operator*(const Rational &a, const Rational &b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.num_ == 0) {
            throw DivisionByZero("division of rational by zero");
        }
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational &operator+=(const Rational &b) {
        return *this = *this + b;
    }
    Rational &operator-=(const Rational &b) {
        return *this = *this - b;
    }
    Rational &operator*=(const Rational &b) {
        return *this = *this * b;
    }

    // Canonical form makes structural equality exact equality.
    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational &a, const Rational &b) {
        return !(a == b);
    }

    /// Sign of *this - b.
    int compare(const Rational &b) const {
        i128 lhs = i128(num_) * b.den_;
        i128 rhs = i128(b.num_) * den_;
        return (lhs > rhs) - (lhs < rhs);
    }
    friend bool operator<(const Rational &a, const Rational &b) {
        return a.compare(b) < 0;
    }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p/q" or a bare integer "p".
    static Rational parse(std::string_view text) {
        std::int64_t n = 0;
        std::int64_t d = 1;
        const char *first = text.data();
        const char *last = text.data() + text.size();
        if (!text.empty() && text.front() == '+') {
            ++first;  // from_chars rejects an explicit plus
        }
        auto [p, ec] = std::from_chars(first, last, n);
        if (ec != std::errc{}) {
            throw ParseError("bad rational: '" + std::string(text) + "'");
        }
        if (p != last) {
            if (*p != '/') {
                throw ParseError("bad rational: '" + std::string(text) + "'");
            }
            auto [p2, ec2] = std::from_chars(p + 1, last, d);
            if (ec2 != std::errc{} || p2 != last) {
                throw ParseError("bad rational: '" + std::string(text) + "'");
            }
        }
        return Rational(n, d);
    }

   private:
    using i128 = __int128;

    static Rational make(i128 n, i128 d) {
        if (d == 0) {
            throw DivisionByZero("rational with zero denominator");
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        unsigned __int128 mag = n < 0 ? static_cast<unsigned __int128>(-n) : static_cast<unsigned __int128>(n);
        unsigned __int128 g = detail::gcd128(mag, static_cast<unsigned __int128>(d));
        if (g > 1) {
            n /= static_cast<i128>(g);
            d /= static_cast<i128>(g);
        }
        // Symmetric bound so that negation of a canonical value never
        // overflows.
        constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
        if (n < -hi || n > hi || d > hi) {
            throw OverflowError("rational no longer fits in 64 bits");
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace ontosymm

#endif
