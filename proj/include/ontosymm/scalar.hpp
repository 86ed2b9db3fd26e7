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

#ifndef ONTOSYMM_SCALAR_HPP
#define ONTOSYMM_SCALAR_HPP

#include <string>
#include <string_view>

#include "ontosymm/rational.hpp"

namespace ontosymm {

enum class Ordering { Less, Equal, Greater };

inline constexpr double kDefaultTolerance = 1e-9;

/// A number in one of two modes:
///  - Exact: an element p + q*sqrt(3) of the field Q(sqrt 3), stored as two
///    rationals.  Arithmetic and comparison are exact.
///  - Float: a double.  Comparisons take a tolerance (default 1e-9).
///
/// The modes never mix: combining an Exact with a Float scalar throws
/// MixedModes.  Conversion to float is explicit (and lossy) via to_float().
class Scalar {
   public:
    enum class Mode { Exact, Float };

    /// Exact zero.
    Scalar() = default;

    static Scalar exact(Rational p, Rational q = Rational()) {
        Scalar s;
        s.mode_ = Mode::Exact;
        s.p_ = p;
        s.q_ = q;
        return s;
    }
    static Scalar of_double(double v) {
        Scalar s;
        s.mode_ = Mode::Float;
        s.f_ = v;
        return s;
    }
    /// coeff * sqrt(3).
    static Scalar sqrt3(Rational coeff = Rational(1)) {
        return exact(Rational(), coeff);
    }

    Mode mode() const {
        return mode_;
    }
    bool is_exact() const {
        return mode_ == Mode::Exact;
    }

    /// Exact mode only: the rational and sqrt(3) coefficients.
    const Rational &rational_part() const;
    const Rational &sqrt3_part() const;
    /// Float mode only.
    double float_value() const;

    /// Real embedding, valid in either mode (lossy for Exact).
    double to_double() const;
    /// Explicit lossy conversion to Float mode.
    Scalar to_float() const {
        return of_double(to_double());
    }

    bool is_zero() const {
        return mode_ == Mode::Exact ? (p_.is_zero() && q_.is_zero()) : f_ == 0.0;
    }
    /// Sign under the real embedding, exact in Exact mode.
    int sign() const;

    /// Three-way comparison.  Exact mode decides the sign of the difference
    /// rationally; Float mode treats |a - b| <= tol as Equal.
    Ordering compare(const Scalar &other, double tol = kDefaultTolerance) const;

    friend Scalar operator+(const Scalar &a, const Scalar &b);
    friend Scalar operator-(const Scalar &a, const Scalar &b);
    friend Scalar operator-(const Scalar &a);
    friend Scalar operator*(const Scalar &a, const Scalar &b);
    friend Scalar operator/(const Scalar &a, const Scalar &b);
    Scalar &operator+=(const Scalar &b) {
        return *this = *this + b;
    }
    Scalar &operator*=(const Scalar &b) {
        return *this = *this * b;
    }

    /// Canonical string: "p/q + r/s*sqrt3" in Exact mode, a decimal literal
    /// in Float mode.
    std::string str() const;

    /// Inverse of str(), with some slack on the exact grammar: "3/8",
    /// "1/4 - 1/8*sqrt3" and bare integers are all accepted.  Strings
    /// containing '.', 'e' or 'E' (and no '/' or "sqrt3") parse as Float.
    static Scalar parse(std::string_view text);

   private:
    Mode mode_ = Mode::Exact;
    Rational p_;
    Rational q_;
    double f_ = 0.0;
};

/// Mode-aware equality: exact in Exact mode, within tol in Float mode.
inline bool scalars_equal(const Scalar &a, const Scalar &b, double tol = kDefaultTolerance) {
    return a.compare(b, tol) == Ordering::Equal;
}

inline const char *ordering_name(Ordering o) {
    switch (o) {
        case Ordering::Less:
            return "Less";
        case Ordering::Equal:
            return "Equal";
        default:
            return "Greater";
    }
}

}  // namespace ontosymm

#endif
