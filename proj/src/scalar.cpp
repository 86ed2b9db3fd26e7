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

#include "ontosymm/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace ontosymm {

namespace {

void require_same_mode(const Scalar &a, const Scalar &b, const char *op) {
    if (a.mode() != b.mode()) {
        throw MixedModes(std::string("cannot ") + op + " an exact and a float scalar; convert explicitly");
    }
}

// Sign of p + q*sqrt(3), decided without leaving Q: when p and q disagree in
// sign, compare p^2 against 3 q^2.
int sign_of_exact(const Rational &p, const Rational &q) {
    int sp = p.sign();
    int sq = q.sign();
    if (sq == 0) {
        return sp;
    }
    if (sp == 0 || sp == sq) {
        return sq;
    }
    int t = (p * p - Rational(3) * q * q).sign();
    return sp > 0 ? t : -t;
}

}  // namespace

const Rational &Scalar::rational_part() const {
    if (mode_ != Mode::Exact) {
        throw MixedModes("rational_part() on a float scalar");
    }
    return p_;
}

const Rational &Scalar::sqrt3_part() const {
    if (mode_ != Mode::Exact) {
        throw MixedModes("sqrt3_part() on a float scalar");
    }
    return q_;
}

double Scalar::float_value() const {
    if (mode_ != Mode::Float) {
        throw MixedModes("float_value() on an exact scalar");
    }
    return f_;
}

double Scalar::to_double() const {
    if (mode_ == Mode::Float) {
        return f_;
    }
    return p_.to_double() + q_.to_double() * std::sqrt(3.0);
}

int Scalar::sign() const {
    if (mode_ == Mode::Float) {
        return (f_ > 0.0) - (f_ < 0.0);
    }
    return sign_of_exact(p_, q_);
}

Ordering Scalar::compare(const Scalar &other, double tol) const {
    require_same_mode(*this, other, "compare");
    if (mode_ == Mode::Float) {
        double d = f_ - other.f_;
        if (std::fabs(d) <= tol) {
            return Ordering::Equal;
        }
        return d < 0 ? Ordering::Less : Ordering::Greater;
    }
    int s = sign_of_exact(p_ - other.p_, q_ - other.q_);
    if (s == 0) {
        return Ordering::Equal;
    }
    return s < 0 ? Ordering::Less : Ordering::Greater;
}

Scalar operator+(const Scalar &a, const Scalar &b) {
    require_same_mode(a, b, "add");
    if (a.mode_ == Scalar::Mode::Float) {
        return Scalar::of_double(a.f_ + b.f_);
    }
    return Scalar::exact(a.p_ + b.p_, a.q_ + b.q_);
}

Scalar operator-(const Scalar &a, const Scalar &b) {
    require_same_mode(a, b, "subtract");
    if (a.mode_ == Scalar::Mode::Float) {
        return Scalar::of_double(a.f_ - b.f_);
    }
    return Scalar::exact(a.p_ - b.p_, a.q_ - b.q_);
}

Scalar operator-(const Scalar &a) {
    if (a.mode_ == Scalar::Mode::Float) {
        return Scalar::of_double(-a.f_);
    }
    return Scalar::exact(-a.p_, -a.q_);
}

Scalar operator*(const Scalar &a, const Scalar &b) {
    require_same_mode(a, b, "multiply");
    if (a.mode_ == Scalar::Mode::Float) {
        return Scalar::of_double(a.f_ * b.f_);
    }
    // (p1 + q1 s)(p2 + q2 s) with s^2 = 3.
    return Scalar::exact(a.p_ * b.p_ + Rational(3) * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_);
}

Scalar operator/(const Scalar &a, const Scalar &b) {
    require_same_mode(a, b, "divide");
    if (b.is_zero()) {
        throw DivisionByZero("division of scalar by zero");
    }
    if (a.mode_ == Scalar::Mode::Float) {
        return Scalar::of_double(a.f_ / b.f_);
    }
    // 1/(p + q s) = (p - q s) / (p^2 - 3 q^2); the norm is nonzero for any
    // nonzero element since 3 is not a rational square.
    Rational norm = b.p_ * b.p_ - Rational(3) * b.q_ * b.q_;
    Scalar conj = Scalar::exact(b.p_ / norm, -(b.q_ / norm));
    return a * conj;
}

std::string Scalar::str() const {
    if (mode_ == Mode::Float) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", f_);
        return buf;
    }
    return p_.str() + " + " + q_.str() + "*sqrt3";
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(std::string_view lit) {
        skip_ws();
        if (s.substr(pos, lit.size()) == lit) {
            pos += lit.size();
            return true;
        }
        return false;
    }
};

// [+-]? digits [/ digits]?
Rational parse_rational_at(Cursor &c) {
    c.skip_ws();
    size_t start = c.pos;
    if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) {
        ++c.pos;
    }
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        ++c.pos;
    }
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        ++c.pos;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            ++c.pos;
        }
    }
    if (c.pos == start) {
        throw ParseError("expected a rational in scalar '" + std::string(c.s) + "'");
    }
    return Rational::parse(c.s.substr(start, c.pos - start));
}

Scalar parse_exact(std::string_view text) {
    Cursor c{text};
    Rational p;
    Rational q;
    if (c.consume("sqrt3")) {
        q = Rational(1);
    } else {
        Rational first = parse_rational_at(c);
        if (c.consume("*")) {
            if (!c.consume("sqrt3")) {
                throw ParseError("expected sqrt3 after '*' in '" + std::string(text) + "'");
            }
            q = first;
        } else {
            p = first;
            char op = c.peek();
            if (op == '+' || op == '-') {
                ++c.pos;
                Rational second(1);
                if (!c.consume("sqrt3")) {
                    second = parse_rational_at(c);
                    if (!c.consume("*") || !c.consume("sqrt3")) {
                        throw ParseError("expected '*sqrt3' in '" + std::string(text) + "'");
                    }
                }
                q = op == '-' ? -second : second;
            }
        }
    }
    if (!c.done()) {
        throw ParseError("trailing characters in scalar '" + std::string(text) + "'");
    }
    return Scalar::exact(p, q);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    if (text.find("sqrt3") != std::string_view::npos || text.find('/') != std::string_view::npos) {
        return parse_exact(text);
    }
    if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
        text.find('E') != std::string_view::npos) {
        std::string buf(text);
        char *end = nullptr;
        double v = std::strtod(buf.c_str(), &end);
        while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) {
            ++end;
        }
        if (end == buf.c_str() || (end && *end != '\0') || !std::isfinite(v)) {
            throw ParseError("bad float scalar: '" + buf + "'");
        }
        return Scalar::of_double(v);
    }
    return parse_exact(text);
}

}  // namespace ontosymm
