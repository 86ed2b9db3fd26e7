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

#include "ontosymm/direction.hpp"

namespace ontosymm {

Direction::Direction(Scalar x, Scalar y, Scalar z, double tol) : x_(x), y_(y), z_(z) {
    if (x.mode() != y.mode() || y.mode() != z.mode()) {
        throw MixedModes("direction components must share one scalar mode");
    }
    Scalar norm2 = x * x + y * y + z * z;
    Scalar one = x.is_exact() ? Scalar::exact(Rational(1)) : Scalar::of_double(1.0);
    if (norm2.compare(one, tol) != Ordering::Equal) {
        throw InvalidDirection("direction " + str() + " is not unit length (|v|^2 = " + norm2.str() + ")");
    }
}

std::string Direction::str() const {
    return "(" + x_.str() + ", " + y_.str() + ", " + z_.str() + ")";
}

Scalar dot(const Direction &n, const Direction &m) {
    return n.x() * m.x() + n.y() * m.y() + n.z() * m.z();
}

}  // namespace ontosymm
