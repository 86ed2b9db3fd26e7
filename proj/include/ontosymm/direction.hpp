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

#ifndef ONTOSYMM_DIRECTION_HPP
#define ONTOSYMM_DIRECTION_HPP

#include <string>

#include "ontosymm/scalar.hpp"

namespace ontosymm {

/// Unit vector in R^3.  Components share one scalar mode; the unit-norm
/// invariant is checked at construction (exactly in Exact mode, within tol
/// in Float mode).
class Direction {
   public:
    Direction(Scalar x, Scalar y, Scalar z, double tol = kDefaultTolerance);

    const Scalar &x() const {
        return x_;
    }
    const Scalar &y() const {
        return y_;
    }
    const Scalar &z() const {
        return z_;
    }
    Scalar::Mode mode() const {
        return x_.mode();
    }
    Direction to_float() const {
        return Direction(x_.to_float(), y_.to_float(), z_.to_float());
    }

    std::string str() const;

   private:
    Scalar x_, y_, z_;
};

/// Euclidean inner product; closed in Q(sqrt 3) for exact directions.
Scalar dot(const Direction &n, const Direction &m);

}  // namespace ontosymm

#endif
