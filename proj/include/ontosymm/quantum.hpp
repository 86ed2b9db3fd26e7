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

#ifndef ONTOSYMM_QUANTUM_HPP
#define ONTOSYMM_QUANTUM_HPP

#include <string>
#include <vector>

#include "ontosymm/ont_model.hpp"

namespace ontosymm {

struct NamedDirection {
    std::string name;
    Direction dir;
};

/// Preparation with input x naming a direction: outputs a = +1/-1 with
/// probability 1/2 each and emits the spin-a state along that direction.
struct QubitPreparation {
    std::vector<NamedDirection> directions;
};

/// Projective measurement along the direction named by input y.
struct QubitMeasurement {
    std::vector<NamedDirection> directions;
};

/// The two-outcome qubit table p(a,b|n,m) = (1 + ab n.m)/4 over the given
/// direction sets.  Omega_A = Omega_B = {+1,-1}; Omega_X and Omega_Y are the
/// direction names.  With mode Exact, all directions must carry exact
/// components (throws InexactDirection otherwise); with mode Float the table
/// is built in floating point.
Experiment predict_qubit(const QubitPreparation &prep, const QubitMeasurement &meas,
                         Scalar::Mode mode = Scalar::Mode::Exact, std::string name = "qubit");

/// The ontic state is the prepared quantum state: Lambda = D x {+1,-1} with
/// labels "[<direction>,<sign>]",
///   prep_out = 1/2,
///   prep_ontic(lambda|a,x) = delta(lambda_1, x) delta(lambda_2, a),
///   meas(b|lambda,y) = (1 + lambda_2 b lambda_1.m_y)/2.
OntModel build_bb_model(const QubitPreparation &prep, const QubitMeasurement &meas,
                        Scalar::Mode mode = Scalar::Mode::Exact, std::string name = "bb");

/// Two preparation directions (z, and 30 degrees off z toward +x) against two
/// measurement directions (z, and 30 degrees off z toward -x), both labelled
/// {0,1}, with direction maps attached to the experiment.  Always exact.
OntModel build_maudlin();

/// Perfect classical k-symbol channel: a uniform symbol is prepared, stored
/// as the ontic state and read out verbatim.  Single trivial setting "*" on
/// both sides.  Its own ontological time reverse under the identity.
OntModel build_classical_control(size_t k);

/// Outcome labels "+1"/"-1".
LabelSet binary_outcomes();

}  // namespace ontosymm

#endif
