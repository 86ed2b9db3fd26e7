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

#ifndef ONTOSYMM_THEOREMS_HPP
#define ONTOSYMM_THEOREMS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ontosymm/ont_model.hpp"

namespace ontosymm {

/// Marginal of the joint over outcomes and the projected-out ontic
/// components: g(key, x, y).  For fixed settings the values sum to 1.
struct MarginalFunction {
    std::vector<std::string> keys;
    std::vector<Scalar> values;  // (key, x, y) row-major
    size_t nx = 0, ny = 0;

    const Scalar &at(size_t ik, size_t ix, size_t iy) const {
        return values[(ik * nx + ix) * ny + iy];
    }
    size_t key_index(std::string_view key) const;
};

using LabelProjector = std::function<std::string(std::string_view)>;

/// Projector extracting component i of a structured ontic label.
LabelProjector component_projector(size_t i);
/// Projector keeping the whole label.
LabelProjector identity_projector();

MarginalFunction marginal_g(const OntModel &m, const LabelProjector &projector);

/// One verified (or failed) step of a checker, with a human-readable witness
/// where there is something to point at.
struct CertStep {
    std::string name;
    bool passed = true;
    std::string witness;
};

/// Machine-checkable verdict.  Every step can be replayed against the named
/// inputs; scalars carry the numeric evidence in canonical string form.
struct Certificate {
    std::string kind;  // ViolationExhaustive | SymmetryWitness | LemmaVerified | Noncontextual | Contextual | CHSH
    std::vector<std::string> inputs;
    std::vector<CertStep> steps;
    std::vector<std::pair<std::string, Scalar>> scalars;

    bool all_passed() const;
    const Scalar *scalar(std::string_view name) const;
};

/// Runs the self-reverse bijection search for m against itself.  An empty
/// search is the exhaustive refutation (kind ViolationExhaustive, with the
/// enumeration count); a non-empty one lists the witness bijections (kind
/// SymmetryWitness).  When the preparation's lambda-marginal p(lambda|x)
/// depends on x, the certificate also records that analytic obstruction: the
/// forward marginal varies with the preparation setting while, under any
/// bijection, the reversed marginal cannot.
/// Throws NotSelfReverse and SpaceTooLarge.
Certificate certify_time_symmetry_violation(const OntModel &m, size_t cap = kDefaultBijectionCap,
                                            double tol = kDefaultTolerance);

/// Replays the independence chain on an ontological time-reverse pair:
///   ci1:  p_m1(lambda|x,y) = p_m1(lambda|x)
///   ci2:  p_m2(lambda'|x',y') = p_m2(lambda'|x')
///   ltr:  p_m1(lambda|x,y) = p_m2(f[lambda]|y,x)
///   mi:   p_m1(lambda|x,y) = p_m1(lambda)
/// Throws PreconditionFailed unless (m1, m2, f) pass
/// check_ontological_time_reverse.  The certificate reports each step and the
/// common marginal p(lambda).
Certificate verify_independence_lemma(const OntModel &m1, const OntModel &m2, const Bijection &f,
                               double tol = kDefaultTolerance);

/// Is sum_a prep_ontic(lambda|a,x) prep_out(a|x) independent of x?
/// Requires the experiment to be no-signalling to the past (throws
/// SignallingPreparation otherwise).  Returns kind Noncontextual with the
/// marginal, or Contextual with a witness (lambda, x1, x2).
Certificate check_preparation_noncontextuality(const OntModel &m, double tol = kDefaultTolerance);

/// E(x0,y0) + E(x0,y1) + E(x1,y0) - E(x1,y1) with
/// E(x,y) = sum_{a,b} a b p(a,b|x,y).  Outcome labels must be "+1"/"-1"
/// (throws NonBinaryOutcomes).  The classical bound is 2.
Scalar chsh_value(const Experiment &e, std::string_view x0, std::string_view x1, std::string_view y0,
                  std::string_view y1);

/// chsh_value wrapped as a certificate, including the four correlators and
/// the exact comparison against the classical bound.
Certificate chsh_certificate(const Experiment &e, std::string_view x0, std::string_view x1, std::string_view y0,
                             std::string_view y1, double tol = kDefaultTolerance);

}  // namespace ontosymm

#endif
