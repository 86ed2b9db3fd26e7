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

#ifndef ONTOSYMM_ONT_MODEL_HPP
#define ONTOSYMM_ONT_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ontosymm/experiment.hpp"

namespace ontosymm {

inline constexpr size_t kDefaultBijectionCap = 10;

/// Ordered, duplicate-free set of ontic state labels.  Labels may carry
/// structure in the form "[c0,c1,...]"; see label_component.
class OnticSpace {
   public:
    OnticSpace() = default;
    explicit OnticSpace(std::vector<std::string> labels);

    size_t size() const {
        return labels_.size();
    }
    const std::string &label(size_t i) const {
        return labels_.at(i);
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    size_t index(std::string_view label) const;
    std::optional<size_t> find(std::string_view label) const;

    friend bool operator==(const OnticSpace &a, const OnticSpace &b) {
        return a.labels_ == b.labels_;
    }

   private:
    std::vector<std::string> labels_;
};

/// Component i of a structured label "[c0,c1,...]".  A label without bracket
/// structure has exactly one component: itself.
std::string label_component(std::string_view label, size_t i);
size_t label_component_count(std::string_view label);

/// Total one-to-one map between two ontic spaces.
class Bijection {
   public:
    Bijection(OnticSpace source, OnticSpace target, std::vector<size_t> map);
    static Bijection identity(const OnticSpace &space);
    static Bijection from_pairs(const OnticSpace &source, const OnticSpace &target,
                                const std::vector<std::pair<std::string, std::string>> &pairs);

    const OnticSpace &source() const {
        return source_;
    }
    const OnticSpace &target() const {
        return target_;
    }
    size_t map(size_t i) const {
        return map_.at(i);
    }
    const std::string &map_label(std::string_view source_label) const {
        return target_.label(map_.at(source_.index(source_label)));
    }
    size_t inverse_map(size_t i) const;
    Bijection inverse() const;

    std::string str() const;

   private:
    OnticSpace source_, target_;
    std::vector<size_t> map_;
};

struct PrepOutCell {
    std::string a, x;
    Scalar p;
};
struct PrepOnticCell {
    std::string lambda, a, x;
    Scalar p;
};
struct MeasCell {
    std::string b, lambda, y;
    Scalar p;
};

/// Finite ontological model of an experiment: an ontic space Lambda plus the
/// three conditional tables
///   prep_out(a|x), prep_ontic(lambda|a,x), meas(b|lambda,y).
/// The measurement table takes only (b, lambda, y) by construction — the
/// signature is what enforces that it cannot see P, X or A.
class OntModel {
   public:
    OntModel(Experiment experiment, OnticSpace lambda, std::vector<Scalar> prep_out,
             std::vector<Scalar> prep_ontic, std::vector<Scalar> meas);
    OntModel(Experiment experiment, OnticSpace lambda, const std::vector<PrepOutCell> &prep_out,
             const std::vector<PrepOnticCell> &prep_ontic, const std::vector<MeasCell> &meas);

    const Experiment &experiment() const {
        return experiment_;
    }
    const OnticSpace &lambda() const {
        return lambda_;
    }

    /// p_P(A = a | X = x)
    const Scalar &prep_out(size_t ia, size_t ix) const {
        return prep_out_[ia * nx() + ix];
    }
    /// p_P(L = lambda | A = a, X = x)
    const Scalar &prep_ontic(size_t il, size_t ia, size_t ix) const {
        return prep_ontic_[(il * na() + ia) * nx() + ix];
    }
    /// p_M(B = b | L = lambda, Y = y)
    const Scalar &meas(size_t ib, size_t il, size_t iy) const {
        return meas_[(ib * nl() + il) * ny() + iy];
    }

    size_t na() const {
        return experiment_.omega_a().size();
    }
    size_t nb() const {
        return experiment_.omega_b().size();
    }
    size_t nx() const {
        return experiment_.omega_x().size();
    }
    size_t ny() const {
        return experiment_.omega_y().size();
    }
    size_t nl() const {
        return lambda_.size();
    }

    Scalar::Mode mode() const {
        return experiment_.mode();
    }
    OntModel to_float() const;

   private:
    Experiment experiment_;
    OnticSpace lambda_;
    std::vector<Scalar> prep_out_;    // (a, x)
    std::vector<Scalar> prep_ontic_;  // (lambda, a, x)
    std::vector<Scalar> meas_;        // (b, lambda, y)
};

/// Normalization failures of the three model tables.
struct ModelValidationReport {
    struct NormViolation {
        std::string table;
        std::string given;  // the conditioning assignment, e.g. "a=+1, x=0"
        Scalar sum;
    };
    struct RangeViolation {
        std::string table;
        std::string cell;
        Scalar value;
    };
    std::vector<NormViolation> norm_violations;
    std::vector<RangeViolation> range_violations;
    bool ok() const {
        return norm_violations.empty() && range_violations.empty();
    }
    std::string summary() const;
};

ModelValidationReport validate_model(const OntModel &m, double tol = kDefaultTolerance);

/// The joint distribution p(a, b, lambda | x, y) of an ontological model,
/// materialized cell by cell as meas * prep_ontic * prep_out.
class JointTable {
   public:
    explicit JointTable(const OntModel &m);

    const Scalar &at(size_t ia, size_t ib, size_t il, size_t ix, size_t iy) const {
        return cells_[(((ia * nb_ + ib) * nl_ + il) * nx_ + ix) * ny_ + iy];
    }

   private:
    size_t nb_, nl_, nx_, ny_;
    std::vector<Scalar> cells_;
};

inline JointTable joint(const OntModel &m) {
    return JointTable(m);
}

struct ReproducesResult {
    bool ok = true;
    std::optional<CellRef> first_failure;
    Scalar expected, actual;  // table value and summed joint at the failure
};

/// Does summing the joint over lambda give back the experiment's table?
ReproducesResult reproduces(const OntModel &m, double tol = kDefaultTolerance);

/// Pushes the lambda-indexed tables of m through f.  The relabelled model is
/// over f's target space and has identical joint statistics modulo the
/// renaming.
OntModel relabel(const OntModel &m, const Bijection &f);

struct OntReverseFailure {
    std::string a, b, lambda, x, y;  // m1 coordinates
    Scalar lhs, rhs;
    std::string str() const;
};

struct OntReverseResult {
    bool ok = true;
    std::optional<OntReverseFailure> failure;
};

/// Checks joint_m1(a,b,lambda|x,y) = joint_m2(b,a,f[lambda]|y,x) over every
/// cell.  Throws ExperimentsNotOperationalReverses unless the two underlying
/// experiments pass check_time_reverse_pair, and DomainMismatch unless f maps
/// m1's ontic space onto m2's.
OntReverseResult check_ontological_time_reverse(const OntModel &m1, const OntModel &m2, const Bijection &f,
                                                double tol = kDefaultTolerance);

/// Enumerates every bijection f : Lambda_1 -> Lambda_2 in lexicographic order
/// and returns those satisfying the ontological time-reverse equation.  An
/// empty result is an exhaustive refutation.  Throws SpaceTooLarge when
/// |Lambda| exceeds cap.
std::vector<Bijection> search_time_reverse_bijection(const OntModel &m1, const OntModel &m2,
                                                     size_t cap = kDefaultBijectionCap,
                                                     double tol = kDefaultTolerance);

/// Bayesian inversion of the preparation side:
///   p(lambda|a,x) p(a|x) = p(a|lambda,x) p(lambda|x).
/// Cells conditioned on p(lambda|x) = 0 are undefined (nullopt), never 0/0.
struct BayesianInversion {
    std::vector<std::optional<Scalar>> outcome_given_ontic;  // (a, lambda, x)
    std::vector<Scalar> ontic_given_x;                       // (lambda, x)
    size_t nl = 0, nx = 0;

    const std::optional<Scalar> &a_given_lx(size_t ia, size_t il, size_t ix) const {
        return outcome_given_ontic[(ia * nl + il) * nx + ix];
    }
    const Scalar &l_given_x(size_t il, size_t ix) const {
        return ontic_given_x[il * nx + ix];
    }
};

BayesianInversion bayesian_inversion(const OntModel &m);

}  // namespace ontosymm

#endif
