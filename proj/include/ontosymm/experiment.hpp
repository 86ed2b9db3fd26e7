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

#ifndef ONTOSYMM_EXPERIMENT_HPP
#define ONTOSYMM_EXPERIMENT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ontosymm/direction.hpp"
#include "ontosymm/scalar.hpp"

namespace ontosymm {

/// Ordered, duplicate-free collection of opaque labels.
class LabelSet {
   public:
    LabelSet() = default;
    explicit LabelSet(std::vector<std::string> labels);

    size_t size() const {
        return labels_.size();
    }
    const std::string &label(size_t i) const {
        return labels_.at(i);
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    /// Position of a label; throws UnknownLabel.
    size_t index(std::string_view label) const;
    std::optional<size_t> find(std::string_view label) const;

    friend bool operator==(const LabelSet &a, const LabelSet &b) {
        return a.labels_ == b.labels_;
    }

   private:
    std::vector<std::string> labels_;
};

/// One entry of an experiment's probability table, addressed by labels.
struct TableCell {
    std::string a, b, x, y;
    Scalar p;
};

/// Printable cell address.
struct CellRef {
    std::string a, b, x, y;
    std::string str() const {
        return "(a=" + a + ", b=" + b + " | x=" + x + ", y=" + y + ")";
    }
};

/// A prepare-and-measure experiment: outcome sets Omega_A/Omega_B, setting
/// sets Omega_X/Omega_Y and the full conditional table p(a,b|x,y), stored
/// row-major over (a,b,x,y) label positions.  All entries share one scalar
/// mode.  Setting labels may optionally carry the physical direction they
/// stand for, so reports can show both.
class Experiment {
   public:
    using DirectionMap = std::vector<std::pair<std::string, Direction>>;

    Experiment(std::string name, LabelSet omega_a, LabelSet omega_b, LabelSet omega_x, LabelSet omega_y,
               std::vector<Scalar> table, std::optional<DirectionMap> x_directions = std::nullopt,
               std::optional<DirectionMap> y_directions = std::nullopt);

    /// Builds the table from labelled cells; every cell of
    /// Omega_A x Omega_B x Omega_X x Omega_Y must appear exactly once.
    Experiment(std::string name, LabelSet omega_a, LabelSet omega_b, LabelSet omega_x, LabelSet omega_y,
               const std::vector<TableCell> &cells, std::optional<DirectionMap> x_directions = std::nullopt,
               std::optional<DirectionMap> y_directions = std::nullopt);

    const std::string &name() const {
        return name_;
    }
    const LabelSet &omega_a() const {
        return omega_a_;
    }
    const LabelSet &omega_b() const {
        return omega_b_;
    }
    const LabelSet &omega_x() const {
        return omega_x_;
    }
    const LabelSet &omega_y() const {
        return omega_y_;
    }

    const Scalar &p(size_t ia, size_t ib, size_t ix, size_t iy) const {
        return table_[((ia * omega_b_.size() + ib) * omega_x_.size() + ix) * omega_y_.size() + iy];
    }
    const Scalar &p(std::string_view a, std::string_view b, std::string_view x, std::string_view y) const {
        return p(omega_a_.index(a), omega_b_.index(b), omega_x_.index(x), omega_y_.index(y));
    }

    CellRef cell_ref(size_t ia, size_t ib, size_t ix, size_t iy) const {
        return {omega_a_.label(ia), omega_b_.label(ib), omega_x_.label(ix), omega_y_.label(iy)};
    }

    Scalar::Mode mode() const {
        return table_.front().mode();
    }
    Experiment to_float() const;

    const std::optional<DirectionMap> &x_directions() const {
        return x_directions_;
    }
    const std::optional<DirectionMap> &y_directions() const {
        return y_directions_;
    }

   private:
    std::string name_;
    LabelSet omega_a_, omega_b_, omega_x_, omega_y_;
    std::vector<Scalar> table_;
    std::optional<DirectionMap> x_directions_, y_directions_;
};

/// Outcome of validate(): every out-of-range entry and every setting pair
/// whose outcome probabilities do not sum to 1.
struct ValidationReport {
    struct RangeViolation {
        CellRef cell;
        Scalar value;
    };
    struct NormViolation {
        std::string x, y;
        Scalar sum;
    };
    std::vector<RangeViolation> range_violations;
    std::vector<NormViolation> norm_violations;

    bool ok() const {
        return range_violations.empty() && norm_violations.empty();
    }
    std::string summary() const;
};

ValidationReport validate(const Experiment &e, double tol = kDefaultTolerance);

/// Marginal-independence checks.  to_past holds iff the measurement-outcome
/// marginal sum_a p(a,b|x,y) does not depend on the preparation input x;
/// to_future holds iff sum_b p(a,b|x,y) does not depend on the measurement
/// input y.  Witnesses give the first offending pair of settings.
struct NoSignallingReport {
    struct PastWitness {
        std::string b, y, x1, x2;
        Scalar marginal1, marginal2;
    };
    struct FutureWitness {
        std::string a, x, y1, y2;
        Scalar marginal1, marginal2;
    };
    bool to_past = true;
    bool to_future = true;
    std::optional<PastWitness> past_witness;
    std::optional<FutureWitness> future_witness;
};

NoSignallingReport check_no_signalling(const Experiment &e, double tol = kDefaultTolerance);

/// Successful time-reverse identification between two experiments: the four
/// positional label pairings (partner's Omega_A' against Omega_B, and so on).
struct TimeReverseWitness {
    std::string partner;
    std::vector<std::pair<std::string, std::string>> a_identification;  // Omega_A' <-> Omega_B
    std::vector<std::pair<std::string, std::string>> b_identification;  // Omega_B' <-> Omega_A
    std::vector<std::pair<std::string, std::string>> x_identification;  // Omega_X' <-> Omega_Y
    std::vector<std::pair<std::string, std::string>> y_identification;  // Omega_Y' <-> Omega_X
    bool self_reverse = false;
};

struct TimeReverseMismatch {
    CellRef cell;  // in e1 coordinates
    Scalar lhs, rhs;
    std::string str() const;
};

struct TimeReverseCheck {
    std::optional<TimeReverseWitness> witness;
    std::optional<TimeReverseMismatch> mismatch;
    bool ok() const {
        return witness.has_value();
    }
};

/// Decides whether e1 and e2 are operational time reverses of each other
/// under positional label identification: p_e1(a,b|x,y) = p_e2(b,a|y,x).
/// Throws CardinalityMismatch when the label-set sizes rule the relation out.
TimeReverseCheck check_time_reverse_pair(const Experiment &e1, const Experiment &e2,
                                         double tol = kDefaultTolerance);

/// True iff check_time_reverse_pair(e, e) succeeds.  Requires
/// |Omega_A| = |Omega_B| and |Omega_X| = |Omega_Y|.
bool is_self_time_reverse(const Experiment &e, double tol = kDefaultTolerance);

/// Searches all label bijections (not just the positional one) for an
/// identification making e1 and e2 operational time reverses.  Exhaustive for
/// label sets of at most max_labels elements; throws SpaceTooLarge beyond.
std::optional<TimeReverseWitness> search_label_identifications(const Experiment &e1, const Experiment &e2,
                                                               double tol = kDefaultTolerance,
                                                               size_t max_labels = 6);

}  // namespace ontosymm

#endif
