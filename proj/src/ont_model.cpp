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

#include "ontosymm/ont_model.hpp"

#include <algorithm>
#include <numeric>

namespace ontosymm {

OnticSpace::OnticSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw SchemaError("ontic space must be nonempty");
    }
    for (size_t i = 0; i < labels_.size(); ++i) {
        for (size_t j = i + 1; j < labels_.size(); ++j) {
            if (labels_[i] == labels_[j]) {
                throw SchemaError("duplicate ontic label '" + labels_[i] + "'");
            }
        }
    }
}

size_t OnticSpace::index(std::string_view label) const {
    if (auto i = find(label)) {
        return *i;
    }
    throw UnknownLabel("unknown ontic label '" + std::string(label) + "'");
}

std::optional<size_t> OnticSpace::find(std::string_view label) const {
    for (size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return i;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::string_view> split_components(std::string_view label) {
    if (label.size() < 2 || label.front() != '[' || label.back() != ']') {
        return {label};
    }
    std::vector<std::string_view> parts;
    std::string_view body = label.substr(1, label.size() - 2);
    size_t start = 0;
    while (true) {
        size_t comma = body.find(',', start);
        if (comma == std::string_view::npos) {
            parts.push_back(body.substr(start));
            break;
        }
        parts.push_back(body.substr(start, comma - start));
        start = comma + 1;
    }
    return parts;
}

}  // namespace

std::string label_component(std::string_view label, size_t i) {
    auto parts = split_components(label);
    if (i >= parts.size()) {
        throw DomainMismatch("label '" + std::string(label) + "' has no component " + std::to_string(i));
    }
    return std::string(parts[i]);
}

size_t label_component_count(std::string_view label) {
    return split_components(label).size();
}

Bijection::Bijection(OnticSpace source, OnticSpace target, std::vector<size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (source_.size() != target_.size()) {
        throw DomainMismatch("bijection needs |source| = |target|, got " + std::to_string(source_.size()) +
                             " and " + std::to_string(target_.size()));
    }
    if (map_.size() != source_.size()) {
        throw DomainMismatch("bijection map must be total over the source space");
    }
    std::vector<bool> hit(target_.size(), false);
    for (size_t i : map_) {
        if (i >= target_.size() || hit[i]) {
            throw DomainMismatch("bijection map is not one-to-one onto the target space");
        }
        hit[i] = true;
    }
}

Bijection Bijection::identity(const OnticSpace &space) {
    std::vector<size_t> map(space.size());
    std::iota(map.begin(), map.end(), 0);
    return Bijection(space, space, std::move(map));
}

Bijection Bijection::from_pairs(const OnticSpace &source, const OnticSpace &target,
                                const std::vector<std::pair<std::string, std::string>> &pairs) {
    if (pairs.size() != source.size()) {
        throw DomainMismatch("bijection needs exactly one pair per source label");
    }
    std::vector<size_t> map(source.size(), target.size());
    for (const auto &[from, to] : pairs) {
        map[source.index(from)] = target.index(to);
    }
    return Bijection(source, target, std::move(map));
}

size_t Bijection::inverse_map(size_t i) const {
    for (size_t j = 0; j < map_.size(); ++j) {
        if (map_[j] == i) {
            return j;
        }
    }
    throw DomainMismatch("index " + std::to_string(i) + " outside bijection target");
}

Bijection Bijection::inverse() const {
    std::vector<size_t> inv(map_.size());
    for (size_t j = 0; j < map_.size(); ++j) {
        inv[map_[j]] = j;
    }
    return Bijection(target_, source_, std::move(inv));
}

std::string Bijection::str() const {
    std::string out;
    for (size_t i = 0; i < map_.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += source_.label(i) + "->" + target_.label(map_[i]);
    }
    return out;
}

namespace {

void check_model_mode(const Experiment &e, const std::vector<Scalar> &t1, const std::vector<Scalar> &t2,
                      const std::vector<Scalar> &t3) {
    Scalar::Mode mode = e.mode();
    for (const auto *table : {&t1, &t2, &t3}) {
        for (const Scalar &s : *table) {
            if (s.mode() != mode) {
                throw MixedModes("ontological model mixes exact and float scalars");
            }
        }
    }
}

}  // namespace

OntModel::OntModel(Experiment experiment, OnticSpace lambda, std::vector<Scalar> prep_out,
                   std::vector<Scalar> prep_ontic, std::vector<Scalar> meas)
    : experiment_(std::move(experiment)),
      lambda_(std::move(lambda)),
      prep_out_(std::move(prep_out)),
      prep_ontic_(std::move(prep_ontic)),
      meas_(std::move(meas)) {
    if (prep_out_.size() != na() * nx() || prep_ontic_.size() != nl() * na() * nx() ||
        meas_.size() != nb() * nl() * ny()) {
        throw SchemaError("ontological model tables do not match the experiment and ontic space shapes");
    }
    check_model_mode(experiment_, prep_out_, prep_ontic_, meas_);
}

OntModel::OntModel(Experiment experiment, OnticSpace lambda, const std::vector<PrepOutCell> &prep_out,
                   const std::vector<PrepOnticCell> &prep_ontic, const std::vector<MeasCell> &meas)
    : OntModel(
          experiment, lambda,
          [&] {
              const auto &oa = experiment.omega_a();
              const auto &ox = experiment.omega_x();
              size_t total = oa.size() * ox.size();
              std::vector<std::optional<Scalar>> slots(total);
              for (const PrepOutCell &c : prep_out) {
                  size_t idx = oa.index(c.a) * ox.size() + ox.index(c.x);
                  if (slots[idx]) {
                      throw SchemaError("duplicate prep_out cell (a=" + c.a + ", x=" + c.x + ")");
                  }
                  slots[idx] = c.p;
              }
              std::vector<Scalar> out;
              for (size_t ia = 0; ia < oa.size(); ++ia) {
                  for (size_t ix = 0; ix < ox.size(); ++ix) {
                      if (!slots[ia * ox.size() + ix]) {
                          throw SchemaError("missing prep_out cell (a=" + oa.label(ia) + ", x=" + ox.label(ix) +
                                            ")");
                      }
                      out.push_back(*slots[ia * ox.size() + ix]);
                  }
              }
              return out;
          }(),
          [&] {
              const auto &oa = experiment.omega_a();
              const auto &ox = experiment.omega_x();
              size_t total = lambda.size() * oa.size() * ox.size();
              std::vector<std::optional<Scalar>> slots(total);
              for (const PrepOnticCell &c : prep_ontic) {
                  size_t idx = (lambda.index(c.lambda) * oa.size() + oa.index(c.a)) * ox.size() + ox.index(c.x);
                  if (slots[idx]) {
                      throw SchemaError("duplicate prep_ontic cell (lambda=" + c.lambda + ", a=" + c.a +
                                        ", x=" + c.x + ")");
                  }
                  slots[idx] = c.p;
              }
              std::vector<Scalar> out;
              for (size_t il = 0; il < lambda.size(); ++il) {
                  for (size_t ia = 0; ia < oa.size(); ++ia) {
                      for (size_t ix = 0; ix < ox.size(); ++ix) {
                          size_t idx = (il * oa.size() + ia) * ox.size() + ix;
                          if (!slots[idx]) {
                              throw SchemaError("missing prep_ontic cell (lambda=" + lambda.label(il) +
                                                ", a=" + oa.label(ia) + ", x=" + ox.label(ix) + ")");
                          }
                          out.push_back(*slots[idx]);
                      }
                  }
              }
              return out;
          }(),
          [&] {
              const auto &ob = experiment.omega_b();
              const auto &oy = experiment.omega_y();
              size_t total = ob.size() * lambda.size() * oy.size();
              std::vector<std::optional<Scalar>> slots(total);
              for (const MeasCell &c : meas) {
                  size_t idx = (ob.index(c.b) * lambda.size() + lambda.index(c.lambda)) * oy.size() + oy.index(c.y);
                  if (slots[idx]) {
                      throw SchemaError("duplicate meas cell (b=" + c.b + ", lambda=" + c.lambda + ", y=" + c.y +
                                        ")");
                  }
                  slots[idx] = c.p;
              }
              std::vector<Scalar> out;
              for (size_t ib = 0; ib < ob.size(); ++ib) {
                  for (size_t il = 0; il < lambda.size(); ++il) {
                      for (size_t iy = 0; iy < oy.size(); ++iy) {
                          size_t idx = (ib * lambda.size() + il) * oy.size() + iy;
                          if (!slots[idx]) {
                              throw SchemaError("missing meas cell (b=" + ob.label(ib) +
                                                ", lambda=" + lambda.label(il) + ", y=" + oy.label(iy) + ")");
                          }
                          out.push_back(*slots[idx]);
                      }
                  }
              }
              return out;
          }()) {}

OntModel OntModel::to_float() const {
    auto conv = [](const std::vector<Scalar> &v) {
        std::vector<Scalar> out;
        out.reserve(v.size());
        for (const Scalar &s : v) {
            out.push_back(s.to_float());
        }
        return out;
    };
    return OntModel(experiment_.to_float(), lambda_, conv(prep_out_), conv(prep_ontic_), conv(meas_));
}

std::string ModelValidationReport::summary() const {
    if (ok()) {
        return "ok";
    }
    std::string out;
    for (const auto &v : range_violations) {
        out += v.table + " entry out of [0,1] at " + v.cell + ": " + v.value.str() + "\n";
    }
    for (const auto &v : norm_violations) {
        out += v.table + " given (" + v.given + ") sums to " + v.sum.str() + ", not 1\n";
    }
    return out;
}

ModelValidationReport validate_model(const OntModel &m, double tol) {
    ModelValidationReport report;
    bool exact = m.mode() == Scalar::Mode::Exact;
    Scalar zero = exact ? Scalar() : Scalar::of_double(0.0);
    Scalar one = exact ? Scalar::exact(Rational(1)) : Scalar::of_double(1.0);
    const auto &e = m.experiment();

    auto check_range = [&](const char *table, const std::string &cell, const Scalar &v) {
        if (v.compare(zero, tol) == Ordering::Less || v.compare(one, tol) == Ordering::Greater) {
            report.range_violations.push_back({table, cell, v});
        }
    };

    for (size_t ix = 0; ix < m.nx(); ++ix) {
        Scalar sum = zero;
        for (size_t ia = 0; ia < m.na(); ++ia) {
            sum += m.prep_out(ia, ix);
            check_range("prep_out", "(a=" + e.omega_a().label(ia) + ", x=" + e.omega_x().label(ix) + ")",
                        m.prep_out(ia, ix));
        }
        if (!scalars_equal(sum, one, tol)) {
            report.norm_violations.push_back({"prep_out", "x=" + e.omega_x().label(ix), sum});
        }
    }
    for (size_t ia = 0; ia < m.na(); ++ia) {
        for (size_t ix = 0; ix < m.nx(); ++ix) {
            Scalar sum = zero;
            for (size_t il = 0; il < m.nl(); ++il) {
                sum += m.prep_ontic(il, ia, ix);
                check_range("prep_ontic",
                            "(lambda=" + m.lambda().label(il) + ", a=" + e.omega_a().label(ia) +
                                ", x=" + e.omega_x().label(ix) + ")",
                            m.prep_ontic(il, ia, ix));
            }
            if (!scalars_equal(sum, one, tol)) {
                report.norm_violations.push_back(
                    {"prep_ontic", "a=" + e.omega_a().label(ia) + ", x=" + e.omega_x().label(ix), sum});
            }
        }
    }
    for (size_t il = 0; il < m.nl(); ++il) {
        for (size_t iy = 0; iy < m.ny(); ++iy) {
            Scalar sum = zero;
            for (size_t ib = 0; ib < m.nb(); ++ib) {
                sum += m.meas(ib, il, iy);
                check_range("meas",
                            "(b=" + e.omega_b().label(ib) + ", lambda=" + m.lambda().label(il) +
                                ", y=" + e.omega_y().label(iy) + ")",
                            m.meas(ib, il, iy));
            }
            if (!scalars_equal(sum, one, tol)) {
                report.norm_violations.push_back(
                    {"meas", "lambda=" + m.lambda().label(il) + ", y=" + e.omega_y().label(iy), sum});
            }
        }
    }
    return report;
}

JointTable::JointTable(const OntModel &m) : nb_(m.nb()), nl_(m.nl()), nx_(m.nx()), ny_(m.ny()) {
    cells_.reserve(m.na() * nb_ * nl_ * nx_ * ny_);
    for (size_t ia = 0; ia < m.na(); ++ia) {
        for (size_t ib = 0; ib < nb_; ++ib) {
            for (size_t il = 0; il < nl_; ++il) {
                for (size_t ix = 0; ix < nx_; ++ix) {
                    for (size_t iy = 0; iy < ny_; ++iy) {
                        cells_.push_back(m.meas(ib, il, iy) * m.prep_ontic(il, ia, ix) * m.prep_out(ia, ix));
                    }
                }
            }
        }
    }
}

ReproducesResult reproduces(const OntModel &m, double tol) {
    JointTable j(m);
    ReproducesResult result;
    const Experiment &e = m.experiment();
    for (size_t ia = 0; ia < m.na(); ++ia) {
        for (size_t ib = 0; ib < m.nb(); ++ib) {
            for (size_t ix = 0; ix < m.nx(); ++ix) {
                for (size_t iy = 0; iy < m.ny(); ++iy) {
                    Scalar sum = j.at(ia, ib, 0, ix, iy);
                    for (size_t il = 1; il < m.nl(); ++il) {
                        sum += j.at(ia, ib, il, ix, iy);
                    }
                    if (!scalars_equal(sum, e.p(ia, ib, ix, iy), tol)) {
                        result.ok = false;
                        result.first_failure = e.cell_ref(ia, ib, ix, iy);
                        result.expected = e.p(ia, ib, ix, iy);
                        result.actual = sum;
                        return result;
                    }
                }
            }
        }
    }
    return result;
}

OntModel relabel(const OntModel &m, const Bijection &f) {
    if (!(f.source() == m.lambda())) {
        throw DomainMismatch("bijection source does not match the model's ontic space");
    }
    size_t nl = m.nl();
    std::vector<Scalar> prep_ontic(nl * m.na() * m.nx(), Scalar());
    std::vector<Scalar> meas(m.nb() * nl * m.ny(), Scalar());
    for (size_t il = 0; il < nl; ++il) {
        size_t jl = f.map(il);
        for (size_t ia = 0; ia < m.na(); ++ia) {
            for (size_t ix = 0; ix < m.nx(); ++ix) {
                prep_ontic[(jl * m.na() + ia) * m.nx() + ix] = m.prep_ontic(il, ia, ix);
            }
        }
        for (size_t ib = 0; ib < m.nb(); ++ib) {
            for (size_t iy = 0; iy < m.ny(); ++iy) {
                meas[(ib * nl + jl) * m.ny() + iy] = m.meas(ib, il, iy);
            }
        }
    }
    std::vector<Scalar> prep_out;
    prep_out.reserve(m.na() * m.nx());
    for (size_t ia = 0; ia < m.na(); ++ia) {
        for (size_t ix = 0; ix < m.nx(); ++ix) {
            prep_out.push_back(m.prep_out(ia, ix));
        }
    }
    return OntModel(m.experiment(), f.target(), std::move(prep_out), std::move(prep_ontic), std::move(meas));
}

std::string OntReverseFailure::str() const {
    return "joint(a=" + a + ", b=" + b + ", lambda=" + lambda + " | x=" + x + ", y=" + y + ") = " + lhs.str() +
           " but reversed cell = " + rhs.str();
}

namespace {

void require_reverse_experiments(const OntModel &m1, const OntModel &m2, double tol) {
    try {
        if (!check_time_reverse_pair(m1.experiment(), m2.experiment(), tol).ok()) {
            throw ExperimentsNotOperationalReverses(
                "the underlying experiments are not operational time reverses");
        }
    } catch (const CardinalityMismatch &e) {
        throw ExperimentsNotOperationalReverses(
            std::string("the underlying experiments are not operational time reverses: ") + e.what());
    }
}

void require_matching_spaces(const OntModel &m1, const OntModel &m2, const Bijection &f) {
    if (!(f.source() == m1.lambda()) || !(f.target() == m2.lambda())) {
        throw DomainMismatch("bijection does not map the first model's ontic space onto the second's");
    }
}

// Checks ontTR for one bijection given precomputed joints; map[il] is the
// index of f(lambda_il) in m2's ontic space.
bool joint_reverse_holds(const OntModel &m1, const JointTable &j1, const JointTable &j2,
                         const std::vector<size_t> &map, double tol, OntReverseFailure *failure) {
    const Experiment &e = m1.experiment();
    for (size_t ia = 0; ia < m1.na(); ++ia) {
        for (size_t ib = 0; ib < m1.nb(); ++ib) {
            for (size_t il = 0; il < m1.nl(); ++il) {
                for (size_t ix = 0; ix < m1.nx(); ++ix) {
                    for (size_t iy = 0; iy < m1.ny(); ++iy) {
                        // m2 roles: a' = b, b' = a, x' = y, y' = x.
                        const Scalar &lhs = j1.at(ia, ib, il, ix, iy);
                        const Scalar &rhs = j2.at(ib, ia, map[il], iy, ix);
                        if (!scalars_equal(lhs, rhs, tol)) {
                            if (failure) {
                                *failure = {e.omega_a().label(ia),
                                            e.omega_b().label(ib),
                                            m1.lambda().label(il),
                                            e.omega_x().label(ix),
                                            e.omega_y().label(iy),
                                            lhs,
                                            rhs};
                            }
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

OntReverseResult check_ontological_time_reverse(const OntModel &m1, const OntModel &m2, const Bijection &f,
                                                double tol) {
    require_reverse_experiments(m1, m2, tol);
    require_matching_spaces(m1, m2, f);
    JointTable j1(m1), j2(m2);
    std::vector<size_t> map(m1.nl());
    for (size_t il = 0; il < m1.nl(); ++il) {
        map[il] = f.map(il);
    }
    OntReverseResult result;
    OntReverseFailure failure;
    if (!joint_reverse_holds(m1, j1, j2, map, tol, &failure)) {
        result.ok = false;
        result.failure = failure;
    }
    return result;
}

std::vector<Bijection> search_time_reverse_bijection(const OntModel &m1, const OntModel &m2, size_t cap,
                                                     double tol) {
    require_reverse_experiments(m1, m2, tol);
    if (m1.nl() > cap || m2.nl() > cap) {
        throw SpaceTooLarge("ontic space of size " + std::to_string(std::max(m1.nl(), m2.nl())) +
                            " exceeds the bijection-search cap of " + std::to_string(cap) +
                            " (raise with --cap or ONTOSYMM_CAP)");
    }
    std::vector<Bijection> found;
    if (m1.nl() != m2.nl()) {
        return found;  // no bijection can exist
    }

    JointTable j1(m1), j2(m2);
    size_t nl = m1.nl();

    // Pruning data: the per-(x,y) lambda-marginal vectors.  Any bijection
    // satisfying the reverse equation must match lambda's marginal vector in
    // m1 against f(lambda)'s role-swapped marginal vector in m2; comparing
    // those first skips the full joint check for most candidates.
    size_t nsettings = m1.nx() * m1.ny();
    auto marginal_m1 = [&](size_t il) {
        std::vector<Scalar> v(nsettings, Scalar());
        for (size_t ix = 0; ix < m1.nx(); ++ix) {
            for (size_t iy = 0; iy < m1.ny(); ++iy) {
                Scalar sum = m1.mode() == Scalar::Mode::Exact ? Scalar() : Scalar::of_double(0.0);
                for (size_t ia = 0; ia < m1.na(); ++ia) {
                    for (size_t ib = 0; ib < m1.nb(); ++ib) {
                        sum += j1.at(ia, ib, il, ix, iy);
                    }
                }
                v[ix * m1.ny() + iy] = sum;
            }
        }
        return v;
    };
    auto marginal_m2_swapped = [&](size_t il) {
        std::vector<Scalar> v(nsettings, Scalar());
        for (size_t ix = 0; ix < m1.nx(); ++ix) {
            for (size_t iy = 0; iy < m1.ny(); ++iy) {
                Scalar sum = m2.mode() == Scalar::Mode::Exact ? Scalar() : Scalar::of_double(0.0);
                for (size_t ia = 0; ia < m2.na(); ++ia) {
                    for (size_t ib = 0; ib < m2.nb(); ++ib) {
                        sum += j2.at(ia, ib, il, iy, ix);
                    }
                }
                v[ix * m1.ny() + iy] = sum;
            }
        }
        return v;
    };
    std::vector<std::vector<Scalar>> lm1(nl), lm2(nl);
    for (size_t il = 0; il < nl; ++il) {
        lm1[il] = marginal_m1(il);
        lm2[il] = marginal_m2_swapped(il);
    }
    auto marginals_compatible = [&](size_t il, size_t target) {
        for (size_t k = 0; k < nsettings; ++k) {
            if (!scalars_equal(lm1[il][k], lm2[target][k], tol)) {
                return false;
            }
        }
        return true;
    };

    std::vector<size_t> perm(nl);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool pruned = false;
        for (size_t il = 0; il < nl; ++il) {
            if (!marginals_compatible(il, perm[il])) {
                pruned = true;
                break;
            }
        }
        if (pruned) {
            continue;
        }
        if (joint_reverse_holds(m1, j1, j2, perm, tol, nullptr)) {
            found.emplace_back(m1.lambda(), m2.lambda(), perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

BayesianInversion bayesian_inversion(const OntModel &m) {
    BayesianInversion inv;
    inv.nl = m.nl();
    inv.nx = m.nx();
    bool exact = m.mode() == Scalar::Mode::Exact;
    Scalar zero = exact ? Scalar() : Scalar::of_double(0.0);
    inv.ontic_given_x.assign(m.nl() * m.nx(), zero);
    inv.outcome_given_ontic.assign(m.na() * m.nl() * m.nx(), std::nullopt);
    for (size_t il = 0; il < m.nl(); ++il) {
        for (size_t ix = 0; ix < m.nx(); ++ix) {
            Scalar total = zero;
            for (size_t ia = 0; ia < m.na(); ++ia) {
                total += m.prep_ontic(il, ia, ix) * m.prep_out(ia, ix);
            }
            inv.ontic_given_x[il * m.nx() + ix] = total;
            if (total.is_zero()) {
                continue;  // conditioning event has probability zero: undefined
            }
            for (size_t ia = 0; ia < m.na(); ++ia) {
                inv.outcome_given_ontic[(ia * m.nl() + il) * m.nx() + ix] =
                    m.prep_ontic(il, ia, ix) * m.prep_out(ia, ix) / total;
            }
        }
    }
    return inv;
}

}  // namespace ontosymm
