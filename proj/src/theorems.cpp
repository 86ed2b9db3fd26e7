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

#include "ontosymm/theorems.hpp"

#include <algorithm>

namespace ontosymm {

size_t MarginalFunction::key_index(std::string_view key) const {
    for (size_t i = 0; i < keys.size(); ++i) {
        if (keys[i] == key) {
            return i;
        }
    }
    throw UnknownLabel("unknown marginal key '" + std::string(key) + "'");
}

LabelProjector component_projector(size_t i) {
    return [i](std::string_view label) { return label_component(label, i); };
}

LabelProjector identity_projector() {
    return [](std::string_view label) { return std::string(label); };
}

MarginalFunction marginal_g(const OntModel &m, const LabelProjector &projector) {
    MarginalFunction g;
    g.nx = m.nx();
    g.ny = m.ny();

    std::vector<size_t> key_of(m.nl());
    for (size_t il = 0; il < m.nl(); ++il) {
        std::string key = projector(m.lambda().label(il));
        auto it = std::find(g.keys.begin(), g.keys.end(), key);
        if (it == g.keys.end()) {
            key_of[il] = g.keys.size();
            g.keys.push_back(std::move(key));
        } else {
            key_of[il] = static_cast<size_t>(it - g.keys.begin());
        }
    }

    Scalar zero = m.mode() == Scalar::Mode::Exact ? Scalar() : Scalar::of_double(0.0);
    g.values.assign(g.keys.size() * g.nx * g.ny, zero);
    JointTable j(m);
    for (size_t il = 0; il < m.nl(); ++il) {
        for (size_t ix = 0; ix < m.nx(); ++ix) {
            for (size_t iy = 0; iy < m.ny(); ++iy) {
                Scalar sum = zero;
                for (size_t ia = 0; ia < m.na(); ++ia) {
                    for (size_t ib = 0; ib < m.nb(); ++ib) {
                        sum += j.at(ia, ib, il, ix, iy);
                    }
                }
                g.values[(key_of[il] * g.nx + ix) * g.ny + iy] += sum;
            }
        }
    }
    return g;
}

bool Certificate::all_passed() const {
    for (const CertStep &s : steps) {
        if (!s.passed) {
            return false;
        }
    }
    return true;
}

const Scalar *Certificate::scalar(std::string_view name) const {
    for (const auto &[key, value] : scalars) {
        if (key == name) {
            return &value;
        }
    }
    return nullptr;
}

namespace {

// p(lambda | x) = sum_a prep_ontic(lambda|a,x) prep_out(a|x); by the model
// factorization this equals the joint lambda-marginal for every y.
std::vector<Scalar> preparation_marginal(const OntModel &m) {
    Scalar zero = m.mode() == Scalar::Mode::Exact ? Scalar() : Scalar::of_double(0.0);
    std::vector<Scalar> mu(m.nl() * m.nx(), zero);
    for (size_t il = 0; il < m.nl(); ++il) {
        for (size_t ix = 0; ix < m.nx(); ++ix) {
            Scalar sum = zero;
            for (size_t ia = 0; ia < m.na(); ++ia) {
                sum += m.prep_ontic(il, ia, ix) * m.prep_out(ia, ix);
            }
            mu[il * m.nx() + ix] = sum;
        }
    }
    return mu;
}

struct XDependence {
    size_t il, ix1, ix2;
    Scalar v1, v2;
};

std::optional<XDependence> find_x_dependence(const OntModel &m, const std::vector<Scalar> &mu, double tol) {
    for (size_t il = 0; il < m.nl(); ++il) {
        for (size_t ix = 1; ix < m.nx(); ++ix) {
            if (!scalars_equal(mu[il * m.nx()], mu[il * m.nx() + ix], tol)) {
                return XDependence{il, 0, ix, mu[il * m.nx()], mu[il * m.nx() + ix]};
            }
        }
    }
    return std::nullopt;
}

std::uint64_t factorial(size_t n) {
    std::uint64_t f = 1;
    for (size_t i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

Scalar count_scalar(std::uint64_t n) {
    return Scalar::exact(Rational(static_cast<std::int64_t>(n)));
}

}  // namespace

Certificate certify_time_symmetry_violation(const OntModel &m, size_t cap, double tol) {
    Certificate cert;
    cert.inputs = {m.experiment().name()};

    bool self_reverse = false;
    try {
        self_reverse = is_self_time_reverse(m.experiment(), tol);
    } catch (const CardinalityMismatch &e) {
        throw NotSelfReverse(std::string("experiment cannot be its own time reverse: ") + e.what());
    }
    if (!self_reverse) {
        throw NotSelfReverse("experiment '" + m.experiment().name() +
                             "' is not its own operational time reverse");
    }
    cert.steps.push_back({"self_time_reverse", true, ""});

    std::vector<Bijection> witnesses = search_time_reverse_bijection(m, m, cap, tol);
    std::uint64_t total = factorial(m.nl());
    cert.scalars.emplace_back("bijections_total", count_scalar(total));

    if (witnesses.empty()) {
        cert.kind = "ViolationExhaustive";
        cert.steps.push_back({"bijection_search", true,
                              "all " + std::to_string(total) + " bijections of the ontic space refuted"});
        cert.scalars.emplace_back("bijections_refuted", count_scalar(total));

        auto mu = preparation_marginal(m);
        if (auto dep = find_x_dependence(m, mu, tol)) {
            const auto &ox = m.experiment().omega_x();
            const auto &oy = m.experiment().omega_y();
            std::string lam = m.lambda().label(dep->il);
            cert.steps.push_back(
                {"marginal_setting_dependence", true,
                 "p(lambda=" + lam + "|x=" + ox.label(dep->ix1) + ") = " + dep->v1.str() + " differs from p(lambda=" +
                     lam + "|x=" + ox.label(dep->ix2) + ") = " + dep->v2.str() +
                     " at any y (e.g. y=" + oy.label(0) +
                     "); a reversed marginal can only depend on y, so no bijection can match them"});
            cert.scalars.emplace_back("marginal_at_x1", dep->v1);
            cert.scalars.emplace_back("marginal_at_x2", dep->v2);
        }
    } else {
        cert.kind = "SymmetryWitness";
        cert.steps.push_back({"bijection_search", true,
                              std::to_string(witnesses.size()) + " of " + std::to_string(total) +
                                  " bijections satisfy the reverse equation"});
        cert.scalars.emplace_back("bijections_found", count_scalar(witnesses.size()));
        for (size_t i = 0; i < witnesses.size(); ++i) {
            cert.steps.push_back({"witness_bijection_" + std::to_string(i + 1), true, witnesses[i].str()});
        }
    }
    return cert;
}

namespace {

// lambda-marginal of the joint, indexed (lambda, x, y).
std::vector<Scalar> joint_lambda_marginal(const OntModel &m) {
    Scalar zero = m.mode() == Scalar::Mode::Exact ? Scalar() : Scalar::of_double(0.0);
    JointTable j(m);
    std::vector<Scalar> marg(m.nl() * m.nx() * m.ny(), zero);
    for (size_t il = 0; il < m.nl(); ++il) {
        for (size_t ix = 0; ix < m.nx(); ++ix) {
            for (size_t iy = 0; iy < m.ny(); ++iy) {
                Scalar sum = zero;
                for (size_t ia = 0; ia < m.na(); ++ia) {
                    for (size_t ib = 0; ib < m.nb(); ++ib) {
                        sum += j.at(ia, ib, il, ix, iy);
                    }
                }
                marg[(il * m.nx() + ix) * m.ny() + iy] = sum;
            }
        }
    }
    return marg;
}

}  // namespace

Certificate verify_independence_lemma(const OntModel &m1, const OntModel &m2, const Bijection &f, double tol) {
    OntReverseResult pre;
    try {
        pre = check_ontological_time_reverse(m1, m2, f, tol);
    } catch (const Error &e) {
        throw PreconditionFailed(std::string("no ontological time reverse: ") + e.what());
    }
    if (!pre.ok) {
        throw PreconditionFailed("no ontological time reverse: " + pre.failure->str());
    }

    Certificate cert;
    cert.kind = "LemmaVerified";
    cert.inputs = {m1.experiment().name(), m2.experiment().name(), "f: " + f.str()};

    auto marg1 = joint_lambda_marginal(m1);
    auto marg2 = joint_lambda_marginal(m2);
    auto at1 = [&](size_t il, size_t ix, size_t iy) { return marg1[(il * m1.nx() + ix) * m1.ny() + iy]; };
    auto at2 = [&](size_t il, size_t ix, size_t iy) { return marg2[(il * m2.nx() + ix) * m2.ny() + iy]; };

    // ci1: p_m1(lambda | x, y) does not depend on y.
    CertStep ci1{"ci1_lambda_independent_of_y_given_x", true, ""};
    for (size_t il = 0; il < m1.nl() && ci1.passed; ++il) {
        for (size_t ix = 0; ix < m1.nx() && ci1.passed; ++ix) {
            for (size_t iy = 1; iy < m1.ny(); ++iy) {
                if (!scalars_equal(at1(il, ix, 0), at1(il, ix, iy), tol)) {
                    ci1.passed = false;
                    ci1.witness = "lambda=" + m1.lambda().label(il) + ", x=" + m1.experiment().omega_x().label(ix) +
                                  ": y=" + m1.experiment().omega_y().label(0) + " gives " + at1(il, ix, 0).str() +
                                  ", y=" + m1.experiment().omega_y().label(iy) + " gives " + at1(il, ix, iy).str();
                    break;
                }
            }
        }
    }
    cert.steps.push_back(ci1);

    // ci2: the same statement for the reverse model.
    CertStep ci2{"ci2_reverse_lambda_independent_of_y_given_x", true, ""};
    for (size_t il = 0; il < m2.nl() && ci2.passed; ++il) {
        for (size_t ix = 0; ix < m2.nx() && ci2.passed; ++ix) {
            for (size_t iy = 1; iy < m2.ny(); ++iy) {
                if (!scalars_equal(at2(il, ix, 0), at2(il, ix, iy), tol)) {
                    ci2.passed = false;
                    ci2.witness = "lambda'=" + m2.lambda().label(il) +
                                  ", x'=" + m2.experiment().omega_x().label(ix) + " varies with y'";
                    break;
                }
            }
        }
    }
    cert.steps.push_back(ci2);

    // ltr: p_m1(lambda | x, y) = p_m2(f[lambda] | y, x).
    CertStep ltr{"ltr_marginals_match_under_f", true, ""};
    for (size_t il = 0; il < m1.nl() && ltr.passed; ++il) {
        for (size_t ix = 0; ix < m1.nx() && ltr.passed; ++ix) {
            for (size_t iy = 0; iy < m1.ny(); ++iy) {
                if (!scalars_equal(at1(il, ix, iy), at2(f.map(il), iy, ix), tol)) {
                    ltr.passed = false;
                    ltr.witness = "lambda=" + m1.lambda().label(il) + " at (x=" +
                                  m1.experiment().omega_x().label(ix) + ", y=" +
                                  m1.experiment().omega_y().label(iy) + ")";
                    break;
                }
            }
        }
    }
    cert.steps.push_back(ltr);

    // mi: the marginal is one fixed distribution p(lambda) for all settings.
    CertStep mi{"mi_lambda_independent_of_settings", true, ""};
    for (size_t il = 0; il < m1.nl() && mi.passed; ++il) {
        for (size_t ix = 0; ix < m1.nx() && mi.passed; ++ix) {
            for (size_t iy = 0; iy < m1.ny(); ++iy) {
                if (!scalars_equal(at1(il, 0, 0), at1(il, ix, iy), tol)) {
                    mi.passed = false;
                    mi.witness = "lambda=" + m1.lambda().label(il) + " varies across settings: p(lambda|x=" +
                                 m1.experiment().omega_x().label(0) + ",y=" + m1.experiment().omega_y().label(0) +
                                 ") = " + at1(il, 0, 0).str() + " vs p(lambda|x=" +
                                 m1.experiment().omega_x().label(ix) + ",y=" +
                                 m1.experiment().omega_y().label(iy) + ") = " + at1(il, ix, iy).str();
                    break;
                }
            }
        }
    }
    cert.steps.push_back(mi);

    for (size_t il = 0; il < m1.nl(); ++il) {
        cert.scalars.emplace_back("p_lambda[" + m1.lambda().label(il) + "]", at1(il, 0, 0));
    }
    return cert;
}

Certificate check_preparation_noncontextuality(const OntModel &m, double tol) {
    NoSignallingReport ns = check_no_signalling(m.experiment(), tol);
    if (!ns.to_past) {
        std::string detail = ns.past_witness
                                 ? " (p(b=" + ns.past_witness->b + "|x,y=" + ns.past_witness->y +
                                       ") differs between x=" + ns.past_witness->x1 + " and x=" +
                                       ns.past_witness->x2 + ")"
                                 : "";
        throw SignallingPreparation("preparation noncontextuality is only defined for no-signalling preparations" +
                                    detail);
    }

    Certificate cert;
    cert.inputs = {m.experiment().name()};
    auto mu = preparation_marginal(m);
    if (auto dep = find_x_dependence(m, mu, tol)) {
        const auto &ox = m.experiment().omega_x();
        std::string lam = m.lambda().label(dep->il);
        cert.kind = "Contextual";
        cert.steps.push_back({"averaged_marginal_independent_of_x", false,
                              "lambda=" + lam + ", x1=" + ox.label(dep->ix1) + ", x2=" + ox.label(dep->ix2)});
        cert.scalars.emplace_back("marginal_at_x1", dep->v1);
        cert.scalars.emplace_back("marginal_at_x2", dep->v2);
    } else {
        cert.kind = "Noncontextual";
        cert.steps.push_back({"averaged_marginal_independent_of_x", true, ""});
        for (size_t il = 0; il < m.nl(); ++il) {
            cert.scalars.emplace_back("p_lambda[" + m.lambda().label(il) + "]", mu[il * m.nx()]);
        }
    }
    return cert;
}

namespace {

int outcome_sign(const std::string &label) {
    if (label == "+1") {
        return +1;
    }
    if (label == "-1") {
        return -1;
    }
    throw NonBinaryOutcomes("outcome label '" + label + "' is not one of +1/-1");
}

}  // namespace

Scalar chsh_value(const Experiment &e, std::string_view x0, std::string_view x1, std::string_view y0,
                  std::string_view y1) {
    if (e.omega_a().size() != 2 || e.omega_b().size() != 2) {
        throw NonBinaryOutcomes("CHSH needs exactly two outcomes per side, got " +
                                std::to_string(e.omega_a().size()) + " and " + std::to_string(e.omega_b().size()));
    }
    int sa[2] = {outcome_sign(e.omega_a().label(0)), outcome_sign(e.omega_a().label(1))};
    int sb[2] = {outcome_sign(e.omega_b().label(0)), outcome_sign(e.omega_b().label(1))};
    if (sa[0] == sa[1] || sb[0] == sb[1]) {
        throw NonBinaryOutcomes("outcome labels must be +1 and -1");
    }
    bool exact = e.mode() == Scalar::Mode::Exact;
    auto correlator = [&](std::string_view x, std::string_view y) {
        size_t ix = e.omega_x().index(x);
        size_t iy = e.omega_y().index(y);
        Scalar sum = exact ? Scalar() : Scalar::of_double(0.0);
        for (size_t ia = 0; ia < 2; ++ia) {
            for (size_t ib = 0; ib < 2; ++ib) {
                Scalar sign = exact ? Scalar::exact(Rational(sa[ia] * sb[ib]))
                                    : Scalar::of_double(static_cast<double>(sa[ia] * sb[ib]));
                sum += sign * e.p(ia, ib, ix, iy);
            }
        }
        return sum;
    };
    return correlator(x0, y0) + correlator(x0, y1) + correlator(x1, y0) - correlator(x1, y1);
}

Certificate chsh_certificate(const Experiment &e, std::string_view x0, std::string_view x1, std::string_view y0,
                             std::string_view y1, double tol) {
    Scalar s = chsh_value(e, x0, x1, y0, y1);
    Certificate cert;
    cert.kind = "CHSH";
    cert.inputs = {e.name(), "settings: x0=" + std::string(x0) + ", x1=" + std::string(x1) + ", y0=" +
                                 std::string(y0) + ", y1=" + std::string(y1)};
    Scalar abs_s = s.sign() < 0 ? -s : s;
    Scalar two = e.mode() == Scalar::Mode::Exact ? Scalar::exact(Rational(2)) : Scalar::of_double(2.0);
    Ordering vs_bound = abs_s.compare(two, tol);
    cert.steps.push_back({"classical_bound_comparison", true,
                          std::string("compare(|S|, 2) = ") + ordering_name(vs_bound)});
    cert.scalars.emplace_back("chsh", s);
    cert.scalars.emplace_back("abs_chsh", abs_s);
    return cert;
}

}  // namespace ontosymm
