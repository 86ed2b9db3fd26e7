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

#include "ontosymm/quantum.hpp"

namespace ontosymm {

namespace {

constexpr int kSigns[2] = {+1, -1};

std::vector<NamedDirection> prepare_directions(const std::vector<NamedDirection> &dirs, Scalar::Mode mode,
                                               const char *role) {
    if (dirs.empty()) {
        throw SchemaError(std::string(role) + " needs at least one direction");
    }
    std::vector<NamedDirection> out;
    out.reserve(dirs.size());
    for (const NamedDirection &nd : dirs) {
        if (mode == Scalar::Mode::Exact && nd.dir.mode() != Scalar::Mode::Exact) {
            throw InexactDirection("direction '" + nd.name + "' has float components; exact mode needs exact ones");
        }
        out.push_back({nd.name, mode == Scalar::Mode::Float ? nd.dir.to_float() : nd.dir});
    }
    return out;
}

LabelSet direction_labels(const std::vector<NamedDirection> &dirs) {
    std::vector<std::string> labels;
    labels.reserve(dirs.size());
    for (const NamedDirection &nd : dirs) {
        labels.push_back(nd.name);
    }
    return LabelSet(std::move(labels));
}

Experiment::DirectionMap direction_map(const std::vector<NamedDirection> &dirs) {
    Experiment::DirectionMap map;
    for (const NamedDirection &nd : dirs) {
        map.emplace_back(nd.name, nd.dir);
    }
    return map;
}

Scalar exact_or_float(const Rational &r, Scalar::Mode mode) {
    return mode == Scalar::Mode::Exact ? Scalar::exact(r) : Scalar::of_double(r.to_double());
}

Scalar sign_scalar(int s, Scalar::Mode mode) {
    return exact_or_float(Rational(s), mode);
}

}  // namespace

LabelSet binary_outcomes() {
    return LabelSet({"+1", "-1"});
}

Experiment predict_qubit(const QubitPreparation &prep, const QubitMeasurement &meas, Scalar::Mode mode,
                         std::string name) {
    auto pd = prepare_directions(prep.directions, mode, "preparation");
    auto md = prepare_directions(meas.directions, mode, "measurement");

    Scalar one = exact_or_float(Rational(1), mode);
    Scalar quarter = exact_or_float(Rational(1, 4), mode);

    std::vector<Scalar> table;
    table.reserve(4 * pd.size() * md.size());
    for (int a : kSigns) {
        for (int b : kSigns) {
            for (const NamedDirection &n : pd) {
                for (const NamedDirection &m : md) {
                    Scalar ab = sign_scalar(a * b, mode);
                    table.push_back(quarter * (one + ab * dot(n.dir, m.dir)));
                }
            }
        }
    }
    return Experiment(std::move(name), binary_outcomes(), binary_outcomes(), direction_labels(pd),
                      direction_labels(md), std::move(table), direction_map(pd), direction_map(md));
}

OntModel build_bb_model(const QubitPreparation &prep, const QubitMeasurement &meas, Scalar::Mode mode,
                        std::string name) {
    Experiment e = predict_qubit(prep, meas, mode, std::move(name));
    auto pd = prepare_directions(prep.directions, mode, "preparation");
    auto md = prepare_directions(meas.directions, mode, "measurement");

    std::vector<std::string> lambda_labels;
    for (const NamedDirection &n : pd) {
        for (int s : kSigns) {
            lambda_labels.push_back("[" + n.name + "," + (s > 0 ? "+1" : "-1") + "]");
        }
    }
    OnticSpace lambda(std::move(lambda_labels));

    Scalar zero = exact_or_float(Rational(0), mode);
    Scalar one = exact_or_float(Rational(1), mode);
    Scalar half = exact_or_float(Rational(1, 2), mode);

    size_t nd = pd.size(), nm = md.size(), nl = lambda.size();

    std::vector<Scalar> prep_out(2 * nd, half);

    // prep_ontic(lambda = [d, s] | a, x) = delta(d, x) delta(s, a)
    std::vector<Scalar> prep_ontic(nl * 2 * nd, zero);
    for (size_t id = 0; id < nd; ++id) {
        for (size_t is = 0; is < 2; ++is) {
            size_t il = id * 2 + is;
            prep_ontic[(il * 2 + is) * nd + id] = one;
        }
    }

    // meas(b | [d, s], y) = (1 + s b d.m_y) / 2
    std::vector<Scalar> meas_table(2 * nl * nm, zero);
    for (size_t ib = 0; ib < 2; ++ib) {
        for (size_t id = 0; id < nd; ++id) {
            for (size_t is = 0; is < 2; ++is) {
                size_t il = id * 2 + is;
                for (size_t iy = 0; iy < nm; ++iy) {
                    Scalar sb = sign_scalar(kSigns[is] * kSigns[ib], mode);
                    meas_table[(ib * nl + il) * nm + iy] = half * (one + sb * dot(pd[id].dir, md[iy].dir));
                }
            }
        }
    }
    return OntModel(std::move(e), std::move(lambda), std::move(prep_out), std::move(prep_ontic),
                    std::move(meas_table));
}

OntModel build_maudlin() {
    Scalar zero;
    Scalar one = Scalar::exact(Rational(1));
    Scalar half = Scalar::exact(Rational(1, 2));
    Scalar neg_half = Scalar::exact(Rational(-1, 2));
    Scalar sqrt3_half = Scalar::sqrt3(Rational(1, 2));

    Direction z(zero, zero, one);
    Direction plus30(half, zero, sqrt3_half);    // 30 degrees from z toward +x
    Direction minus30(neg_half, zero, sqrt3_half);  // 30 degrees from z toward -x

    QubitPreparation prep{{{"0", z}, {"1", plus30}}};
    QubitMeasurement meas{{{"0", z}, {"1", minus30}}};
    return build_bb_model(prep, meas, Scalar::Mode::Exact, "maudlin");
}

OntModel build_classical_control(size_t k) {
    if (k < 1) {
        throw SchemaError("classical control needs k >= 1");
    }
    std::vector<std::string> symbols;
    for (size_t i = 1; i <= k; ++i) {
        symbols.push_back(std::to_string(i));
    }
    LabelSet outcomes(symbols);
    LabelSet setting({"*"});
    OnticSpace lambda(symbols);

    Scalar zero;
    Scalar one = Scalar::exact(Rational(1));
    Scalar inv_k = Scalar::exact(Rational(1, static_cast<std::int64_t>(k)));

    // p(a, b | *, *) = delta(a, b) / k
    std::vector<Scalar> table(k * k, zero);
    for (size_t i = 0; i < k; ++i) {
        table[i * k + i] = inv_k;
    }
    Experiment e("classical-" + std::to_string(k), outcomes, outcomes, setting, setting, std::move(table));

    std::vector<Scalar> prep_out(k, inv_k);
    std::vector<Scalar> prep_ontic(k * k, zero);
    std::vector<Scalar> meas_table(k * k, zero);
    for (size_t i = 0; i < k; ++i) {
        prep_ontic[i * k + i] = one;  // lambda = a
        meas_table[i * k + i] = one;  // b = lambda
    }
    return OntModel(std::move(e), std::move(lambda), std::move(prep_out), std::move(prep_ontic),
                    std::move(meas_table));
}

}  // namespace ontosymm
