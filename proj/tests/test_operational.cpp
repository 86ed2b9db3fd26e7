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

#include <doctest.h>

#include "generators.hpp"
#include "ontosymm/experiment.hpp"
#include "ontosymm/quantum.hpp"

using namespace ontosymm;

namespace {

Scalar ex(std::int64_t n, std::int64_t d = 1) {
    return Scalar::exact(Rational(n, d));
}

// p(a,b|x,y) = delta(b,x)/|A| over binary labels: b copies the preparation
// input, the textbook signalling table.
Experiment copy_signal_experiment() {
    LabelSet bits({"0", "1"});
    std::vector<Scalar> table(16, Scalar());
    for (size_t ia = 0; ia < 2; ++ia) {
        for (size_t ib = 0; ib < 2; ++ib) {
            for (size_t ix = 0; ix < 2; ++ix) {
                for (size_t iy = 0; iy < 2; ++iy) {
                    if (ib == ix) {
                        table[((ia * 2 + ib) * 2 + ix) * 2 + iy] = ex(1, 2);
                    }
                }
            }
        }
    }
    return Experiment("copy-signal", bits, bits, bits, bits, std::move(table));
}

}  // namespace

TEST_CASE("label sets reject duplicates and empties") {
    CHECK_THROWS_AS(LabelSet(std::vector<std::string>{}), SchemaError);
    CHECK_THROWS_AS(LabelSet({"x", "x"}), SchemaError);
    LabelSet s({"u", "v"});
    CHECK(s.index("v") == 1);
    CHECK_THROWS_AS(s.index("w"), UnknownLabel);
}

TEST_CASE("experiment construction checks totality") {
    LabelSet ab({"+1", "-1"});
    LabelSet xy({"0"});
    std::vector<TableCell> cells = {
        {"+1", "+1", "0", "0", ex(1, 2)},
        {"+1", "-1", "0", "0", Scalar()},
        {"-1", "+1", "0", "0", Scalar()},
    };
    CHECK_THROWS_AS(Experiment("partial", ab, ab, xy, xy, cells), SchemaError);
    cells.push_back({"-1", "-1", "0", "0", ex(1, 2)});
    Experiment e("full", ab, ab, xy, xy, cells);
    CHECK(scalars_equal(e.p("+1", "+1", "0", "0"), ex(1, 2)));
    cells.push_back({"-1", "-1", "0", "0", ex(1, 2)});
    CHECK_THROWS_AS(Experiment("dup", ab, ab, xy, xy, cells), SchemaError);
}

TEST_CASE("validate flags bad columns and reports each one") {
    auto maudlin = build_maudlin();
    CHECK(validate(maudlin.experiment()).ok());

    // p(+,+|0,0)=1, p(+,-|0,0)=1/4, rest of that column 0: sums to 5/4.
    LabelSet ab({"+1", "-1"});
    LabelSet xy({"0", "1"});
    std::vector<Scalar> table(16, Scalar());
    auto at = [&](size_t ia, size_t ib, size_t ix, size_t iy) -> Scalar & {
        return table[((ia * 2 + ib) * 2 + ix) * 2 + iy];
    };
    at(0, 0, 0, 0) = ex(1);
    at(0, 1, 0, 0) = ex(1, 4);
    for (size_t ix = 0; ix < 2; ++ix) {
        for (size_t iy = 0; iy < 2; ++iy) {
            if (ix == 0 && iy == 0) {
                continue;
            }
            at(0, 0, ix, iy) = ex(1, 2);
            at(1, 1, ix, iy) = ex(1, 2);
        }
    }
    Experiment bad("overweight", ab, ab, xy, xy, std::move(table));
    auto report = validate(bad);
    CHECK(!report.ok());
    REQUIRE(report.norm_violations.size() == 1);
    CHECK(report.norm_violations[0].x == "0");
    CHECK(report.norm_violations[0].y == "0");
    CHECK(scalars_equal(report.norm_violations[0].sum, ex(5, 4)));
}

TEST_CASE("validate flags out-of-range entries") {
    LabelSet one({"o"});
    std::vector<Scalar> table = {ex(3, 2)};
    auto report = validate(Experiment("hot", one, one, one, one, std::move(table)));
    CHECK(report.range_violations.size() == 1);
    CHECK(report.norm_violations.size() == 1);
}

TEST_CASE("qubit experiments from any two directions validate") {
    // Sum over a,b of (1 + ab n.m)/4 is 1 regardless of the dot product:
    // enumeration oracle.
    for (double c : {1.0, 0.0, -0.5, 0.8660254}) {
        double sum = 0;
        for (int a : {+1, -1}) {
            for (int b : {+1, -1}) {
                sum += (1 + a * b * c) / 4;
            }
        }
        CHECK(sum == doctest::Approx(1.0));
    }
    Scalar zero;
    Direction z(zero, zero, ex(1));
    Direction x(ex(1), zero, zero);
    QubitPreparation prep{{{"z", z}, {"x", x}}};
    QubitMeasurement meas{{{"z", z}, {"x", x}}};
    CHECK(validate(predict_qubit(prep, meas)).ok());
}

TEST_CASE("no-signalling checks on both quantum and signalling tables") {
    auto maudlin = build_maudlin();
    auto ns = check_no_signalling(maudlin.experiment());
    CHECK(ns.to_past);
    CHECK(ns.to_future);

    auto signalling = copy_signal_experiment();
    CHECK(validate(signalling).ok());
    auto report = check_no_signalling(signalling);
    CHECK(!report.to_past);
    REQUIRE(report.past_witness.has_value());
    CHECK(report.past_witness->x1 != report.past_witness->x2);
    CHECK(report.to_future);

    // Marginals of (1 + ab n.m)/4 are uniform for any direction set.
    Scalar zero;
    Direction z(zero, zero, ex(1));
    Direction plus30(ex(1, 2), zero, Scalar::sqrt3(Rational(1, 2)));
    QubitPreparation prep{{{"n0", z}, {"n1", plus30}}};
    QubitMeasurement meas{{{"m0", plus30}, {"m1", z}}};
    auto qns = check_no_signalling(predict_qubit(prep, meas));
    CHECK(qns.to_past);
    CHECK(qns.to_future);
}

TEST_CASE("maudlin is its own operational time reverse") {
    auto maudlin = build_maudlin();
    CHECK(is_self_time_reverse(maudlin.experiment()));
    auto check = check_time_reverse_pair(maudlin.experiment(), maudlin.experiment());
    REQUIRE(check.ok());
    CHECK(check.witness->self_reverse);
}

TEST_CASE("signalling table is not self-reverse") {
    CHECK(!is_self_time_reverse(copy_signal_experiment()));
}

TEST_CASE("cardinality mismatches are trivial failures") {
    LabelSet two({"0", "1"});
    LabelSet three({"0", "1", "2"});
    LabelSet one({"*"});
    std::vector<Scalar> t2(2, ex(1, 2));
    Experiment e1("pair2", two, one, one, one, std::move(t2));
    std::vector<Scalar> t3(3, ex(1, 3));
    Experiment e2("triple", one, three, one, one, std::move(t3));
    // |Omega_B'| = 3 but |Omega_A| = 2.
    CHECK_THROWS_AS(check_time_reverse_pair(e1, e2), CardinalityMismatch);
    CHECK_THROWS_AS(is_self_time_reverse(e1), CardinalityMismatch);
}

TEST_CASE("time-reverse check is symmetric and involutive") {
    testgen::Rng rng(0x5EED);
    for (int trial = 0; trial < 50; ++trial) {
        auto pair = testgen::random_reverse_pair(rng, 3, 3, 4);
        const Experiment &e1 = pair.m1.experiment();
        const Experiment &e2 = pair.m2.experiment();
        CHECK(check_time_reverse_pair(e1, e2).ok());
        CHECK(check_time_reverse_pair(e2, e1).ok());

        // Reversing the reverse gives back the original table.
        const LabelSet &oa = e1.omega_a();
        const LabelSet &ob = e1.omega_b();
        const LabelSet &ox = e1.omega_x();
        const LabelSet &oy = e1.omega_y();
        std::vector<Scalar> twice(oa.size() * ob.size() * ox.size() * oy.size(), Scalar());
        for (size_t ia = 0; ia < oa.size(); ++ia) {
            for (size_t ib = 0; ib < ob.size(); ++ib) {
                for (size_t ix = 0; ix < ox.size(); ++ix) {
                    for (size_t iy = 0; iy < oy.size(); ++iy) {
                        twice[((ia * ob.size() + ib) * ox.size() + ix) * oy.size() + iy] =
                            e2.p(ib, ia, iy, ix);
                    }
                }
            }
        }
        Experiment back("double-reverse", oa, ob, ox, oy, std::move(twice));
        for (size_t ia = 0; ia < oa.size(); ++ia) {
            for (size_t ib = 0; ib < ob.size(); ++ib) {
                for (size_t ix = 0; ix < ox.size(); ++ix) {
                    for (size_t iy = 0; iy < oy.size(); ++iy) {
                        CHECK(scalars_equal(back.p(ia, ib, ix, iy), e1.p(ia, ib, ix, iy)));
                    }
                }
            }
        }
    }
}

TEST_CASE("random models induce valid no-signalling-checkable experiments") {
    testgen::Rng rng(0xA11CE);
    for (int trial = 0; trial < 100; ++trial) {
        OntModel m = testgen::random_model(rng);
        CHECK(validate(m.experiment()).ok());
        // Forward marginal p(a|x) never depends on y in a factorizing model.
        CHECK(check_no_signalling(m.experiment()).to_future);
    }
}

TEST_CASE("label-bijection search finds renamed reverses") {
    auto maudlin = build_maudlin();
    const Experiment &e = maudlin.experiment();
    // Same table with every label renamed and outcome order scrambled.
    LabelSet oa({"minus", "plus"});
    LabelSet ob({"up", "down"});
    LabelSet ox({"L", "R"});
    LabelSet oy({"S", "T"});
    std::vector<Scalar> table(16, Scalar());
    // renamed[a', b', x', y'] takes from e at (a = 1-ia', b = ib', x, y).
    for (size_t ia = 0; ia < 2; ++ia) {
        for (size_t ib = 0; ib < 2; ++ib) {
            for (size_t ix = 0; ix < 2; ++ix) {
                for (size_t iy = 0; iy < 2; ++iy) {
                    table[((ia * 2 + ib) * 2 + ix) * 2 + iy] = e.p(1 - ia, ib, ix, iy);
                }
            }
        }
    }
    Experiment renamed("maudlin-renamed", oa, ob, ox, oy, std::move(table));
    // Positionally these mismatch (outcome order flipped on one side)...
    CHECK(!check_time_reverse_pair(e, renamed).ok());
    // ...but a search over label bijections recovers the identification.
    auto witness = search_label_identifications(e, renamed);
    REQUIRE(witness.has_value());
    CHECK(witness->partner == "maudlin-renamed");

    LabelSet seven({"1", "2", "3", "4", "5", "6", "7"});
    std::vector<Scalar> big(7 * 7, Scalar());
    for (size_t i = 0; i < 7; ++i) {
        big[i * 7 + i] = ex(1, 7);
    }
    Experiment wide("wide", seven, seven, LabelSet({"*"}), LabelSet({"*"}), std::move(big));
    CHECK_THROWS_AS(search_label_identifications(wide, wide), SpaceTooLarge);
}
