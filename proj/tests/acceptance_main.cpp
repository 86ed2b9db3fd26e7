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

// End-to-end acceptance suite.  Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "generators.hpp"
#include "ontosymm/json_io.hpp"

using namespace ontosymm;

namespace {

int failures = 0;

struct Criterion {
    explicit Criterion(std::string label_text) : label(std::move(label_text)) {}

    std::string label;
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string &what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double run_timed(const std::function<void()> &body) {
    auto start = Clock::now();
    body();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const Criterion &c, double seconds, double budget_seconds) {
    bool time_ok = budget_seconds <= 0 || seconds <= budget_seconds;
    bool pass = c.ok && time_ok;
    if (!pass) {
        ++failures;
    }
    char timing[64];
    if (budget_seconds > 0) {
        std::snprintf(timing, sizeof timing, "%.3fs, budget %.1fs", seconds, budget_seconds);
    } else {
        std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    }
    std::string line = std::string(pass ? "PASS" : "FAIL") + "  " + c.label + " (" + timing + ")";
    if (!c.ok) {
        line += ": " + c.detail;
    } else if (!time_ok) {
        line += ": over time budget";
    }
    std::cout << line << "\n";
}

Scalar ex(std::int64_t n, std::int64_t d = 1) {
    return Scalar::exact(Rational(n, d));
}

Direction dir_z() {
    return Direction(Scalar(), Scalar(), ex(1));
}
Direction dir_plus30() {
    return Direction(ex(1, 2), Scalar(), Scalar::sqrt3(Rational(1, 2)));
}

// 1. The maudlin builder emits exactly the four probability families in
// exact form, byte-identical to the golden file.
void criterion_1() {
    Criterion c{"criterion 1: maudlin build matches the golden file and the four families"};
    std::string built;
    double seconds = run_timed([&] {
        OntModel m = build_maudlin();
        built = canonical_dump(model_file_to_json(m.experiment(), &m));

        const Experiment &e = m.experiment();
        Scalar sqrt3_half = Scalar::sqrt3(Rational(1, 2));
        struct Family {
            const char *x, *y;
            Scalar coeff;
        } families[] = {
            {"0", "0", ex(1)},
            {"0", "1", sqrt3_half},
            {"1", "0", sqrt3_half},
            {"1", "1", ex(1, 2)},
        };
        for (const auto &fam : families) {
            for (int a : {+1, -1}) {
                for (int b : {+1, -1}) {
                    Scalar sign = ex(a * b);
                    Scalar want = ex(1, 4) * (ex(1) + sign * fam.coeff);
                    const Scalar &got = e.p(a > 0 ? "+1" : "-1", b > 0 ? "+1" : "-1", fam.x, fam.y);
                    c.expect(got.is_exact(), "table cell not exact");
                    c.expect(scalars_equal(got, want),
                             std::string("cell (") + (a > 0 ? "+1" : "-1") + "," + (b > 0 ? "+1" : "-1") + "|" +
                                 fam.x + "," + fam.y + ") = " + got.str() + ", want " + want.str());
                }
            }
        }
    });
    std::string golden_path = std::string(ONTOSYMM_SOURCE_DIR) + "/tests/golden/maudlin.json";
    try {
        std::string golden = read_file(golden_path);
        c.expect(built == golden, "output differs from " + golden_path);
    } catch (const Error &e) {
        c.expect(false, e.what());
    }
    report(c, seconds, 0.1);
}

// 2. Self operational time reverse, exactly, for maudlin and for the bb
// experiment over its two settings.
void criterion_2() {
    Criterion c{"criterion 2: maudlin and two-direction bb are their own operational reverses"};
    double seconds = run_timed([&] {
        OntModel maudlin = build_maudlin();
        c.expect(maudlin.mode() == Scalar::Mode::Exact, "maudlin not exact");
        c.expect(is_self_time_reverse(maudlin.experiment()), "maudlin not self-reverse");

        QubitPreparation prep{{{"z", dir_z()}, {"u", dir_plus30()}}};
        QubitMeasurement meas{{{"z", dir_z()}, {"u", dir_plus30()}}};
        Experiment bb = predict_qubit(prep, meas);
        c.expect(bb.mode() == Scalar::Mode::Exact, "bb not exact");
        c.expect(is_self_time_reverse(bb), "bb not self-reverse");
    });
    report(c, seconds, 0.1);
}

// 3. The central violation certificate: all 24 bijections of maudlin's
// 4-element ontic space enumerated and refuted.
void criterion_3() {
    Criterion c{"criterion 3: exhaustive time-symmetry refutation of maudlin (24 bijections)"};
    double seconds = run_timed([&] {
        OntModel m = build_maudlin();
        c.expect(m.lambda().size() == 4, "ontic space size is not 4");
        Certificate cert = certify_time_symmetry_violation(m);
        c.expect(cert.kind == "ViolationExhaustive", "kind = " + cert.kind);
        const Scalar *total = cert.scalar("bijections_total");
        const Scalar *refuted = cert.scalar("bijections_refuted");
        c.expect(total && scalars_equal(*total, ex(24)), "expected 24 bijections enumerated");
        c.expect(refuted && scalars_equal(*refuted, ex(24)), "expected 24 bijections refuted");
    });
    report(c, seconds, 1.0);
}

// 4. Lemma chain on 1000 constructed time-reverse pairs, exact arithmetic,
// zero failures tolerated.
void criterion_4() {
    Criterion c{"criterion 4: lemma chain passes on 1000 constructed reverse pairs"};
    double seconds = run_timed([&] {
        testgen::Rng rng(0xACCE7501);
        for (int trial = 0; trial < 1000; ++trial) {
            auto pair = testgen::random_reverse_pair(rng, 4, 4, 6);
            c.expect(pair.m1.mode() == Scalar::Mode::Exact, "pair not exact");
            Certificate cert;
            try {
                cert = verify_independence_lemma(pair.m1, pair.m2, pair.f);
            } catch (const Error &e) {
                c.expect(false, "trial " + std::to_string(trial) + " threw: " + e.what());
                break;
            }
            if (!cert.all_passed()) {
                for (const auto &step : cert.steps) {
                    if (!step.passed) {
                        c.expect(false, "trial " + std::to_string(trial) + " failed step " + step.name + ": " +
                                            step.witness);
                    }
                }
                break;
            }
        }
    });
    report(c, seconds, 30.0);
}

// 5. ci1 universality: the lambda-marginal of the joint is y-independent for
// 1000 random models, exactly.
void criterion_5() {
    Criterion c{"criterion 5: ci1 (y-independence of the lambda marginal) on 1000 random models"};
    double seconds = run_timed([&] {
        testgen::Rng rng(0xACCE7502);
        for (int trial = 0; trial < 1000; ++trial) {
            OntModel m = testgen::random_model(rng);
            c.expect(m.mode() == Scalar::Mode::Exact, "model not exact");
            JointTable j(m);
            for (size_t il = 0; il < m.nl(); ++il) {
                for (size_t ix = 0; ix < m.nx(); ++ix) {
                    Scalar ref;
                    for (size_t ia = 0; ia < m.na(); ++ia) {
                        for (size_t ib = 0; ib < m.nb(); ++ib) {
                            ref += j.at(ia, ib, il, ix, 0);
                        }
                    }
                    for (size_t iy = 1; iy < m.ny(); ++iy) {
                        Scalar cur;
                        for (size_t ia = 0; ia < m.na(); ++ia) {
                            for (size_t ib = 0; ib < m.nb(); ++ib) {
                                cur += j.at(ia, ib, il, ix, iy);
                            }
                        }
                        if (ref.compare(cur) != Ordering::Equal) {
                            c.expect(false, "trial " + std::to_string(trial) + ": marginal varies with y");
                        }
                    }
                }
            }
            if (!c.ok) {
                break;
            }
        }
    });
    report(c, seconds, 0);
}

// 6. chsh_value(maudlin, 0,1,0,1) = 1/2 + sqrt3 exactly, strictly above the
// classical bound.
void criterion_6() {
    Criterion c{"criterion 6: chsh(maudlin; 0,1,0,1) = 1/2 + sqrt3 > 2 exactly"};
    double seconds = run_timed([&] {
        OntModel m = build_maudlin();
        Scalar s = chsh_value(m.experiment(), "0", "1", "0", "1");
        c.expect(s.is_exact(), "chsh not exact");
        c.expect(s.str() == "1/2 + 1/1*sqrt3", "chsh = " + s.str());
        c.expect(s.compare(ex(2)) == Ordering::Greater, "chsh does not exceed 2");
    });
    report(c, seconds, 0);
}

// 7. Positive control: the classical-bit model has an ontological reverse
// (identity witness) and the lemma chain verifies end to end.
void criterion_7() {
    Criterion c{"criterion 7: classical control passes search (identity) and the lemma chain"};
    double seconds = run_timed([&] {
        OntModel control = build_classical_control(2);
        auto found = search_time_reverse_bijection(control, control);
        bool has_identity = false;
        for (const auto &f : found) {
            bool is_id = true;
            for (size_t i = 0; i < control.nl(); ++i) {
                is_id = is_id && f.map(i) == i;
            }
            has_identity = has_identity || is_id;
        }
        c.expect(has_identity, "identity bijection not found");
        Certificate cert = verify_independence_lemma(control, control, Bijection::identity(control.lambda()));
        c.expect(cert.all_passed(), "lemma chain failed on the control");
        Certificate search_cert = certify_time_symmetry_violation(control);
        c.expect(search_cert.kind == "SymmetryWitness", "control certificate kind = " + search_cert.kind);
    });
    report(c, seconds, 0);
}

// 8. Preparation noncontextuality verdicts with replayable witnesses.
void criterion_8() {
    Criterion c{"criterion 8: contextuality verdicts (maudlin, bb contextual; control noncontextual)"};
    double seconds = run_timed([&] {
        Certificate maud = check_preparation_noncontextuality(build_maudlin());
        c.expect(maud.kind == "Contextual", "maudlin kind = " + maud.kind);

        QubitPreparation prep{{{"z", dir_z()}, {"u", dir_plus30()}}};
        QubitMeasurement meas{{{"z", dir_z()}, {"u", dir_plus30()}}};
        Certificate bb = check_preparation_noncontextuality(build_bb_model(prep, meas));
        c.expect(bb.kind == "Contextual", "bb kind = " + bb.kind);

        Certificate control = check_preparation_noncontextuality(build_classical_control(2));
        c.expect(control.kind == "Noncontextual", "control kind = " + control.kind);

        // Witnesses replay: the two cited marginals really differ (maudlin),
        // and the control's marginal really is flat.
        const Scalar *m1 = maud.scalar("marginal_at_x1");
        const Scalar *m2 = maud.scalar("marginal_at_x2");
        c.expect(m1 && m2 && m1->compare(*m2) != Ordering::Equal, "maudlin witness does not replay");
        const Scalar *p1 = control.scalar("p_lambda[1]");
        c.expect(p1 && scalars_equal(*p1, ex(1, 2)), "control marginal is not 1/2");
    });
    report(c, seconds, 0);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures) {
        std::cout << failures << " criterion(s) FAILED\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
