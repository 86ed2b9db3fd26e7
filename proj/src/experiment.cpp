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

#include "ontosymm/experiment.hpp"

#include <algorithm>
#include <numeric>

namespace ontosymm {

LabelSet::LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw SchemaError("label set must be nonempty");
    }
    for (size_t i = 0; i < labels_.size(); ++i) {
        for (size_t j = i + 1; j < labels_.size(); ++j) {
            if (labels_[i] == labels_[j]) {
                throw SchemaError("duplicate label '" + labels_[i] + "'");
            }
        }
    }
}

size_t LabelSet::index(std::string_view label) const {
    if (auto i = find(label)) {
        return *i;
    }
    throw UnknownLabel("unknown label '" + std::string(label) + "'");
}

std::optional<size_t> LabelSet::find(std::string_view label) const {
    for (size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return i;
        }
    }
    return std::nullopt;
}

namespace {

void check_direction_map(const std::optional<Experiment::DirectionMap> &map, const LabelSet &set,
                         const char *which) {
    if (!map) {
        return;
    }
    for (const auto &[label, dir] : *map) {
        (void)dir;
        set.index(label);  // throws UnknownLabel for stray labels
    }
    for (size_t i = 0; i < set.size(); ++i) {
        size_t count = 0;
        for (const auto &[label, dir] : *map) {
            (void)dir;
            count += label == set.label(i);
        }
        if (count != 1) {
            throw SchemaError(std::string(which) + " direction map must cover label '" + set.label(i) +
                              "' exactly once");
        }
    }
}

void check_uniform_mode(const std::vector<Scalar> &table) {
    for (const Scalar &s : table) {
        if (s.mode() != table.front().mode()) {
            throw MixedModes("experiment table mixes exact and float scalars");
        }
    }
}

}  // namespace

Experiment::Experiment(std::string name, LabelSet omega_a, LabelSet omega_b, LabelSet omega_x, LabelSet omega_y,
                       std::vector<Scalar> table, std::optional<DirectionMap> x_directions,
                       std::optional<DirectionMap> y_directions)
    : name_(std::move(name)),
      omega_a_(std::move(omega_a)),
      omega_b_(std::move(omega_b)),
      omega_x_(std::move(omega_x)),
      omega_y_(std::move(omega_y)),
      table_(std::move(table)),
      x_directions_(std::move(x_directions)),
      y_directions_(std::move(y_directions)) {
    size_t expected = omega_a_.size() * omega_b_.size() * omega_x_.size() * omega_y_.size();
    if (table_.size() != expected) {
        throw SchemaError("experiment table has " + std::to_string(table_.size()) + " entries, expected " +
                          std::to_string(expected));
    }
    check_uniform_mode(table_);
    check_direction_map(x_directions_, omega_x_, "x");
    check_direction_map(y_directions_, omega_y_, "y");
}

Experiment::Experiment(std::string name, LabelSet omega_a, LabelSet omega_b, LabelSet omega_x, LabelSet omega_y,
                       const std::vector<TableCell> &cells, std::optional<DirectionMap> x_directions,
                       std::optional<DirectionMap> y_directions)
    : Experiment(std::move(name), omega_a, omega_b, omega_x, omega_y,
                 [&] {
                     size_t total = omega_a.size() * omega_b.size() * omega_x.size() * omega_y.size();
                     std::vector<std::optional<Scalar>> slots(total);
                     for (const TableCell &c : cells) {
                         size_t idx = ((omega_a.index(c.a) * omega_b.size() + omega_b.index(c.b)) * omega_x.size() +
                                       omega_x.index(c.x)) *
                                          omega_y.size() +
                                      omega_y.index(c.y);
                         if (slots[idx]) {
                             throw SchemaError("duplicate table cell " + CellRef{c.a, c.b, c.x, c.y}.str());
                         }
                         slots[idx] = c.p;
                     }
                     std::vector<Scalar> table;
                     table.reserve(total);
                     size_t flat = 0;
                     for (size_t ia = 0; ia < omega_a.size(); ++ia) {
                         for (size_t ib = 0; ib < omega_b.size(); ++ib) {
                             for (size_t ix = 0; ix < omega_x.size(); ++ix) {
                                 for (size_t iy = 0; iy < omega_y.size(); ++iy, ++flat) {
                                     if (!slots[flat]) {
                                         throw SchemaError(
                                             "missing table cell " +
                                             CellRef{omega_a.label(ia), omega_b.label(ib), omega_x.label(ix),
                                                     omega_y.label(iy)}
                                                 .str());
                                     }
                                     table.push_back(*slots[flat]);
                                 }
                             }
                         }
                     }
                     return table;
                 }(),
                 std::move(x_directions), std::move(y_directions)) {}

Experiment Experiment::to_float() const {
    std::vector<Scalar> table;
    table.reserve(table_.size());
    for (const Scalar &s : table_) {
        table.push_back(s.to_float());
    }
    auto convert_map = [](const std::optional<DirectionMap> &map) -> std::optional<DirectionMap> {
        if (!map) {
            return std::nullopt;
        }
        DirectionMap out;
        for (const auto &[label, dir] : *map) {
            out.emplace_back(label, dir.to_float());
        }
        return out;
    };
    return Experiment(name_, omega_a_, omega_b_, omega_x_, omega_y_, std::move(table), convert_map(x_directions_),
                      convert_map(y_directions_));
}

std::string ValidationReport::summary() const {
    if (ok()) {
        return "ok";
    }
    std::string out;
    for (const auto &v : range_violations) {
        out += "entry out of [0,1] at " + v.cell.str() + ": " + v.value.str() + "\n";
    }
    for (const auto &v : norm_violations) {
        out += "probabilities for (x=" + v.x + ", y=" + v.y + ") sum to " + v.sum.str() + ", not 1\n";
    }
    return out;
}

ValidationReport validate(const Experiment &e, double tol) {
    ValidationReport report;
    bool exact = e.mode() == Scalar::Mode::Exact;
    Scalar zero = exact ? Scalar() : Scalar::of_double(0.0);
    Scalar one = exact ? Scalar::exact(Rational(1)) : Scalar::of_double(1.0);
    for (size_t ia = 0; ia < e.omega_a().size(); ++ia) {
        for (size_t ib = 0; ib < e.omega_b().size(); ++ib) {
            for (size_t ix = 0; ix < e.omega_x().size(); ++ix) {
                for (size_t iy = 0; iy < e.omega_y().size(); ++iy) {
                    const Scalar &v = e.p(ia, ib, ix, iy);
                    if (v.compare(zero, tol) == Ordering::Less || v.compare(one, tol) == Ordering::Greater) {
                        report.range_violations.push_back({e.cell_ref(ia, ib, ix, iy), v});
                    }
                }
            }
        }
    }
    for (size_t ix = 0; ix < e.omega_x().size(); ++ix) {
        for (size_t iy = 0; iy < e.omega_y().size(); ++iy) {
            Scalar sum = zero;
            for (size_t ia = 0; ia < e.omega_a().size(); ++ia) {
                for (size_t ib = 0; ib < e.omega_b().size(); ++ib) {
                    sum += e.p(ia, ib, ix, iy);
                }
            }
            if (!scalars_equal(sum, one, tol)) {
                report.norm_violations.push_back({e.omega_x().label(ix), e.omega_y().label(iy), sum});
            }
        }
    }
    return report;
}

NoSignallingReport check_no_signalling(const Experiment &e, double tol) {
    NoSignallingReport report;
    auto b_marginal = [&](size_t ib, size_t ix, size_t iy) {
        Scalar sum = e.p(0, ib, ix, iy);
        for (size_t ia = 1; ia < e.omega_a().size(); ++ia) {
            sum += e.p(ia, ib, ix, iy);
        }
        return sum;
    };
    auto a_marginal = [&](size_t ia, size_t ix, size_t iy) {
        Scalar sum = e.p(ia, 0, ix, iy);
        for (size_t ib = 1; ib < e.omega_b().size(); ++ib) {
            sum += e.p(ia, ib, ix, iy);
        }
        return sum;
    };
    for (size_t ib = 0; ib < e.omega_b().size() && report.to_past; ++ib) {
        for (size_t iy = 0; iy < e.omega_y().size() && report.to_past; ++iy) {
            Scalar ref = b_marginal(ib, 0, iy);
            for (size_t ix = 1; ix < e.omega_x().size(); ++ix) {
                Scalar cur = b_marginal(ib, ix, iy);
                if (!scalars_equal(ref, cur, tol)) {
                    report.to_past = false;
                    report.past_witness = {e.omega_b().label(ib), e.omega_y().label(iy), e.omega_x().label(0),
                                           e.omega_x().label(ix), ref, cur};
                    break;
                }
            }
        }
    }
    for (size_t ia = 0; ia < e.omega_a().size() && report.to_future; ++ia) {
        for (size_t ix = 0; ix < e.omega_x().size() && report.to_future; ++ix) {
            Scalar ref = a_marginal(ia, ix, 0);
            for (size_t iy = 1; iy < e.omega_y().size(); ++iy) {
                Scalar cur = a_marginal(ia, ix, iy);
                if (!scalars_equal(ref, cur, tol)) {
                    report.to_future = false;
                    report.future_witness = {e.omega_a().label(ia), e.omega_x().label(ix), e.omega_y().label(0),
                                             e.omega_y().label(iy), ref, cur};
                    break;
                }
            }
        }
    }
    return report;
}

std::string TimeReverseMismatch::str() const {
    return "p1" + cell.str() + " = " + lhs.str() + " but reversed partner cell = " + rhs.str();
}

namespace {

TimeReverseWitness make_positional_witness(const Experiment &e1, const Experiment &e2) {
    TimeReverseWitness w;
    w.partner = e2.name();
    for (size_t i = 0; i < e1.omega_b().size(); ++i) {
        w.a_identification.emplace_back(e2.omega_a().label(i), e1.omega_b().label(i));
    }
    for (size_t i = 0; i < e1.omega_a().size(); ++i) {
        w.b_identification.emplace_back(e2.omega_b().label(i), e1.omega_a().label(i));
    }
    for (size_t i = 0; i < e1.omega_y().size(); ++i) {
        w.x_identification.emplace_back(e2.omega_x().label(i), e1.omega_y().label(i));
    }
    for (size_t i = 0; i < e1.omega_x().size(); ++i) {
        w.y_identification.emplace_back(e2.omega_y().label(i), e1.omega_x().label(i));
    }
    w.self_reverse = e1.name() == e2.name();
    return w;
}

void require_reverse_cardinalities(const Experiment &e1, const Experiment &e2) {
    auto need = [](size_t got, size_t want, const char *what) {
        if (got != want) {
            throw CardinalityMismatch("no label identification possible: |" + std::string(what) + "| is " +
                                      std::to_string(got) + " but the reverse role has " + std::to_string(want) +
                                      " labels");
        }
    };
    need(e2.omega_a().size(), e1.omega_b().size(), "Omega_A'");
    need(e2.omega_b().size(), e1.omega_a().size(), "Omega_B'");
    need(e2.omega_x().size(), e1.omega_y().size(), "Omega_X'");
    need(e2.omega_y().size(), e1.omega_x().size(), "Omega_Y'");
}

}  // namespace

TimeReverseCheck check_time_reverse_pair(const Experiment &e1, const Experiment &e2, double tol) {
    require_reverse_cardinalities(e1, e2);
    TimeReverseCheck result;
    for (size_t ia = 0; ia < e1.omega_a().size(); ++ia) {
        for (size_t ib = 0; ib < e1.omega_b().size(); ++ib) {
            for (size_t ix = 0; ix < e1.omega_x().size(); ++ix) {
                for (size_t iy = 0; iy < e1.omega_y().size(); ++iy) {
                    const Scalar &lhs = e1.p(ia, ib, ix, iy);
                    const Scalar &rhs = e2.p(ib, ia, iy, ix);
                    if (!scalars_equal(lhs, rhs, tol)) {
                        result.mismatch = TimeReverseMismatch{e1.cell_ref(ia, ib, ix, iy), lhs, rhs};
                        return result;
                    }
                }
            }
        }
    }
    result.witness = make_positional_witness(e1, e2);
    return result;
}

bool is_self_time_reverse(const Experiment &e, double tol) {
    if (e.omega_a().size() != e.omega_b().size() || e.omega_x().size() != e.omega_y().size()) {
        throw CardinalityMismatch("self time reverse needs |Omega_A| = |Omega_B| and |Omega_X| = |Omega_Y|");
    }
    return check_time_reverse_pair(e, e, tol).ok();
}

namespace {

// Sorted multiset fingerprint of an (a,b) block, used to prune setting
// identifications before outcome bijections are enumerated.
std::vector<double> block_fingerprint(const Experiment &e, size_t ix, size_t iy) {
    std::vector<double> vals;
    vals.reserve(e.omega_a().size() * e.omega_b().size());
    for (size_t ia = 0; ia < e.omega_a().size(); ++ia) {
        for (size_t ib = 0; ib < e.omega_b().size(); ++ib) {
            vals.push_back(e.p(ia, ib, ix, iy).to_double());
        }
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

bool fingerprints_match(const std::vector<double> &u, const std::vector<double> &v, double tol) {
    for (size_t i = 0; i < u.size(); ++i) {
        if (std::abs(u[i] - v[i]) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::optional<TimeReverseWitness> search_label_identifications(const Experiment &e1, const Experiment &e2,
                                                               double tol, size_t max_labels) {
    require_reverse_cardinalities(e1, e2);
    size_t biggest = std::max({e1.omega_a().size(), e1.omega_b().size(), e1.omega_x().size(), e1.omega_y().size()});
    if (biggest > max_labels) {
        throw SpaceTooLarge("label sets of size " + std::to_string(biggest) +
                            " exceed the identification-search cap of " + std::to_string(max_labels));
    }

    size_t na = e1.omega_a().size(), nb = e1.omega_b().size();
    size_t nx = e1.omega_x().size(), ny = e1.omega_y().size();

    std::vector<std::vector<double>> fp1(nx * ny), fp2(ny * nx);
    for (size_t ix = 0; ix < nx; ++ix) {
        for (size_t iy = 0; iy < ny; ++iy) {
            fp1[ix * ny + iy] = block_fingerprint(e1, ix, iy);
        }
    }
    for (size_t ixp = 0; ixp < ny; ++ixp) {
        for (size_t iyp = 0; iyp < nx; ++iyp) {
            fp2[ixp * nx + iyp] = block_fingerprint(e2, ixp, iyp);
        }
    }

    // perm_x[iy] = index in Omega_X', perm_y[ix] = index in Omega_Y',
    // perm_a[ib] = index in Omega_A', perm_b[ia] = index in Omega_B'.
    // The sorted-multiset prune is only exact in Exact mode; with float
    // tables, values clustered inside tol can sort differently per block and
    // the prune could drop a real identification.
    bool use_fingerprints = e1.mode() == Scalar::Mode::Exact;

    std::vector<size_t> perm_x(ny), perm_y(nx), perm_a(nb), perm_b(na);
    std::iota(perm_x.begin(), perm_x.end(), 0);
    do {
        std::iota(perm_y.begin(), perm_y.end(), 0);
        do {
            bool blocks_ok = true;
            for (size_t ix = 0; ix < nx && blocks_ok && use_fingerprints; ++ix) {
                for (size_t iy = 0; iy < ny && blocks_ok; ++iy) {
                    blocks_ok = fingerprints_match(fp1[ix * ny + iy], fp2[perm_x[iy] * nx + perm_y[ix]], tol);
                }
            }
            if (!blocks_ok) {
                continue;
            }
            std::iota(perm_a.begin(), perm_a.end(), 0);
            do {
                std::iota(perm_b.begin(), perm_b.end(), 0);
                do {
                    bool ok = true;
                    for (size_t ia = 0; ia < na && ok; ++ia) {
                        for (size_t ib = 0; ib < nb && ok; ++ib) {
                            for (size_t ix = 0; ix < nx && ok; ++ix) {
                                for (size_t iy = 0; iy < ny && ok; ++iy) {
                                    ok = scalars_equal(e1.p(ia, ib, ix, iy),
                                                       e2.p(perm_a[ib], perm_b[ia], perm_x[iy], perm_y[ix]), tol);
                                }
                            }
                        }
                    }
                    if (ok) {
                        TimeReverseWitness w;
                        w.partner = e2.name();
                        for (size_t ib = 0; ib < nb; ++ib) {
                            w.a_identification.emplace_back(e2.omega_a().label(perm_a[ib]), e1.omega_b().label(ib));
                        }
                        for (size_t ia = 0; ia < na; ++ia) {
                            w.b_identification.emplace_back(e2.omega_b().label(perm_b[ia]), e1.omega_a().label(ia));
                        }
                        for (size_t iy = 0; iy < ny; ++iy) {
                            w.x_identification.emplace_back(e2.omega_x().label(perm_x[iy]), e1.omega_y().label(iy));
                        }
                        for (size_t ix = 0; ix < nx; ++ix) {
                            w.y_identification.emplace_back(e2.omega_y().label(perm_y[ix]), e1.omega_x().label(ix));
                        }
                        w.self_reverse = e1.name() == e2.name();
                        return w;
                    }
                } while (std::next_permutation(perm_b.begin(), perm_b.end()));
            } while (std::next_permutation(perm_a.begin(), perm_a.end()));
        } while (std::next_permutation(perm_y.begin(), perm_y.end()));
    } while (std::next_permutation(perm_x.begin(), perm_x.end()));
    return std::nullopt;
}

}  // namespace ontosymm
