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

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "ontosymm/json_io.hpp"

using namespace ontosymm;

namespace {

// Exit codes: 0 definitive verdict, 1 usage/parse error, 2 check failure,
// 3 precondition failure.
int exit_code_for(const Error &e) {
    if (dynamic_cast<const SpaceTooLarge *>(&e) || dynamic_cast<const NotSelfReverse *>(&e) ||
        dynamic_cast<const PreconditionFailed *>(&e) || dynamic_cast<const SignallingPreparation *>(&e) ||
        dynamic_cast<const InexactDirection *>(&e) || dynamic_cast<const CardinalityMismatch *>(&e) ||
        dynamic_cast<const ExperimentsNotOperationalReverses *>(&e) || dynamic_cast<const DomainMismatch *>(&e)) {
        return 3;
    }
    return 1;
}

struct RunConfig {
    std::string mode = "exact";
    double tol = kDefaultTolerance;
    size_t cap = kDefaultBijectionCap;
    std::string format = "text";

    bool float_mode() const {
        return mode == "float";
    }
};

ModelFile load(const std::string &path, const RunConfig &cfg) {
    ModelFile f = load_model_file(path);
    if (cfg.float_mode()) {
        if (f.model) {
            OntModel converted = f.model->to_float();
            return ModelFile{converted.experiment(), std::move(converted)};
        }
        return ModelFile{f.experiment.to_float(), std::nullopt};
    }
    return f;
}

const OntModel &require_model(const ModelFile &f, const std::string &path) {
    if (!f.model) {
        throw SchemaError("'" + path + "' holds no ont_model; this command needs one");
    }
    return *f.model;
}

void emit(const std::string &content, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_file(out_path, content);
    }
}

void print_certificate(const Certificate &cert, const RunConfig &cfg, const std::string &out_path) {
    if (cfg.format == "json") {
        std::cout << certificate_dump(cert);
    } else {
        std::cout << "certificate: " << cert.kind << "\n";
        for (const auto &input : cert.inputs) {
            std::cout << "  input: " << input << "\n";
        }
        for (const auto &step : cert.steps) {
            std::cout << "  step " << step.name << ": " << (step.passed ? "pass" : "fail");
            if (!step.witness.empty()) {
                std::cout << "  [" << step.witness << "]";
            }
            std::cout << "\n";
        }
        for (const auto &[name, value] : cert.scalars) {
            std::cout << "  " << name << " = " << value.str() << "\n";
        }
    }
    if (!out_path.empty()) {
        write_file(out_path, certificate_dump(cert));
    }
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

int cmd_build(const std::string &builder, const std::string &directions_path, size_t k,
              const std::string &out_path, const RunConfig &cfg) {
    Scalar::Mode mode = cfg.float_mode() ? Scalar::Mode::Float : Scalar::Mode::Exact;
    std::optional<OntModel> model;
    if (builder == "maudlin") {
        model = build_maudlin();
    } else if (builder == "bb") {
        if (directions_path.empty()) {
            throw SchemaError("build bb needs --directions <file>");
        }
        auto dirs = load_directions_file(directions_path, cfg.tol);
        model = build_bb_model(QubitPreparation{dirs}, QubitMeasurement{dirs}, mode);
    } else if (builder == "classical") {
        model = build_classical_control(k);
    } else {
        throw UnknownBuilder("unknown builder '" + builder + "' (expected maudlin, bb or classical)");
    }
    if (cfg.float_mode() && model->mode() == Scalar::Mode::Exact) {
        model = model->to_float();
    }
    emit(canonical_dump(model_file_to_json(model->experiment(), &*model)), out_path);
    return 0;
}

int cmd_check(const std::string &path, const RunConfig &cfg) {
    ModelFile f = load(path, cfg);
    bool all_ok = true;

    ValidationReport vr = validate(f.experiment, cfg.tol);
    NoSignallingReport ns = check_no_signalling(f.experiment, cfg.tol);
    all_ok = all_ok && vr.ok() && ns.to_past && ns.to_future;

    std::optional<ModelValidationReport> mv;
    std::optional<ReproducesResult> rr;
    if (f.model) {
        mv = validate_model(*f.model, cfg.tol);
        rr = reproduces(*f.model, cfg.tol);
        all_ok = all_ok && mv->ok() && rr->ok;
    }

    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["experiment"] = f.experiment.name();
        doc["validate"] = vr.ok() ? "ok" : vr.summary();
        doc["no_signalling"] = {{"to_past", ns.to_past}, {"to_future", ns.to_future}};
        if (ns.past_witness) {
            doc["no_signalling"]["past_witness"] = {{"b", ns.past_witness->b},
                                                    {"y", ns.past_witness->y},
                                                    {"x1", ns.past_witness->x1},
                                                    {"x2", ns.past_witness->x2}};
        }
        if (ns.future_witness) {
            doc["no_signalling"]["future_witness"] = {{"a", ns.future_witness->a},
                                                      {"x", ns.future_witness->x},
                                                      {"y1", ns.future_witness->y1},
                                                      {"y2", ns.future_witness->y2}};
        }
        if (mv) {
            doc["model_tables"] = mv->ok() ? "ok" : mv->summary();
            doc["reproduces"] = rr->ok;
            if (!rr->ok) {
                doc["reproduces_failure"] = rr->first_failure->str();
            }
        }
        doc["ok"] = all_ok;
        std::cout << canonical_dump(doc);
    } else {
        std::cout << "experiment '" << f.experiment.name() << "': "
                  << (vr.ok() ? "table valid" : "INVALID\n" + vr.summary()) << "\n";
        std::cout << "no-signalling: to_past=" << (ns.to_past ? "yes" : "NO")
                  << " to_future=" << (ns.to_future ? "yes" : "NO") << "\n";
        if (ns.past_witness) {
            std::cout << "  past witness: p(b=" << ns.past_witness->b << "|y=" << ns.past_witness->y
                      << ") differs between x=" << ns.past_witness->x1 << " and x=" << ns.past_witness->x2
                      << "\n";
        }
        if (mv) {
            std::cout << "model tables: " << (mv->ok() ? "normalized" : "INVALID\n" + mv->summary()) << "\n";
            std::cout << "reproduces table: " << (rr->ok ? "yes" : "NO (" + rr->first_failure->str() + ")")
                      << "\n";
        }
        std::cout << (all_ok ? "all checks passed" : "checks FAILED") << "\n";
    }
    return all_ok ? 0 : 2;
}

int cmd_certify(const std::string &path, const std::string &kind, const std::string &settings,
                const std::string &partner_path, const std::string &bijection_spec, const std::string &out_path,
                const RunConfig &cfg) {
    ModelFile f = load(path, cfg);
    Certificate cert;
    if (kind == "time-symmetry") {
        cert = certify_time_symmetry_violation(require_model(f, path), cfg.cap, cfg.tol);
    } else if (kind == "lemma") {
        const OntModel &m1 = require_model(f, path);
        std::optional<ModelFile> partner;
        if (!partner_path.empty()) {
            partner = load(partner_path, cfg);
        }
        const OntModel &m2 = partner ? require_model(*partner, partner_path) : m1;
        if (!bijection_spec.empty()) {
            std::vector<std::pair<std::string, std::string>> pairs;
            for (const std::string &part : split(bijection_spec, ';')) {
                auto eq = part.find('=');
                if (eq == std::string::npos) {
                    throw ParseError("bad --bijection entry '" + part + "', expected src=dst");
                }
                pairs.emplace_back(part.substr(0, eq), part.substr(eq + 1));
            }
            Bijection fmap = Bijection::from_pairs(m1.lambda(), m2.lambda(), pairs);
            cert = verify_independence_lemma(m1, m2, fmap, cfg.tol);
        } else {
            auto found = search_time_reverse_bijection(m1, m2, cfg.cap, cfg.tol);
            if (found.empty()) {
                throw PreconditionFailed("no ontological time-reverse bijection exists between the models");
            }
            cert = verify_independence_lemma(m1, m2, found.front(), cfg.tol);
        }
    } else if (kind == "noncontextuality") {
        cert = check_preparation_noncontextuality(require_model(f, path), cfg.tol);
    } else if (kind == "chsh") {
        if (settings.empty()) {
            throw ParseError("certify --kind chsh needs --settings x0,x1,y0,y1");
        }
        auto parts = split(settings, ',');
        if (parts.size() != 4) {
            throw ParseError("--settings needs exactly four labels x0,x1,y0,y1");
        }
        cert = chsh_certificate(f.experiment, parts[0], parts[1], parts[2], parts[3], cfg.tol);
    } else {
        throw ParseError("unknown --kind '" + kind + "' (expected time-symmetry, lemma, noncontextuality, chsh)");
    }
    if (kind == "chsh" && cfg.format == "text") {
        std::cout << cert.scalar("chsh")->str() << "\n";
        if (!out_path.empty()) {
            write_file(out_path, certificate_dump(cert));
        }
    } else {
        print_certificate(cert, cfg, out_path);
    }
    return 0;
}

int cmd_reverse_search(const std::vector<std::string> &paths, bool search_labels, const RunConfig &cfg) {
    std::vector<ModelFile> files;
    files.reserve(paths.size());
    for (const auto &p : paths) {
        files.push_back(load(p, cfg));
    }
    nlohmann::json pairs = nlohmann::json::array();
    for (size_t i = 0; i < files.size(); ++i) {
        for (size_t j = i; j < files.size(); ++j) {
            const Experiment &e1 = files[i].experiment;
            const Experiment &e2 = files[j].experiment;
            nlohmann::json entry;
            entry["first"] = e1.name();
            entry["second"] = e2.name();
            bool operational = false;
            std::string detail;
            try {
                if (search_labels) {
                    auto witness = search_label_identifications(e1, e2, cfg.tol);
                    operational = witness.has_value();
                    if (!operational) {
                        detail = "no label identification makes the tables match";
                    }
                } else {
                    auto check = check_time_reverse_pair(e1, e2, cfg.tol);
                    operational = check.ok();
                    if (!operational) {
                        detail = check.mismatch->str();
                    }
                }
            } catch (const CardinalityMismatch &e) {
                detail = e.what();
            }
            entry["operational_time_reverses"] = operational;
            if (!detail.empty()) {
                entry["detail"] = detail;
            }
            if (operational && files[i].model && files[j].model) {
                auto found = search_time_reverse_bijection(*files[i].model, *files[j].model, cfg.cap, cfg.tol);
                nlohmann::json bijections = nlohmann::json::array();
                for (const auto &b : found) {
                    bijections.push_back(b.str());
                }
                entry["ontological_bijections"] = bijections;
            }
            pairs.push_back(std::move(entry));
        }
    }
    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["pairs"] = pairs;
        std::cout << canonical_dump(doc);
    } else {
        for (const auto &entry : pairs) {
            std::cout << entry["first"].get<std::string>() << " vs " << entry["second"].get<std::string>()
                      << ": ";
            if (entry["operational_time_reverses"].get<bool>()) {
                std::cout << "operational time reverses";
                if (entry.contains("ontological_bijections")) {
                    const auto &bs = entry["ontological_bijections"];
                    if (bs.empty()) {
                        std::cout << "; no ontological reverse (exhaustive)";
                    } else {
                        std::cout << "; ontological reverse bijections:";
                        for (const auto &b : bs) {
                            std::cout << " {" << b.get<std::string>() << "}";
                        }
                    }
                }
            } else {
                std::cout << "not time reverses";
                if (entry.contains("detail")) {
                    std::cout << " (" << entry["detail"].get<std::string>() << ")";
                }
            }
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"prepare-and-measure experiments, ontological models and their time reverses"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--mode", cfg.mode, "scalar mode")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tol", cfg.tol, "float-mode comparison tolerance")->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg.cap, "bijection search cap on |Lambda|")
        ->check(CLI::PositiveNumber)
        ->envname("ONTOSYMM_CAP");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto *build = app.add_subcommand("build", "emit a built-in experiment/model as canonical JSON");
    std::string builder, directions_path, out_path;
    size_t classical_k = 2;
    build->add_option("builder", builder, "maudlin | bb | classical")->required();
    build->add_option("--directions", directions_path, "directions file for bb");
    build->add_option("--k", classical_k, "symbol count for classical");
    build->add_option("-o,--out", out_path, "output file (default stdout)");

    auto *check = app.add_subcommand("check", "validate a model file");
    std::string check_path;
    check->add_option("file", check_path, "model JSON file")->required();

    auto *certify = app.add_subcommand("certify", "run a theorem checker and emit a certificate");
    std::string certify_path, kind, settings, partner_path, bijection_spec, certify_out;
    certify->add_option("file", certify_path, "model JSON file")->required();
    certify->add_option("--kind", kind, "time-symmetry | lemma | noncontextuality | chsh")->required();
    certify->add_option("--settings", settings, "x0,x1,y0,y1 labels for chsh");
    certify->add_option("--partner", partner_path, "partner model file for lemma (default: the model itself)");
    certify->add_option("--bijection", bijection_spec, "explicit map src=dst;src=dst for lemma");
    certify->add_option("-o,--out", certify_out, "also write the certificate JSON here");

    auto *reverse = app.add_subcommand("reverse-search", "find time-reverse partners in a collection");
    std::vector<std::string> reverse_paths;
    bool search_labels = false;
    reverse->add_option("files", reverse_paths, "model JSON files")->required()->expected(-1);
    reverse->add_flag("--search-labels", search_labels, "search all label bijections, not just positional");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (build->parsed()) {
            return cmd_build(builder, directions_path, classical_k, out_path, cfg);
        }
        if (check->parsed()) {
            return cmd_check(check_path, cfg);
        }
        if (certify->parsed()) {
            return cmd_certify(certify_path, kind, settings, partner_path, bijection_spec, certify_out, cfg);
        }
        if (reverse->parsed()) {
            return cmd_reverse_search(reverse_paths, search_labels, cfg);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
