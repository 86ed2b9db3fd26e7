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

#include "ontosymm/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ontosymm {

using nlohmann::json;

nlohmann::json scalar_to_json(const Scalar &s) {
    if (s.is_exact()) {
        return s.str();
    }
    return s.float_value();
}

Scalar scalar_from_json(const json &v) {
    if (v.is_string()) {
        return Scalar::parse(v.get<std::string>());
    }
    if (v.is_number()) {
        return Scalar::of_double(v.get<double>());
    }
    throw SchemaError("scalar must be a string or a number, got " + v.dump());
}

namespace {

const json &require(const json &obj, const char *key, const char *context) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(std::string(context) + " is missing field '" + key + "'");
    }
    return *it;
}

std::vector<std::string> string_list(const json &v, const char *context) {
    if (!v.is_array()) {
        throw SchemaError(std::string(context) + " must be an array of strings");
    }
    std::vector<std::string> out;
    for (const json &item : v) {
        if (!item.is_string()) {
            throw SchemaError(std::string(context) + " must contain only strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

json direction_map_to_json(const Experiment::DirectionMap &map) {
    json obj = json::object();
    for (const auto &[label, dir] : map) {
        obj[label] = json::array({scalar_to_json(dir.x()), scalar_to_json(dir.y()), scalar_to_json(dir.z())});
    }
    return obj;
}

Experiment::DirectionMap direction_map_from_json(const json &obj, const char *context) {
    if (!obj.is_object()) {
        throw SchemaError(std::string(context) + " must be an object of label -> [x, y, z]");
    }
    Experiment::DirectionMap map;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const json &vec = it.value();
        if (!vec.is_array() || vec.size() != 3) {
            throw SchemaError(std::string(context) + "['" + it.key() + "'] must be a 3-vector");
        }
        map.emplace_back(it.key(),
                         Direction(scalar_from_json(vec[0]), scalar_from_json(vec[1]), scalar_from_json(vec[2])));
    }
    return map;
}

std::string field_string(const json &cell, const char *key, const char *context) {
    const json &v = require(cell, key, context);
    if (!v.is_string()) {
        throw SchemaError(std::string(context) + " field '" + key + "' must be a string");
    }
    return v.get<std::string>();
}

}  // namespace

json experiment_to_json(const Experiment &e) {
    json obj;
    obj["name"] = e.name();
    obj["omega_a"] = e.omega_a().labels();
    obj["omega_b"] = e.omega_b().labels();
    obj["omega_x"] = e.omega_x().labels();
    obj["omega_y"] = e.omega_y().labels();
    json table = json::array();
    for (size_t ia = 0; ia < e.omega_a().size(); ++ia) {
        for (size_t ib = 0; ib < e.omega_b().size(); ++ib) {
            for (size_t ix = 0; ix < e.omega_x().size(); ++ix) {
                for (size_t iy = 0; iy < e.omega_y().size(); ++iy) {
                    json cell;
                    cell["a"] = e.omega_a().label(ia);
                    cell["b"] = e.omega_b().label(ib);
                    cell["x"] = e.omega_x().label(ix);
                    cell["y"] = e.omega_y().label(iy);
                    cell["p"] = scalar_to_json(e.p(ia, ib, ix, iy));
                    table.push_back(std::move(cell));
                }
            }
        }
    }
    obj["table"] = std::move(table);
    if (e.x_directions()) {
        obj["x_directions"] = direction_map_to_json(*e.x_directions());
    }
    if (e.y_directions()) {
        obj["y_directions"] = direction_map_to_json(*e.y_directions());
    }
    return obj;
}

json model_file_to_json(const Experiment &e, const OntModel *model) {
    json doc;
    doc["experiment"] = experiment_to_json(e);
    if (model) {
        json m;
        m["experiment"] = e.name();
        m["lambda"] = model->lambda().labels();
        json prep_out = json::array();
        for (size_t ia = 0; ia < model->na(); ++ia) {
            for (size_t ix = 0; ix < model->nx(); ++ix) {
                json cell;
                cell["a"] = e.omega_a().label(ia);
                cell["x"] = e.omega_x().label(ix);
                cell["p"] = scalar_to_json(model->prep_out(ia, ix));
                prep_out.push_back(std::move(cell));
            }
        }
        m["prep_out"] = std::move(prep_out);
        json prep_ontic = json::array();
        for (size_t il = 0; il < model->nl(); ++il) {
            for (size_t ia = 0; ia < model->na(); ++ia) {
                for (size_t ix = 0; ix < model->nx(); ++ix) {
                    json cell;
                    cell["lambda"] = model->lambda().label(il);
                    cell["a"] = e.omega_a().label(ia);
                    cell["x"] = e.omega_x().label(ix);
                    cell["p"] = scalar_to_json(model->prep_ontic(il, ia, ix));
                    prep_ontic.push_back(std::move(cell));
                }
            }
        }
        m["prep_ontic"] = std::move(prep_ontic);
        json meas = json::array();
        for (size_t ib = 0; ib < model->nb(); ++ib) {
            for (size_t il = 0; il < model->nl(); ++il) {
                for (size_t iy = 0; iy < model->ny(); ++iy) {
                    json cell;
                    cell["b"] = e.omega_b().label(ib);
                    cell["lambda"] = model->lambda().label(il);
                    cell["y"] = e.omega_y().label(iy);
                    cell["p"] = scalar_to_json(model->meas(ib, il, iy));
                    meas.push_back(std::move(cell));
                }
            }
        }
        m["meas"] = std::move(meas);
        doc["ont_model"] = std::move(m);
    }
    return doc;
}

ModelFile model_file_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw SchemaError("model file must be a JSON object");
    }
    const json &ej = require(doc, "experiment", "model file");
    LabelSet omega_a(string_list(require(ej, "omega_a", "experiment"), "omega_a"));
    LabelSet omega_b(string_list(require(ej, "omega_b", "experiment"), "omega_b"));
    LabelSet omega_x(string_list(require(ej, "omega_x", "experiment"), "omega_x"));
    LabelSet omega_y(string_list(require(ej, "omega_y", "experiment"), "omega_y"));
    std::string name = field_string(ej, "name", "experiment");

    const json &table = require(ej, "table", "experiment");
    if (!table.is_array()) {
        throw SchemaError("experiment table must be an array of cells");
    }
    std::vector<TableCell> cells;
    cells.reserve(table.size());
    for (const json &cj : table) {
        cells.push_back({field_string(cj, "a", "table cell"), field_string(cj, "b", "table cell"),
                         field_string(cj, "x", "table cell"), field_string(cj, "y", "table cell"),
                         scalar_from_json(require(cj, "p", "table cell"))});
    }
    std::optional<Experiment::DirectionMap> x_dirs, y_dirs;
    if (auto it = ej.find("x_directions"); it != ej.end()) {
        x_dirs = direction_map_from_json(*it, "x_directions");
    }
    if (auto it = ej.find("y_directions"); it != ej.end()) {
        y_dirs = direction_map_from_json(*it, "y_directions");
    }
    Experiment experiment(name, omega_a, omega_b, omega_x, omega_y, cells, std::move(x_dirs), std::move(y_dirs));

    std::optional<OntModel> model;
    if (auto it = doc.find("ont_model"); it != doc.end()) {
        const json &mj = *it;
        std::string ref = field_string(mj, "experiment", "ont_model");
        if (ref != experiment.name()) {
            throw SchemaError("ont_model references experiment '" + ref + "' but the file holds '" +
                              experiment.name() + "'");
        }
        OnticSpace lambda(string_list(require(mj, "lambda", "ont_model"), "lambda"));

        std::vector<PrepOutCell> prep_out;
        for (const json &cj : require(mj, "prep_out", "ont_model")) {
            prep_out.push_back({field_string(cj, "a", "prep_out cell"), field_string(cj, "x", "prep_out cell"),
                                scalar_from_json(require(cj, "p", "prep_out cell"))});
        }
        std::vector<PrepOnticCell> prep_ontic;
        for (const json &cj : require(mj, "prep_ontic", "ont_model")) {
            prep_ontic.push_back({field_string(cj, "lambda", "prep_ontic cell"),
                                  field_string(cj, "a", "prep_ontic cell"), field_string(cj, "x", "prep_ontic cell"),
                                  scalar_from_json(require(cj, "p", "prep_ontic cell"))});
        }
        std::vector<MeasCell> meas;
        for (const json &cj : require(mj, "meas", "ont_model")) {
            meas.push_back({field_string(cj, "b", "meas cell"), field_string(cj, "lambda", "meas cell"),
                            field_string(cj, "y", "meas cell"), scalar_from_json(require(cj, "p", "meas cell"))});
        }
        model.emplace(experiment, lambda, prep_out, prep_ontic, meas);
    }
    return ModelFile{std::move(experiment), std::move(model)};
}

std::string canonical_dump(const json &doc) {
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write '" + path + "'");
    }
    out << content;
}

ModelFile load_model_file(const std::string &path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error &e) {
        throw ParseError("JSON parse error in '" + path + "': " + e.what());
    }
    return model_file_from_json(doc);
}

std::vector<NamedDirection> directions_from_json(const json &doc, double tol) {
    const json &list = require(doc, "directions", "directions file");
    if (!list.is_array() || list.empty()) {
        throw SchemaError("directions file needs a nonempty 'directions' array");
    }
    std::vector<NamedDirection> out;
    for (const json &dj : list) {
        std::string name = field_string(dj, "name", "direction");
        const json &vec = require(dj, "vector", "direction");
        if (!vec.is_array() || vec.size() != 3) {
            throw SchemaError("direction '" + name + "' needs a 3-element vector");
        }
        out.push_back({std::move(name), Direction(scalar_from_json(vec[0]), scalar_from_json(vec[1]),
                                                  scalar_from_json(vec[2]), tol)});
    }
    return out;
}

std::vector<NamedDirection> load_directions_file(const std::string &path, double tol) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error &e) {
        throw ParseError("JSON parse error in '" + path + "': " + e.what());
    }
    return directions_from_json(doc, tol);
}

nlohmann::ordered_json certificate_to_json(const Certificate &c) {
    nlohmann::ordered_json doc;
    doc["kind"] = c.kind;
    doc["inputs"] = c.inputs;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const CertStep &s : c.steps) {
        nlohmann::ordered_json step;
        step["name"] = s.name;
        step["status"] = s.passed ? "pass" : "fail";
        if (!s.witness.empty()) {
            step["witness"] = s.witness;
        }
        steps.push_back(std::move(step));
    }
    doc["steps"] = std::move(steps);
    nlohmann::ordered_json scalars = nlohmann::ordered_json::object();
    for (const auto &[key, value] : c.scalars) {
        scalars[key] = value.is_exact() ? nlohmann::ordered_json(value.str())
                                        : nlohmann::ordered_json(value.float_value());
    }
    doc["scalars"] = std::move(scalars);
    return doc;
}

std::string certificate_dump(const Certificate &c) {
    return certificate_to_json(c).dump(2) + "\n";
}

}  // namespace ontosymm
