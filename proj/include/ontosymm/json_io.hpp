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

#ifndef ONTOSYMM_JSON_IO_HPP
#define ONTOSYMM_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "ontosymm/quantum.hpp"
#include "ontosymm/theorems.hpp"

namespace ontosymm {

/// One model document: an experiment, optionally with an ontological model
/// over it.  The ont_model's "experiment" field must name the sibling
/// experiment.
struct ModelFile {
    Experiment experiment;
    std::optional<OntModel> model;
};

/// Exact scalars serialize as canonical strings ("1/4 + 0/1*sqrt3"), floats
/// as JSON numbers.
nlohmann::json scalar_to_json(const Scalar &s);
Scalar scalar_from_json(const nlohmann::json &v);

nlohmann::json experiment_to_json(const Experiment &e);
nlohmann::json model_file_to_json(const Experiment &e, const OntModel *model);
inline nlohmann::json model_file_to_json(const ModelFile &f) {
    return model_file_to_json(f.experiment, f.model ? &*f.model : nullptr);
}

ModelFile model_file_from_json(const nlohmann::json &doc);

/// Canonical serialization: sorted keys (nlohmann::json's natural object
/// order), two-space indent, trailing newline.  Byte-identical across runs.
std::string canonical_dump(const nlohmann::json &doc);

/// Reads and parses a model document; ParseError on malformed JSON,
/// SchemaError on structural problems.
ModelFile load_model_file(const std::string &path);

/// {"directions": [{"name": ..., "vector": [sx, sy, sz]}, ...]}
std::vector<NamedDirection> directions_from_json(const nlohmann::json &doc, double tol = kDefaultTolerance);
std::vector<NamedDirection> load_directions_file(const std::string &path, double tol = kDefaultTolerance);

/// Certificates keep the field order {kind, inputs, steps, scalars}; steps
/// keep {name, status, witness}.
nlohmann::ordered_json certificate_to_json(const Certificate &c);
std::string certificate_dump(const Certificate &c);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

}  // namespace ontosymm

#endif
