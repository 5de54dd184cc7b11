// Copyright 2026 The mramsey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of every artifact. Output is deterministic: fixed key order
// (nlohmann's sorted objects), shortest round-trip doubles.

#pragma once

#include <string>

#include "json.hpp"
#include "mramsey/decomposition.hpp"
#include "mramsey/ramsey.hpp"
#include "mramsey/ramsey_embedding.hpp"
#include "mramsey/ultrametric.hpp"

namespace mramsey {

using Json = nlohmann::json;

Json to_json(const Subspace &s);
Subspace subspace_from_json(const Json &j);

// {"k":1,"nodes":[{"id":0,"label":10.0,"children":[1,2]},...],"root":0}
Json to_json(const HstTree &tree);
// Takes the tree as written: no collapsing, no validation beyond structure.
HstTree tree_from_json(const Json &j);

Json to_json(const RamseyParams &p);
RamseyParams params_from_json(const Json &j);

Json to_json(const RamseyDecomposition &d);
Json to_json(const PartitionBundle &b);

// tree JSON + {"subspace","psi","params","per_node"}
Json to_json(const RamseyResult &r);
// tree JSON + {"core","ground","params","per_node"}
Json to_json(const RamseyEmbedding &e);

std::string dump(const Json &j);  // two-space indent, trailing newline
Json load_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace mramsey
