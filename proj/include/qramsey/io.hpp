// Copyright 2026 The qramsey Authors
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

// JSON forms of graphs, matrices, certificates and reports.
//
// Graph file: {"n": int, "generators": [{"re": [[...]], "im": [[...]]}, ...]}
// with the identity excluded. Objects use sorted keys and doubles are written
// in shortest round-trip form, so parse -> emit reproduces the bytes.

#pragma once

#include <string>

#include "json.hpp"
#include "qramsey/ramsey.hpp"

namespace qramsey {

using Json = nlohmann::json;

Json matrix_to_json(const ComplexMatrix& m);

/** "re" is required; "im" defaults to zero. Throws SchemaError. */
ComplexMatrix matrix_from_json(const Json& j);

Json graph_to_json(const OperatorSystem& v);

/**
 * Parses a graph file. Non-Hermitian generators are rejected with
 * NonHermitianInput unless `split_nonhermitian`, which replaces each such A
 * by (A+A^†)/2 and (A-A^†)/(2i). Block structure is re-detected.
 */
OperatorSystem graph_from_json(const Json& j, bool split_nonhermitian = false);

Json to_json(const AnticliqueCertificate& c);
Json to_json(const CliqueCertificate& c);
Json to_json(const NoAnticliqueProof& p);
Json to_json(const SweepReport& r);
Json to_json(const BoundRow& r);

/** Throws SchemaError when the file cannot be read or parsed. */
Json read_json_file(const std::string& path);

/** Pretty-printed with a trailing newline. */
std::string dump(const Json& j);

}  // namespace qramsey
