// Copyright 2026 The graphclif Authors
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

#ifndef GRAPHCLIF_IO_H
#define GRAPHCLIF_IO_H

#include <string>

#include <json.hpp>

#include "graphclif/census.h"
#include "graphclif/classify.h"
#include "graphclif/construct_lc.h"
#include "graphclif/rm_codes.h"

namespace graphclif {

using Json = nlohmann::ordered_json;

/// Graph text in either form: graph6 (optionally with the >>graph6<< header) or a 1-based edge
/// list such as "1-2,2-3". An edge list may be prefixed by "n:" to fix the vertex count.
Graph parse_graph_text(const std::string &text);

/// {"n", "graph6", "edges"}.
Json graph_to_json(const Graph &g);
/// Accepts an object with "graph6" or "edges" (and optional "n"), or a plain string.
Graph graph_from_json(const Json &j);

/// List of Pauli strings.
Json stabilizer_to_json(const StabilizerGroup &s);
StabilizerGroup stabilizer_from_json(const Json &j);

/// Per qubit a 2x2 matrix of [re, im] pairs, row-major.
Json local_op_to_json(const LocalOp &u);
LocalOp local_op_from_json(const Json &j);

/// Catalog names per qubit.
Json clifford_op_to_json(const LocalCliffordOp &k);
LocalCliffordOp clifford_op_from_json(const Json &j);

Json instance_to_json(const LUInstance &inst);
/// Throws ParseError on a missing or malformed field.
LUInstance instance_from_json(const Json &j);

Json classification_to_json(const TheoremClassification &c);
Json partition_to_json(const VertexPartition &p);

/// Graph, s_prime and the construction record; the input of `verify`.
Json lc_result_to_json(const Graph &g, const StabilizerGroup &s_prime, const LCResult &r);

Json census_to_json(const CensusReport &r);
Json class_record_to_json(const ClassRecord &r);

/// Qubit bit mask as a list of 1-based indices.
Json mask_to_json(uint64_t mask);

/// Reads a whole file; throws ParseError if it cannot be opened or holds invalid JSON.
Json read_json_file(const std::string &path);

}  // namespace graphclif

#endif
