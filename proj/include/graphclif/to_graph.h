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

#ifndef GRAPHCLIF_TO_GRAPH_H
#define GRAPHCLIF_TO_GRAPH_H

#include "graphclif/clifford.h"
#include "graphclif/graph.h"

namespace graphclif {

struct GraphForm {
    Graph graph;
    /// C with C S C† equal to the graph-state stabilizer, phases included.
    LocalCliffordOp clifford;
};

/// Brings a stabilizer state into graph form by GF(2) elimination plus per-qubit H, S† and Z.
/// Throws InvalidGroupError for invalid input.
GraphForm stabilizer_to_graph(const StabilizerGroup &s);

}  // namespace graphclif

#endif
