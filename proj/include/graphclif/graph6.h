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

#ifndef GRAPHCLIF_GRAPH6_H
#define GRAPHCLIF_GRAPH6_H

#include <string>
#include <string_view>

#include "graphclif/graph.h"

namespace graphclif {

/// graph6 encoding: N(n) followed by the upper triangle in column order, 6 bits per byte + 63.
std::string encode_graph6(const Graph &g);
/// Accepts an optional ">>graph6<<" header. Throws ParseError on malformed input.
Graph decode_graph6(std::string_view text);

}  // namespace graphclif

#endif
