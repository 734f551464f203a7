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

#ifndef GRAPHCLIF_CLASSIFY_H
#define GRAPHCLIF_CLASSIFY_H

#include <optional>
#include <string>
#include <vector>

#include "graphclif/graph.h"

namespace graphclif {

enum class TheoremTag { kGHZ, kMainTheorem, kMSC, kDelta2BarMSC, kOpen };

std::string to_string(TheoremTag tag);
/// Inverse of to_string; nullopt for unknown names.
std::optional<TheoremTag> parse_theorem_tag(const std::string &name);

struct TheoremClassification {
    TheoremTag tag = TheoremTag::kOpen;
    /// Every criterion that holds, in evaluation order. Empty only for Open.
    std::vector<TheoremTag> satisfied;
    int distance = 0;
    bool cycle3 = false;
    bool cycle4 = false;
    bool msc = false;
    bool s_equals_m = false;
    bool ghz = false;
    bool bar_degenerate = true;
    /// MSC of the bar graph; unset when the bar graph is degenerate.
    std::optional<bool> bar_msc;
};

/// True iff the graph state is LC-equivalent to a GHZ state (star graph), for connected g.
/// Exact test: every vertex pair is the support of a stabilizer element.
bool is_ghz_class(const Graph &g);

/// Throws DisconnectedGraphError for disconnected input and CapabilityError for n > 20.
TheoremClassification classify_theorem(const Graph &g);

/// Upper bound on the distance of an n-qubit graph state. `even` selects the bound for states whose
/// stabilizer elements all have even weight.
int distance_bound(int n, bool even = false);

/// Every stabilizer element has even weight, i.e. every vertex has odd degree.
bool has_even_weights(const Graph &g);

}  // namespace graphclif

#endif
