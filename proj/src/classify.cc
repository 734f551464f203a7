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

#include "graphclif/classify.h"

#include "graphclif/errors.h"

namespace graphclif {

std::string to_string(TheoremTag tag) {
    switch (tag) {
        case TheoremTag::kGHZ:
            return "GHZ";
        case TheoremTag::kMainTheorem:
            return "MainTheorem";
        case TheoremTag::kMSC:
            return "MSC";
        case TheoremTag::kDelta2BarMSC:
            return "Delta2BarMSC";
        case TheoremTag::kOpen:
            return "Open";
    }
    return "Open";
}

std::optional<TheoremTag> parse_theorem_tag(const std::string &name) {
    for (auto t : {TheoremTag::kGHZ, TheoremTag::kMainTheorem, TheoremTag::kMSC, TheoremTag::kDelta2BarMSC,
                   TheoremTag::kOpen}) {
        if (to_string(t) == name) {
            return t;
        }
    }
    return std::nullopt;
}

bool is_ghz_class(const Graph &g) {
    if (g.n <= 2) {
        return true;
    }
    for (int i = 0; i < g.n; i++) {
        uint64_t bi = uint64_t{1} << i;
        for (int j = i + 1; j < g.n; j++) {
            uint64_t bj = uint64_t{1} << j;
            uint64_t pair = bi | bj;
            // Elements supported in {i, j} come from generator subsets of {i, j}.
            bool found = (g.adj[i] & ~bj) == 0 || (g.adj[j] & ~bi) == 0 || ((g.adj[i] ^ g.adj[j]) & ~pair) == 0;
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

int distance_bound(int n, bool even) {
    int q = n / 6;
    if (even) {
        return 2 * q + 2;
    }
    switch (n % 6) {
        case 0:
            return 2 * q + 1;
        case 5:
            return 2 * q + 3;
        default:
            return 2 * q + 2;
    }
}

bool has_even_weights(const Graph &g) {
    for (int v = 0; v < g.n; v++) {
        if (g.degree(v) % 2 == 0) {
            return false;
        }
    }
    return true;
}

TheoremClassification classify_theorem(const Graph &g) {
    if (!g.is_connected()) {
        throw DisconnectedGraphError("classification requires a connected graph");
    }
    if (g.n > kMaxProfileQubits) {
        throw CapabilityError("classification needs the minimal-support analysis, limited to n <= 20");
    }
    TheoremClassification c;
    StabilizerGroup s = standard_generators(g);
    c.distance = distance(s);
    c.cycle3 = has_cycle3(g);
    c.cycle4 = has_cycle4(g);
    MinimalSubgroup m = minimal_subgroup(s);
    c.msc = msc_check(m).satisfied;
    c.s_equals_m = m.equals_full_group;
    c.ghz = is_ghz_class(g);
    BarGraph bar = bar_graph(g);
    c.bar_degenerate = bar.degenerate;
    if (!bar.degenerate) {
        c.bar_msc = msc_check(standard_generators(bar.graph)).satisfied;
    }
    if (c.ghz) {
        c.satisfied.push_back(TheoremTag::kGHZ);
    }
    if (!c.cycle3 && !c.cycle4) {
        c.satisfied.push_back(TheoremTag::kMainTheorem);
    }
    if (c.msc) {
        c.satisfied.push_back(TheoremTag::kMSC);
    }
    if (c.distance == 2 && c.bar_msc.value_or(false)) {
        c.satisfied.push_back(TheoremTag::kDelta2BarMSC);
    }
    c.tag = c.satisfied.empty() ? TheoremTag::kOpen : c.satisfied.front();
    return c;
}

}  // namespace graphclif
