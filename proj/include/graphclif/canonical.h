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

#ifndef GRAPHCLIF_CANONICAL_H
#define GRAPHCLIF_CANONICAL_H

#include <cstdint>
#include <string>
#include <vector>

#include "graphclif/graph.h"

namespace graphclif {

struct CanonicalLabeling {
    /// lab[i] is the vertex of the input placed at canonical position i.
    std::vector<int> lab;
    /// The input relabelled by lab; equal for isomorphic inputs.
    Graph graph;
    /// Number of leaves of the search tree that were visited.
    int leaves = 0;
};

/// Partition refinement with individualisation and automorphism pruning.
CanonicalLabeling canonical_labeling(const Graph &g);
Graph canonical_graph(const Graph &g);
/// graph6 string of the canonical graph. Equal keys iff the graphs are isomorphic.
std::string canonical_form(const Graph &g);

/// Largest vertex count for which a graph fits into a 64-bit code.
inline constexpr int kMaxCodeVertices = 11;

/// Upper triangle in graph6 bit order, first bit most significant. Numeric order matches
/// lexicographic order of the graph6 strings for a fixed n.
uint64_t graph_code(const Graph &g);
Graph graph_from_code(int n, uint64_t code);
/// graph_code(canonical_graph(g)) without building intermediate objects. n <= 11.
/// `last`, if given, receives the input vertex placed at the final canonical position.
uint64_t canonical_code(const Graph &g, int *last = nullptr);

/// Default bound on the number of isomorphism classes visited by an orbit closure.
inline constexpr int64_t kDefaultOrbitCap = 10'000'000;
/// GRAPHCLIF_ORBIT_CAP if set to a positive integer, else kDefaultOrbitCap.
int64_t orbit_cap_from_env();

/// Canonical forms of every graph reachable by local complementations, sorted.
/// Throws ResourceError once more than `cap` classes are reached.
std::vector<std::string> lc_orbit(const Graph &g, int64_t cap = orbit_cap_from_env());
/// Minimum canonical form over the local-complementation orbit.
std::string lc_class_key(const Graph &g, int64_t cap = orbit_cap_from_env());

}  // namespace graphclif

#endif
