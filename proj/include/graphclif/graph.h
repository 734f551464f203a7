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

#ifndef GRAPHCLIF_GRAPH_H
#define GRAPHCLIF_GRAPH_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphclif/stabilizer.h"

namespace graphclif {

/// Largest vertex count; adjacency rows are single machine words.
inline constexpr int kMaxVertices = 63;

/// Simple undirected graph. Bit j of adj[i] is set iff i and j are adjacent (0-based).
struct Graph {
    int n = 0;
    std::vector<uint64_t> adj;

    Graph() = default;
    explicit Graph(int n);

    void add_edge(int u, int v);
    void toggle_edge(int u, int v);
    bool has_edge(int u, int v) const {
        return (adj[u] >> v) & 1;
    }
    int degree(int v) const {
        return std::popcount(adj[v]);
    }
    int edge_count() const;
    int min_degree() const;
    uint64_t vertex_mask() const {
        return low_mask(n);
    }
    bool is_connected() const;
    /// Connected components as vertex masks, ordered by lowest vertex.
    std::vector<uint64_t> components() const;

    bool operator==(const Graph &other) const = default;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);

/// Parses "a-b,c-d,..." with 1-based vertices, ignoring whitespace.
/// The vertex count is the largest label unless `n` is given.
Graph parse_edge_list(std::string_view text, int n = 0);
std::string format_edge_list(const Graph &g);

/// Generator a is X on a and Z on each neighbour of a.
StabilizerGroup standard_generators(const Graph &g);

bool has_cycle3(const Graph &g);
bool has_cycle4(const Graph &g);

/// Vertex sets as masks.
struct VertexPartition {
    uint64_t v1 = 0;
    uint64_t v2 = 0;
    uint64_t v3 = 0;
    uint64_t v4 = 0;
};

/// Throws DisconnectedGraphError for disconnected input.
VertexPartition partition_vertices(const Graph &g);

struct BarGraph {
    Graph graph;
    /// vertices[i] is the original vertex kept at position i.
    std::vector<int> vertices;
    /// Fewer than two vertices remain.
    bool degenerate = false;
};

/// Deletes all degree-one vertices in one pass. With `iterated`, repeats until none remain.
BarGraph bar_graph(const Graph &g, bool iterated = false);

/// Complements the subgraph induced on the neighbourhood of v (0-based).
Graph local_complement(const Graph &g, int v);

/// Vertex i of g becomes vertex perm[i].
Graph permute(const Graph &g, const std::vector<int> &perm);

Graph induced_subgraph(const Graph &g, uint64_t mask);

/// Graph with vertex v removed; later vertices shift down by one.
Graph delete_vertex(const Graph &g, int v);

}  // namespace graphclif

#endif
