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

#include "graphclif/graph.h"

#include <algorithm>
#include <cctype>

#include "graphclif/errors.h"

namespace graphclif {

namespace {

void check_vertex(const Graph &g, int v) {
    if (v < 0 || v >= g.n) {
        throw DimensionError("vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(g.n));
    }
}

}  // namespace

Graph::Graph(int n) : n(n), adj(n, 0) {
    if (n < 0 || n > kMaxVertices) {
        throw DimensionError("vertex count " + std::to_string(n) + " outside [0, 63]");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) {
        throw DimensionError("self-loop at vertex " + std::to_string(u + 1));
    }
    adj[u] |= uint64_t{1} << v;
    adj[v] |= uint64_t{1} << u;
}

void Graph::toggle_edge(int u, int v) {
    adj[u] ^= uint64_t{1} << v;
    adj[v] ^= uint64_t{1} << u;
}

int Graph::edge_count() const {
    int total = 0;
    for (uint64_t row : adj) {
        total += std::popcount(row);
    }
    return total / 2;
}

int Graph::min_degree() const {
    int best = n;
    for (uint64_t row : adj) {
        best = std::min(best, std::popcount(row));
    }
    return best;
}

std::vector<uint64_t> Graph::components() const {
    std::vector<uint64_t> out;
    uint64_t left = vertex_mask();
    while (left) {
        uint64_t comp = left & (~left + 1);
        uint64_t frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t f = frontier; f; f &= f - 1) {
                next |= adj[std::countr_zero(f)];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

bool Graph::is_connected() const {
    return n <= 1 || components().size() == 1;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; i++) {
        g.add_edge(i, i + 1);
    }
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw DimensionError("a cycle needs at least 3 vertices");
    }
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int n) {
    Graph g(n);
    for (int i = 1; i < n; i++) {
        g.add_edge(0, i);
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; i++) {
        g.adj[i] = low_mask(n) & ~(uint64_t{1} << i);
    }
    return g;
}

Graph parse_edge_list(std::string_view text, int n) {
    std::vector<std::pair<int, int>> edges;
    int max_label = 0;
    size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    };
    auto read_int = [&]() {
        skip_space();
        size_t start = pos;
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > kMaxVertices) {
                throw ParseError("vertex label too large", start);
            }
            pos++;
        }
        if (pos == start) {
            throw ParseError("expected a vertex label", pos);
        }
        if (value < 1) {
            throw ParseError("vertex labels are 1-based", start);
        }
        return static_cast<int>(value);
    };
    skip_space();
    while (pos < text.size()) {
        int a = read_int();
        skip_space();
        if (pos >= text.size() || text[pos] != '-') {
            throw ParseError("expected '-' between edge endpoints", pos);
        }
        pos++;
        int b = read_int();
        if (a == b) {
            throw ParseError("self-loop " + std::to_string(a) + "-" + std::to_string(b), pos);
        }
        edges.emplace_back(a - 1, b - 1);
        max_label = std::max({max_label, a, b});
        skip_space();
        if (pos < text.size()) {
            if (text[pos] != ',') {
                throw ParseError("expected ',' between edges", pos);
            }
            pos++;
            skip_space();
            if (pos >= text.size()) {
                throw ParseError("trailing ','", pos);
            }
        }
    }
    if (n == 0) {
        n = max_label;
    }
    if (n < 1) {
        throw ParseError("edge list is empty and no vertex count was given");
    }
    if (max_label > n) {
        throw ParseError("vertex label " + std::to_string(max_label) + " exceeds vertex count " + std::to_string(n));
    }
    Graph g(n);
    for (auto [a, b] : edges) {
        g.add_edge(a, b);
    }
    return g;
}

std::string format_edge_list(const Graph &g) {
    std::string out;
    for (int i = 0; i < g.n; i++) {
        for (uint64_t r = g.adj[i] >> (i + 1); r; r &= r - 1) {
            int j = i + 1 + std::countr_zero(r);
            if (!out.empty()) {
                out += ',';
            }
            out += std::to_string(i + 1) + "-" + std::to_string(j + 1);
        }
    }
    return out;
}

StabilizerGroup standard_generators(const Graph &g) {
    if (g.n < 1) {
        throw DimensionError("graph has no vertices");
    }
    StabilizerGroup s{g.n, {}};
    s.generators.reserve(g.n);
    for (int a = 0; a < g.n; a++) {
        s.generators.push_back(PauliOperator{g.n, uint64_t{1} << a, g.adj[a], 0});
    }
    return s;
}

bool has_cycle3(const Graph &g) {
    for (int u = 0; u < g.n; u++) {
        for (uint64_t r = g.adj[u] >> (u + 1); r; r &= r - 1) {
            int v = u + 1 + std::countr_zero(r);
            if (g.adj[u] & g.adj[v]) {
                return true;
            }
        }
    }
    return false;
}

bool has_cycle4(const Graph &g) {
    for (int u = 0; u < g.n; u++) {
        for (int v = u + 1; v < g.n; v++) {
            if (std::popcount(g.adj[u] & g.adj[v]) >= 2) {
                return true;
            }
        }
    }
    return false;
}

VertexPartition partition_vertices(const Graph &g) {
    if (!g.is_connected()) {
        throw DisconnectedGraphError("vertex partition requires a connected graph");
    }
    VertexPartition p;
    for (int v = 0; v < g.n; v++) {
        if (g.degree(v) == 1) {
            p.v1 |= uint64_t{1} << v;
        }
    }
    for (int v = 0; v < g.n; v++) {
        if (g.adj[v] & p.v1) {
            p.v2 |= uint64_t{1} << v;
        }
    }
    for (int v = 0; v < g.n; v++) {
        uint64_t bit = uint64_t{1} << v;
        if ((p.v1 | p.v2) & bit) {
            continue;
        }
        if (g.adj[v] && (g.adj[v] & ~p.v2) == 0) {
            p.v3 |= bit;
        } else {
            p.v4 |= bit;
        }
    }
    // K2: both endpoints are leaves and each other's neighbour. Keep the sets disjoint by
    // letting V1 win, so V2 only holds vertices of degree >= 2.
    p.v2 &= ~p.v1;
    return p;
}

BarGraph bar_graph(const Graph &g, bool iterated) {
    uint64_t keep = g.vertex_mask();
    while (true) {
        uint64_t leaves = 0;
        for (uint64_t r = keep; r; r &= r - 1) {
            int v = std::countr_zero(r);
            if (std::popcount(g.adj[v] & keep) == 1) {
                leaves |= uint64_t{1} << v;
            }
        }
        keep &= ~leaves;
        if (!iterated || leaves == 0) {
            break;
        }
    }
    BarGraph out;
    out.graph = induced_subgraph(g, keep);
    for (uint64_t r = keep; r; r &= r - 1) {
        out.vertices.push_back(std::countr_zero(r));
    }
    out.degenerate = out.graph.n < 2;
    return out;
}

Graph local_complement(const Graph &g, int v) {
    check_vertex(g, v);
    Graph h = g;
    uint64_t nb = g.adj[v];
    for (uint64_t r = nb; r; r &= r - 1) {
        int u = std::countr_zero(r);
        h.adj[u] ^= nb & ~(uint64_t{1} << u);
    }
    return h;
}

Graph permute(const Graph &g, const std::vector<int> &perm) {
    if (static_cast<int>(perm.size()) != g.n) {
        throw DimensionError("permutation length differs from vertex count");
    }
    Graph h(g.n);
    for (int i = 0; i < g.n; i++) {
        uint64_t row = 0;
        for (uint64_t r = g.adj[i]; r; r &= r - 1) {
            row |= uint64_t{1} << perm[std::countr_zero(r)];
        }
        h.adj[perm[i]] = row;
    }
    return h;
}

Graph induced_subgraph(const Graph &g, uint64_t mask) {
    std::vector<int> index(g.n, -1);
    int k = 0;
    for (uint64_t r = mask; r; r &= r - 1) {
        index[std::countr_zero(r)] = k++;
    }
    Graph h(k);
    for (uint64_t r = mask; r; r &= r - 1) {
        int v = std::countr_zero(r);
        for (uint64_t s = g.adj[v] & mask; s; s &= s - 1) {
            h.adj[index[v]] |= uint64_t{1} << index[std::countr_zero(s)];
        }
    }
    return h;
}

Graph delete_vertex(const Graph &g, int v) {
    check_vertex(g, v);
    return induced_subgraph(g, g.vertex_mask() & ~(uint64_t{1} << v));
}

}  // namespace graphclif
