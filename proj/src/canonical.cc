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

#include "graphclif/canonical.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <unordered_set>

#include "graphclif/errors.h"
#include "graphclif/graph6.h"

namespace graphclif {

namespace {

using Lab = std::array<uint8_t, 64>;

constexpr int kMaxStoredAutomorphisms = 64;

/// Search state for one canonical labelling call. Positions are 0..n-1; `starts` has bit p set
/// iff a cell begins at position p.
class Canonizer {
  public:
    explicit Canonizer(const Graph &g) : n_(g.n), adj_(g.adj.data()) {
    }

    void run() {
        Lab lab;
        for (int i = 0; i < n_; i++) {
            lab[i] = static_cast<uint8_t>(i);
        }
        uint64_t starts = n_ ? 1 : 0;
        refine(lab, starts, starts);
        search(0, lab, starts);
    }

    const Lab &best_lab() const {
        return best_lab_;
    }
    const std::array<uint64_t, 64> &best_rows() const {
        return best_rows_;
    }
    int leaves() const {
        return leaves_;
    }

  private:
    int cell_end(uint64_t starts, int s) const {
        uint64_t after = starts & ~low_mask(s + 1);
        return after ? std::countr_zero(after) : n_;
    }

    void refine(Lab &lab, uint64_t &starts, uint64_t pending) const {
        const uint64_t discrete = low_mask(n_);
        while (pending && starts != discrete) {
            int s = std::countr_zero(pending);
            pending &= pending - 1;
            int e = cell_end(starts, s);
            uint64_t w = 0;
            for (int p = s; p < e; p++) {
                w |= uint64_t{1} << lab[p];
            }
            for (int cs = 0; cs < n_;) {
                int ce = cell_end(starts, cs);
                if (ce - cs > 1) {
                    split(lab, starts, pending, cs, ce, w);
                }
                cs = ce;
            }
        }
    }

    void split(Lab &lab, uint64_t &starts, uint64_t &pending, int cs, int ce, uint64_t w) const {
        uint8_t cnt[64];
        bool differ = false;
        for (int p = cs; p < ce; p++) {
            cnt[p] = static_cast<uint8_t>(std::popcount(adj_[lab[p]] & w));
            differ |= cnt[p] != cnt[cs];
        }
        if (!differ) {
            return;
        }
        for (int p = cs + 1; p < ce; p++) {
            uint8_t c = cnt[p];
            uint8_t v = lab[p];
            int q = p;
            while (q > cs && cnt[q - 1] > c) {
                cnt[q] = cnt[q - 1];
                lab[q] = lab[q - 1];
                q--;
            }
            cnt[q] = c;
            lab[q] = v;
        }
        for (int p = cs + 1; p < ce; p++) {
            if (cnt[p] != cnt[p - 1]) {
                starts |= uint64_t{1} << p;
            }
        }
        // Every fragment becomes a splitter; simpler than tracking which one may be skipped.
        for (int p = cs; p < ce; p++) {
            if ((starts >> p) & 1) {
                pending |= uint64_t{1} << p;
            }
        }
    }

    void search(int level, const Lab &lab, uint64_t starts) {
        if (starts == low_mask(n_)) {
            leaf(level, lab);
            return;
        }
        int s = std::countr_zero(~starts);
        s = s - 1;  // position before the first non-start is the start of a non-singleton cell
        int e = cell_end(starts, s);
        uint8_t cell[64];
        int size = e - s;
        for (int p = s; p < e; p++) {
            cell[p - s] = lab[p];
        }
        std::sort(cell, cell + size);

        uint64_t tried = 0;
        int orbit_auts = -1;
        uint8_t parent[64];
        for (int c = 0; c < size; c++) {
            int v = cell[c];
            if (tried) {
                if (orbit_auts != num_auts_) {
                    build_orbits(level, parent);
                    orbit_auts = num_auts_;
                }
                int root = find(parent, v);
                bool seen = false;
                for (uint64_t t = tried; t; t &= t - 1) {
                    if (find(parent, std::countr_zero(t)) == root) {
                        seen = true;
                        break;
                    }
                }
                if (seen) {
                    continue;
                }
            }
            tried |= uint64_t{1} << v;

            Lab child = lab;
            int at = s;
            while (child[at] != v) {
                at++;
            }
            std::swap(child[s], child[at]);
            uint64_t child_starts = starts | (uint64_t{1} << (s + 1));
            if (s + 1 >= n_) {
                child_starts &= low_mask(n_);
            }
            path_[level] = static_cast<uint8_t>(v);
            refine(child, child_starts, uint64_t{1} << s);
            search(level + 1, child, child_starts);
            if (jump_to_ >= 0) {
                if (jump_to_ < level) {
                    return;
                }
                jump_to_ = -1;
            }
        }
    }

    static int find(uint8_t *parent, int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    /// Orbits of the group generated by stored automorphisms fixing path_[0..level) pointwise.
    void build_orbits(int level, uint8_t *parent) const {
        for (int i = 0; i < n_; i++) {
            parent[i] = static_cast<uint8_t>(i);
        }
        for (int a = 0; a < num_auts_; a++) {
            const Lab &g = auts_[a];
            bool fixes = true;
            for (int k = 0; k < level && fixes; k++) {
                fixes = g[path_[k]] == path_[k];
            }
            if (!fixes) {
                continue;
            }
            for (int i = 0; i < n_; i++) {
                int x = find(parent, i);
                int y = find(parent, g[i]);
                if (x != y) {
                    parent[std::max(x, y)] = static_cast<uint8_t>(std::min(x, y));
                }
            }
        }
    }

    void leaf(int level, const Lab &lab) {
        leaves_++;
        uint8_t pos[64];
        for (int i = 0; i < n_; i++) {
            pos[lab[i]] = static_cast<uint8_t>(i);
        }
        std::array<uint64_t, 64> rows;
        for (int i = 0; i < n_; i++) {
            uint64_t row = 0;
            for (uint64_t r = adj_[lab[i]]; r; r &= r - 1) {
                row |= uint64_t{1} << pos[std::countr_zero(r)];
            }
            rows[i] = row;
        }
        if (!have_first_) {
            have_first_ = true;
            first_rows_ = best_rows_ = rows;
            first_lab_ = best_lab_ = lab;
            first_path_ = path_;
            first_depth_ = level;
            return;
        }
        if (std::equal(rows.begin(), rows.begin() + n_, first_rows_.begin())) {
            store_automorphism(first_lab_, lab);
            int d = 0;
            while (d < level && d < first_depth_ && path_[d] == first_path_[d]) {
                d++;
            }
            jump_to_ = d;
            return;
        }
        int cmp = 0;
        for (int i = 0; i < n_ && cmp == 0; i++) {
            if (rows[i] != best_rows_[i]) {
                cmp = rows[i] > best_rows_[i] ? 1 : -1;
            }
        }
        if (cmp == 0) {
            store_automorphism(best_lab_, lab);
        } else if (cmp > 0) {
            best_rows_ = rows;
            best_lab_ = lab;
        }
    }

    void store_automorphism(const Lab &from, const Lab &to) {
        if (num_auts_ >= kMaxStoredAutomorphisms) {
            return;
        }
        Lab &g = auts_[num_auts_++];
        for (int i = 0; i < n_; i++) {
            g[from[i]] = to[i];
        }
    }

    int n_;
    const uint64_t *adj_;
    Lab path_{};
    bool have_first_ = false;
    Lab first_lab_{};
    Lab first_path_{};
    int first_depth_ = 0;
    std::array<uint64_t, 64> first_rows_{};
    Lab best_lab_{};
    std::array<uint64_t, 64> best_rows_{};
    std::array<Lab, kMaxStoredAutomorphisms> auts_;
    int num_auts_ = 0;
    int jump_to_ = -1;
    int leaves_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph &g) {
    Canonizer c(g);
    c.run();
    CanonicalLabeling out;
    out.lab.assign(c.best_lab().begin(), c.best_lab().begin() + g.n);
    out.graph = Graph(g.n);
    for (int i = 0; i < g.n; i++) {
        out.graph.adj[i] = c.best_rows()[i];
    }
    out.leaves = c.leaves();
    return out;
}

Graph canonical_graph(const Graph &g) {
    return canonical_labeling(g).graph;
}

std::string canonical_form(const Graph &g) {
    return encode_graph6(canonical_graph(g));
}

uint64_t graph_code(const Graph &g) {
    if (g.n > kMaxCodeVertices) {
        throw CapabilityError("64-bit graph codes hold at most 11 vertices");
    }
    uint64_t code = 0;
    for (int j = 1; j < g.n; j++) {
        for (int i = 0; i < j; i++) {
            code = (code << 1) | ((g.adj[i] >> j) & 1);
        }
    }
    return code;
}

Graph graph_from_code(int n, uint64_t code) {
    Graph g(n);
    int bit = n * (n - 1) / 2;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++) {
            bit--;
            if ((code >> bit) & 1) {
                g.adj[i] |= uint64_t{1} << j;
                g.adj[j] |= uint64_t{1} << i;
            }
        }
    }
    return g;
}

uint64_t canonical_code(const Graph &g, int *last) {
    if (g.n > kMaxCodeVertices) {
        throw CapabilityError("64-bit graph codes hold at most 11 vertices");
    }
    Canonizer c(g);
    c.run();
    const auto &rows = c.best_rows();
    uint64_t code = 0;
    for (int j = 1; j < g.n; j++) {
        for (int i = 0; i < j; i++) {
            code = (code << 1) | ((rows[i] >> j) & 1);
        }
    }
    if (last && g.n > 0) {
        *last = c.best_lab()[g.n - 1];
    }
    return code;
}

int64_t orbit_cap_from_env() {
    const char *env = std::getenv("GRAPHCLIF_ORBIT_CAP");
    if (env) {
        char *end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return kDefaultOrbitCap;
}

std::vector<std::string> lc_orbit(const Graph &g, int64_t cap) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> queue;
    Graph start = canonical_graph(g);
    seen.insert(encode_graph6(start));
    queue.push_back(start);
    for (size_t head = 0; head < queue.size(); head++) {
        Graph h = queue[head];
        for (int v = 0; v < h.n; v++) {
            if (h.degree(v) < 2) {
                continue;
            }
            Graph c = canonical_graph(local_complement(h, v));
            if (seen.insert(encode_graph6(c)).second) {
                if (static_cast<int64_t>(seen.size()) > cap) {
                    throw ResourceError("local-complementation orbit exceeds the cap of " + std::to_string(cap) +
                                        " isomorphism classes");
                }
                queue.push_back(std::move(c));
            }
        }
    }
    std::vector<std::string> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string lc_class_key(const Graph &g, int64_t cap) {
    return lc_orbit(g, cap).front();
}

}  // namespace graphclif
