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

#include "graphclif/census.h"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "graphclif/errors.h"
#include "graphclif/graph6.h"
#include "graphclif/stabilizer.h"

namespace graphclif {

namespace {

constexpr int64_t kConnectedCounts[] = {1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571, 1006700565};
constexpr int64_t kAllCounts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168, 1018997864};
constexpr uint64_t kEmptySlot = ~uint64_t{0};

int64_t memory_budget() {
    const char *env = std::getenv("GRAPHCLIF_MEMORY_BUDGET_MB");
    if (env) {
        long long v = std::atoll(env);
        if (v > 0) {
            return v * (int64_t{1} << 20);
        }
    }
    return int64_t{4} << 30;
}

int clamp_jobs(int jobs) {
    return std::max(1, jobs);
}

/// Removes vertex v of g into out (n-1 vertices, order of the rest kept).
void delete_into(const Graph &g, int v, Graph &out) {
    uint64_t low = low_mask(v);
    int k = 0;
    for (int i = 0; i < g.n; i++) {
        if (i == v) {
            continue;
        }
        uint64_t row = g.adj[i];
        out.adj[k++] = (row & low) | ((row >> 1) & ~low);
    }
}

bool connected_rows(const Graph &g) {
    if (g.n == 0) {
        return true;
    }
    uint64_t seen = 1;
    uint64_t frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t f = frontier; f; f &= f - 1) {
            next |= g.adj[std::countr_zero(f)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

/// Children of one canonical parent accepted by the canonical-deletion test, deduplicated.
void augment(int k, uint64_t parent, bool connected_only, Graph &child, Graph &scratch,
             std::vector<uint64_t> &out) {
    Graph p = graph_from_code(k - 1, parent);
    int v = k - 1;
    size_t first = out.size();
    for (uint64_t nb = 0; nb < (uint64_t{1} << (k - 1)); nb++) {
        for (int i = 0; i < k - 1; i++) {
            child.adj[i] = p.adj[i] | (((nb >> i) & 1) << v);
        }
        child.adj[v] = nb;
        if (connected_only && !connected_rows(child)) {
            continue;
        }
        int w = 0;
        uint64_t code = canonical_code(child, &w);
        if (w != v) {
            if (child.degree(w) != child.degree(v)) {
                continue;
            }
            delete_into(child, w, scratch);
            if (canonical_code(scratch) != parent) {
                continue;
            }
        }
        out.push_back(code);
    }
    std::sort(out.begin() + first, out.end());
    out.erase(std::unique(out.begin() + first, out.end()), out.end());
}

/// Insert-only open-addressing set of codes shared between threads.
class CodeSet {
  public:
    explicit CodeSet(int64_t expected) {
        size_t cap = 64;
        while (cap < static_cast<size_t>(expected) * 2) {
            cap <<= 1;
        }
        if (static_cast<int64_t>(cap * sizeof(uint64_t)) > memory_budget()) {
            throw ResourceError("census table of " + std::to_string(cap * sizeof(uint64_t) >> 20) +
                                " MiB exceeds the memory budget (GRAPHCLIF_MEMORY_BUDGET_MB)");
        }
        slots_ = std::vector<std::atomic<uint64_t>>(cap);
        for (auto &s : slots_) {
            s.store(kEmptySlot, std::memory_order_relaxed);
        }
        mask_ = cap - 1;
    }

    bool contains(uint64_t code) const {
        for (size_t i = hash(code);; i = (i + 1) & mask_) {
            uint64_t cur = slots_[i].load(std::memory_order_acquire);
            if (cur == code) {
                return true;
            }
            if (cur == kEmptySlot) {
                return false;
            }
        }
    }

    void insert(uint64_t code) {
        for (size_t i = hash(code);; i = (i + 1) & mask_) {
            uint64_t cur = slots_[i].load(std::memory_order_acquire);
            if (cur == code) {
                return;
            }
            if (cur == kEmptySlot) {
                if (slots_[i].compare_exchange_strong(cur, code, std::memory_order_acq_rel)) {
                    return;
                }
                if (cur == code) {
                    return;
                }
            }
        }
    }

  private:
    size_t hash(uint64_t code) const {
        return static_cast<size_t>((code * 0x9E3779B97F4A7C15ull) >> 17) & mask_;
    }

    std::vector<std::atomic<uint64_t>> slots_;
    size_t mask_ = 0;
};

struct OrbitResult {
    std::vector<uint64_t> members;
    bool capped = false;
    bool any_girth5 = false;
    bool any_bar_msc = false;
};

class BarMemo {
  public:
    bool bar_msc(const Graph &g) {
        BarGraph bar = bar_graph(g);
        if (bar.degenerate) {
            return false;
        }
        uint64_t key = (static_cast<uint64_t>(bar.graph.n) << 58) | canonical_code(bar.graph);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            return it->second;
        }
        bool msc = msc_check(standard_generators(bar.graph)).satisfied;
        memo_.emplace(key, msc);
        return msc;
    }

  private:
    std::unordered_map<uint64_t, bool> memo_;
};

OrbitResult close_orbit(int n, uint64_t start, int delta, int64_t cap, BarMemo &memo) {
    OrbitResult r;
    std::unordered_set<uint64_t> seen{start};
    r.members.push_back(start);
    Graph lc(n);
    for (size_t head = 0; head < r.members.size(); head++) {
        Graph h = graph_from_code(n, r.members[head]);
        if (!r.any_girth5 && !has_cycle3(h) && !has_cycle4(h)) {
            r.any_girth5 = true;
        }
        if (delta == 2 && !r.any_bar_msc && memo.bar_msc(h)) {
            r.any_bar_msc = true;
        }
        if (r.capped) {
            continue;
        }
        for (int v = 0; v < n; v++) {
            if (h.degree(v) < 2) {
                continue;
            }
            uint64_t nb = h.adj[v];
            for (int i = 0; i < n; i++) {
                lc.adj[i] = h.adj[i];
                if ((nb >> i) & 1) {
                    lc.adj[i] ^= nb & ~(uint64_t{1} << i);
                }
            }
            uint64_t c = canonical_code(lc);
            if (seen.insert(c).second) {
                r.members.push_back(c);
                if (static_cast<int64_t>(r.members.size()) > cap) {
                    r.capped = true;
                    break;
                }
            }
        }
    }
    return r;
}

TheoremTag class_tag(bool ghz, bool girth5, bool msc, bool delta2_bar) {
    if (ghz) {
        return TheoremTag::kGHZ;
    }
    if (girth5) {
        return TheoremTag::kMainTheorem;
    }
    if (msc) {
        return TheoremTag::kMSC;
    }
    if (delta2_bar) {
        return TheoremTag::kDelta2BarMSC;
    }
    return TheoremTag::kOpen;
}

bool passes_filters(const ClassRecord &r, const CensusConfig &config) {
    if (config.min_distance && r.delta < *config.min_distance) {
        return false;
    }
    if (config.max_distance && r.delta > *config.max_distance) {
        return false;
    }
    if (config.msc && r.msc != *config.msc) {
        return false;
    }
    return true;
}

/// Sorts, drops duplicate keys, tallies totals and applies the record filters.
CensusReport finish(int n, std::vector<ClassRecord> records, int64_t graphs, int64_t skipped,
                    const CensusConfig &config) {
    std::sort(records.begin(), records.end(),
              [](const ClassRecord &a, const ClassRecord &b) { return a.key < b.key; });
    records.erase(std::unique(records.begin(), records.end(),
                              [](const ClassRecord &a, const ClassRecord &b) { return a.key == b.key; }),
                  records.end());
    CensusReport report;
    report.n = n;
    report.graphs = graphs;
    report.skipped_disconnected = skipped;
    report.class_count = static_cast<int64_t>(records.size());
    for (const auto &r : records) {
        report.by_delta[r.delta]++;
        report.by_tag[to_string(r.tag)]++;
        report.beyond_msc += r.delta > 2 && !r.msc;
        report.msc_s_ne_m += r.msc && !r.s_eq_m;
        if (passes_filters(r, config)) {
            report.classes.push_back(r);
        }
    }
    return report;
}

void check_stream(const std::vector<Graph> &graphs, int n) {
    if (n < 2 || n > kMaxCodeVertices) {
        throw DimensionError("census vertex count must lie in [2, 11]");
    }
    for (const auto &g : graphs) {
        if (g.n != n) {
            throw DimensionError("census input has a graph on " + std::to_string(g.n) + " vertices, expected " +
                                 std::to_string(n));
        }
    }
}

/// Classification over graph codes of connected graphs; `canonical` says the codes are canonical already.
CensusReport classify_codes(int n, const std::vector<uint64_t> &codes, bool canonical, const CensusConfig &config) {
    int jobs = clamp_jobs(config.jobs);
    CodeSet done(kConnectedCounts[n]);
    std::vector<std::vector<ClassRecord>> parts(jobs);
#pragma omp parallel num_threads(jobs)
    {
        auto &out = parts[omp_get_thread_num()];
        BarMemo memo;
#pragma omp for schedule(dynamic, 64)
        for (size_t i = 0; i < codes.size(); i++) {
            uint64_t code = codes[i];
            Graph g = graph_from_code(n, code);
            if (!canonical) {
                code = canonical_code(g);
            }
            if (done.contains(code)) {
                continue;
            }
            int delta = distance(standard_generators(g));
            OrbitResult orbit = close_orbit(n, code, delta, config.orbit_cap, memo);
            for (uint64_t m : orbit.members) {
                done.insert(m);
            }
            uint64_t rep_code = *std::min_element(orbit.members.begin(), orbit.members.end());
            Graph rep = graph_from_code(n, rep_code);
            MinimalSubgroup ms = minimal_subgroup(standard_generators(rep));
            ClassRecord r;
            r.key = encode_graph6(rep);
            r.rep_g6 = r.key;
            r.delta = delta;
            r.msc = msc_check(ms).satisfied;
            r.s_eq_m = ms.equals_full_group;
            r.tag = class_tag(is_ghz_class(rep), orbit.any_girth5, r.msc, delta == 2 && orbit.any_bar_msc);
            r.orbit_size = static_cast<int64_t>(orbit.members.size());
            r.orbit_capped = orbit.capped;
            out.push_back(std::move(r));
        }
    }
    std::vector<ClassRecord> all;
    for (auto &p : parts) {
        all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return finish(n, std::move(all), static_cast<int64_t>(codes.size()), 0, config);
}

}  // namespace

int64_t connected_graph_count(int n) {
    if (n < 0 || n > 11) {
        throw DimensionError("connected graph counts are tabulated for n <= 11");
    }
    return kConnectedCounts[n];
}

std::vector<uint64_t> generate_graph_codes(int n, bool connected_only, int jobs) {
    if (n < 1 || n > kMaxCodeVertices || (n == kMaxCodeVertices && !connected_only)) {
        throw DimensionError("graph generation supports 1 <= n <= 10, or n = 11 connected only");
    }
    int64_t final_count = connected_only ? kConnectedCounts[n] : kAllCounts[n];
    if (final_count * static_cast<int64_t>(sizeof(uint64_t)) > memory_budget()) {
        throw ResourceError("generating " + std::to_string(final_count) +
                            " graphs exceeds the memory budget (GRAPHCLIF_MEMORY_BUDGET_MB)");
    }
    std::vector<uint64_t> level{0};
    for (int k = 2; k <= n; k++) {
        bool last = k == n;
        std::vector<std::vector<uint64_t>> parts(clamp_jobs(jobs));
#pragma omp parallel num_threads(clamp_jobs(jobs))
        {
            auto &out = parts[omp_get_thread_num()];
            Graph child(k);
            Graph scratch(k - 1);
#pragma omp for schedule(dynamic, 16)
            for (size_t i = 0; i < level.size(); i++) {
                augment(k, level[i], last && connected_only, child, scratch, out);
            }
        }
        std::vector<uint64_t> next;
        for (auto &p : parts) {
            next.insert(next.end(), p.begin(), p.end());
            std::vector<uint64_t>().swap(p);
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> generate_connected_graphs(int n, int jobs) {
    if (n < 2 || n > kMaxCodeVertices) {
        throw DimensionError("connected graph generation supports 2 <= n <= 11");
    }
    std::vector<Graph> out;
    for (uint64_t c : generate_graph_codes(n, true, jobs)) {
        out.push_back(graph_from_code(n, c));
    }
    return out;
}

CensusReport classify_lc_classes(const std::vector<Graph> &graphs, const CensusConfig &config) {
    check_stream(graphs, config.n);
    std::vector<uint64_t> codes;
    codes.reserve(graphs.size());
    int64_t skipped = 0;
    for (const auto &g : graphs) {
        if (connected_rows(g)) {
            codes.push_back(graph_code(g));
        } else {
            skipped++;
        }
    }
    CensusReport r = classify_codes(config.n, codes, false, config);
    r.skipped_disconnected = skipped;
    return r;
}

CensusReport run_census(const CensusConfig &config) {
    if (config.n < 2 || config.n > kMaxCodeVertices) {
        throw DimensionError("census vertex count must lie in [2, 11]");
    }
    return classify_codes(config.n, generate_graph_codes(config.n, true, config.jobs), true, config);
}

CensusReport classify_lc_classes_serial(const std::vector<Graph> &graphs, const CensusConfig &config) {
    int n = config.n;
    check_stream(graphs, n);
    std::map<std::string, ClassRecord> classes;
    int64_t skipped = 0;
    for (const auto &g : graphs) {
        if (!g.is_connected()) {
            skipped++;
            continue;
        }
        std::string key = lc_class_key(g, config.orbit_cap);
        if (classes.count(key)) {
            continue;
        }
        std::vector<std::string> orbit = lc_orbit(g, config.orbit_cap);
        std::vector<bool> met(5, false);
        TheoremClassification rep_c;
        for (const auto &form : orbit) {
            Graph h = decode_graph6(form);
            TheoremClassification c = classify_theorem(h);
            for (auto t : c.satisfied) {
                met[static_cast<int>(t)] = true;
            }
            if (form == key) {
                rep_c = c;
            }
        }
        ClassRecord r;
        r.key = key;
        r.rep_g6 = key;
        r.delta = rep_c.distance;
        r.msc = rep_c.msc;
        r.s_eq_m = rep_c.s_equals_m;
        r.tag = TheoremTag::kOpen;
        for (int t = 0; t < 4; t++) {
            if (met[t]) {
                r.tag = static_cast<TheoremTag>(t);
                break;
            }
        }
        r.orbit_size = static_cast<int64_t>(orbit.size());
        classes.emplace(key, r);
    }
    std::vector<ClassRecord> records;
    for (auto &[k, r] : classes) {
        records.push_back(r);
    }
    return finish(n, std::move(records), static_cast<int64_t>(graphs.size()) - skipped, skipped, config);
}

std::vector<Graph> read_graph6_stream(std::istream &in) {
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        Graph g;
        try {
            g = decode_graph6(line);
        } catch (const ParseError &e) {
            ParseError err("line " + std::to_string(lineno) + ": " + e.what());
            err.position = e.position;
            throw err;
        }
        if (!out.empty() && g.n != out.front().n) {
            throw ParseError("line " + std::to_string(lineno) + ": graph has " + std::to_string(g.n) +
                                 " vertices, earlier lines have " + std::to_string(out.front().n),
                             0);
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::optional<ScanPredicate> parse_scan_predicate(const std::string &name) {
    for (auto p : {ScanPredicate::kBeyondMsc, ScanPredicate::kDistance, ScanPredicate::kOpen,
                   ScanPredicate::kMscNotFull, ScanPredicate::kBoundViolation}) {
        if (to_string(p) == name) {
            return p;
        }
    }
    return std::nullopt;
}

std::string to_string(ScanPredicate p) {
    switch (p) {
        case ScanPredicate::kBeyondMsc:
            return "beyond-msc";
        case ScanPredicate::kDistance:
            return "distance";
        case ScanPredicate::kOpen:
            return "open";
        case ScanPredicate::kMscNotFull:
            return "msc-s-ne-m";
        case ScanPredicate::kBoundViolation:
            return "bound-violation";
    }
    return "beyond-msc";
}

std::vector<ClassRecord> scan(const CensusReport &report, ScanPredicate predicate, int k) {
    std::vector<ClassRecord> out;
    for (const auto &r : report.classes) {
        bool keep = false;
        switch (predicate) {
            case ScanPredicate::kBeyondMsc:
                keep = r.delta > 2 && !r.msc;
                break;
            case ScanPredicate::kDistance:
                keep = r.delta == k;
                break;
            case ScanPredicate::kOpen:
                keep = r.tag == TheoremTag::kOpen;
                break;
            case ScanPredicate::kMscNotFull:
                keep = r.msc && !r.s_eq_m;
                break;
            case ScanPredicate::kBoundViolation:
                keep = r.delta > distance_bound(report.n, has_even_weights(decode_graph6(r.rep_g6)));
                break;
        }
        if (keep) {
            out.push_back(r);
        }
    }
    return out;
}

std::string summary_table(const CensusReport &report) {
    std::ostringstream os;
    os << "n = " << report.n << "   LC classes = " << report.class_count << "   graphs = " << report.graphs << "\n";
    os << "  delta   classes\n";
    for (const auto &[d, c] : report.by_delta) {
        os << "  " << d << std::string(d < 10 ? 7 : 6, ' ') << c << "\n";
    }
    os << "  tag            classes\n";
    for (const auto &[t, c] : report.by_tag) {
        os << "  " << t << std::string(t.size() < 15 ? 15 - t.size() : 1, ' ') << c << "\n";
    }
    os << "  delta > 2 without MSC: " << report.beyond_msc << "\n";
    os << "  MSC with S != M:       " << report.msc_s_ne_m << "\n";
    return os.str();
}

}  // namespace graphclif
