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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "graphclif/canonical.h"
#include "graphclif/census.h"
#include "graphclif/errors.h"
#include "graphclif/graph6.h"
#include "graphclif/io.h"
#include "oracles.h"

using namespace graphclif;

namespace {

CensusConfig config(int n, int jobs = 1) {
    CensusConfig c;
    c.n = n;
    c.jobs = jobs;
    return c;
}

}  // namespace

TEST(Census, ConnectedGraphCounts) {
    EXPECT_EQ(generate_connected_graphs(3).size(), 2u);
    EXPECT_EQ(generate_connected_graphs(4).size(), 6u);
    for (int n = 1; n <= 8; n++) {
        EXPECT_EQ(static_cast<int64_t>(generate_graph_codes(n, true).size()), connected_graph_count(n)) << n;
    }
}

TEST(Census, GenerationMatchesBruteForce) {
    for (int n = 2; n <= 6; n++) {
        std::set<uint64_t> all;
        std::set<uint64_t> connected;
        int total = 1 << (n * (n - 1) / 2);
        for (int bits = 0; bits < total; bits++) {
            Graph g(n);
            int e = 0;
            for (int i = 0; i < n; i++) {
                for (int j = i + 1; j < n; j++, e++) {
                    if ((bits >> e) & 1) {
                        g.add_edge(i, j);
                    }
                }
            }
            uint64_t code = oracle::brute_canonical_code(g);
            all.insert(code);
            if (g.is_connected()) {
                connected.insert(code);
            }
        }
        auto brute_set = [](const std::vector<uint64_t> &codes, int n) {
            std::set<uint64_t> s;
            for (uint64_t c : codes) {
                s.insert(oracle::brute_canonical_code(graph_from_code(n, c)));
            }
            return s;
        };
        auto a = generate_graph_codes(n, false);
        auto c = generate_graph_codes(n, true);
        EXPECT_EQ(a.size(), all.size()) << n;
        EXPECT_EQ(c.size(), connected.size()) << n;
        EXPECT_EQ(brute_set(a, n), all) << n;
        EXPECT_EQ(brute_set(c, n), connected) << n;
    }
}

TEST(Census, ClassCountsMatchBruteForce) {
    for (int n = 2; n <= 6; n++) {
        CensusReport r = run_census(config(n));
        EXPECT_EQ(r.class_count, oracle::brute_lc_class_count(n)) << n;
    }
    const int64_t expected[] = {1, 1, 2, 4, 11, 26, 101};
    for (int n = 2; n <= 8; n++) {
        EXPECT_EQ(run_census(config(n)).class_count, expected[n - 2]) << n;
    }
}

TEST(Census, FastPathMatchesSerialReference) {
    for (int n = 3; n <= 7; n++) {
        std::vector<Graph> graphs = generate_connected_graphs(n);
        CensusConfig cfg = config(n);
        CensusReport fast = classify_lc_classes(graphs, cfg);
        CensusReport slow = classify_lc_classes_serial(graphs, cfg);
        EXPECT_EQ(census_to_json(fast).dump(), census_to_json(slow).dump()) << n;
        EXPECT_EQ(census_to_json(run_census(cfg)).dump(), census_to_json(fast).dump()) << n;
    }
}

TEST(Census, JobsDoNotChangeOutput) {
    CensusReport a = run_census(config(7, 1));
    CensusReport b = run_census(config(7, 2));
    EXPECT_EQ(census_to_json(a).dump(), census_to_json(b).dump());
    EXPECT_EQ(generate_graph_codes(8, true, 1), generate_graph_codes(8, true, 3));
}

TEST(Census, Totals) {
    CensusReport r = run_census(config(8));
    int64_t by_delta = 0;
    int64_t by_tag = 0;
    for (const auto &[d, c] : r.by_delta) {
        by_delta += c;
    }
    for (const auto &[t, c] : r.by_tag) {
        by_tag += c;
    }
    EXPECT_EQ(by_delta, r.class_count);
    EXPECT_EQ(by_tag, r.class_count);
    EXPECT_EQ(r.msc_s_ne_m, 2);
    EXPECT_EQ(r.graphs, connected_graph_count(8));
}

TEST(Census, MembersShareRecord) {
    // Spot check: every member of a class has the representative's key and invariants.
    CensusReport r = run_census(config(7));
    std::map<std::string, const ClassRecord *> by_key;
    for (const auto &c : r.classes) {
        by_key[c.key] = &c;
    }
    std::mt19937_64 rng(80);
    std::vector<Graph> graphs = generate_connected_graphs(7);
    for (int i = 0; i < 60; i++) {
        const Graph &g = graphs[rng() % graphs.size()];
        auto it = by_key.find(lc_class_key(g));
        ASSERT_NE(it, by_key.end());
        StabilizerGroup s = standard_generators(g);
        EXPECT_EQ(distance(s), it->second->delta);
        EXPECT_EQ(msc_check(s).satisfied, it->second->msc);
    }
}

TEST(Census, Graph6Ingestion) {
    std::stringstream in;
    in << "# comment\n"
       << encode_graph6(path_graph(4)) << "\n\n"
       << encode_graph6(star_graph(4)) << "\n"
       << encode_graph6(cycle_graph(4)) << "\n"
       << encode_graph6(parse_edge_list("1-2", 4)) << "\n"
       << encode_graph6(complete_graph(4)) << "\n";
    std::vector<Graph> graphs = read_graph6_stream(in);
    ASSERT_EQ(graphs.size(), 5u);
    CensusReport r = classify_lc_classes(graphs, config(4));
    EXPECT_EQ(r.class_count, 2);
    EXPECT_EQ(r.graphs, 4);
    EXPECT_EQ(r.skipped_disconnected, 1);

    std::stringstream bad("A_\nB?\n");
    EXPECT_THROW(read_graph6_stream(bad), ParseError);
    std::stringstream mixed("A_\nBw\n");
    EXPECT_THROW(read_graph6_stream(mixed), ParseError);
}

TEST(Census, Filters) {
    CensusReport all = run_census(config(7));
    CensusConfig cfg = config(7);
    cfg.min_distance = 3;
    CensusReport f = run_census(cfg);
    EXPECT_EQ(f.class_count, all.class_count);
    EXPECT_EQ(f.by_delta, all.by_delta);
    EXPECT_EQ(static_cast<int64_t>(f.classes.size()), all.by_delta[3]);
    for (const auto &c : f.classes) {
        EXPECT_GE(c.delta, 3);
    }
    CensusConfig m = config(7);
    m.msc = true;
    for (const auto &c : run_census(m).classes) {
        EXPECT_TRUE(c.msc);
    }
}

TEST(Census, ScanPredicates) {
    CensusReport r = run_census(config(8));
    auto beyond = scan(r, ScanPredicate::kBeyondMsc);
    EXPECT_EQ(static_cast<int64_t>(beyond.size()), r.beyond_msc);
    for (const auto &c : beyond) {
        EXPECT_FALSE(c.msc);
        EXPECT_GT(c.delta, 2);
    }
    EXPECT_EQ(static_cast<int64_t>(scan(r, ScanPredicate::kMscNotFull).size()), r.msc_s_ne_m);
    EXPECT_TRUE(scan(r, ScanPredicate::kBoundViolation).empty());
    EXPECT_EQ(scan(r, ScanPredicate::kDistance, 3).size(), static_cast<size_t>(r.by_delta[3]));
    EXPECT_EQ(scan(r, ScanPredicate::kOpen).size(), static_cast<size_t>(r.by_tag["Open"]));
    for (auto p : {ScanPredicate::kBeyondMsc, ScanPredicate::kDistance, ScanPredicate::kOpen,
                   ScanPredicate::kMscNotFull, ScanPredicate::kBoundViolation}) {
        EXPECT_EQ(parse_scan_predicate(to_string(p)), p);
    }
    EXPECT_FALSE(parse_scan_predicate("nope").has_value());
    EXPECT_NE(summary_table(r).find("class"), std::string::npos);
}
