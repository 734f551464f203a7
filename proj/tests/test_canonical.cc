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

#include <numeric>
#include <random>
#include <map>
#include <set>

#include "graphclif/canonical.h"
#include "graphclif/errors.h"
#include "graphclif/graph.h"
#include "oracles.h"

using namespace graphclif;

namespace {

std::vector<int> random_perm(std::mt19937_64 &rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST(Canonical, AgreesWithBruteForceClasses) {
    // The two canonical forms differ, but they must induce the same partition into isomorphism classes.
    std::mt19937_64 rng(20);
    for (int n = 1; n <= 7; n++) {
        std::map<uint64_t, uint64_t> fast_to_brute;
        std::map<uint64_t, uint64_t> brute_to_fast;
        for (int c = 0; c < 300; c++) {
            Graph g = oracle::random_connected_graph(rng, n, 0.2 + 0.6 * (rng() % 100) / 100.0);
            uint64_t f = canonical_code(g);
            uint64_t b = oracle::brute_canonical_code(g);
            EXPECT_EQ(fast_to_brute.emplace(f, b).first->second, b) << format_edge_list(g);
            EXPECT_EQ(brute_to_fast.emplace(b, f).first->second, f) << format_edge_list(g);
        }
    }
}

TEST(Canonical, PermutationInvariant) {
    std::mt19937_64 rng(21);
    for (int c = 0; c < 300; c++) {
        int n = 2 + static_cast<int>(rng() % 14);
        Graph g = oracle::random_connected_graph(rng, n, 0.3);
        Graph h = permute(g, random_perm(rng, n));
        EXPECT_EQ(canonical_form(g), canonical_form(h));
        EXPECT_EQ(canonical_graph(g), canonical_graph(h));
        if (n <= 11) {
            EXPECT_EQ(canonical_code(g), canonical_code(h));
        }
    }
}

TEST(Canonical, RegularGraphs) {
    // Petersen relabelled: vertex-transitive, tests refinement on a regular input.
    Graph p = parse_edge_list("1-2,2-3,3-4,4-5,5-1,1-6,2-7,3-8,4-9,5-10,6-8,8-10,10-7,7-9,9-6");
    std::mt19937_64 rng(22);
    for (int c = 0; c < 20; c++) {
        EXPECT_EQ(canonical_code(permute(p, random_perm(rng, 10))), canonical_code(p));
    }
    EXPECT_NE(canonical_code(cycle_graph(6)), canonical_code(parse_edge_list("1-2,2-3,3-1,4-5,5-6,6-4")));
}

TEST(Canonical, LabelingIsConsistent) {
    std::mt19937_64 rng(23);
    for (int c = 0; c < 100; c++) {
        Graph g = oracle::random_connected_graph(rng, 2 + rng() % 9, 0.4);
        CanonicalLabeling l = canonical_labeling(g);
        std::vector<int> sorted = l.lab;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> id(g.n);
        std::iota(id.begin(), id.end(), 0);
        EXPECT_EQ(sorted, id);
        EXPECT_EQ(l.graph, canonical_graph(g));
        int last = -1;
        canonical_code(g, &last);
        EXPECT_EQ(last, l.lab[g.n - 1]);
    }
}

TEST(Canonical, GraphCodeRoundTrip) {
    std::mt19937_64 rng(24);
    for (int c = 0; c < 200; c++) {
        Graph g = oracle::random_connected_graph(rng, 1 + rng() % 11, 0.4);
        EXPECT_EQ(graph_from_code(g.n, graph_code(g)), g);
    }
    EXPECT_THROW(graph_code(path_graph(12)), CapabilityError);
}

TEST(LcClassKey, SmallExamples) {
    EXPECT_EQ(lc_class_key(complete_graph(3)), lc_class_key(path_graph(3)));
    EXPECT_EQ(lc_class_key(complete_graph(5)), lc_class_key(star_graph(5)));
    EXPECT_NE(lc_class_key(path_graph(4)), lc_class_key(star_graph(4)));
    EXPECT_EQ(lc_class_key(cycle_graph(4)), lc_class_key(path_graph(4)));
    std::set<std::string> n4;
    std::mt19937_64 rng(25);
    for (int c = 0; c < 200; c++) {
        n4.insert(lc_class_key(oracle::random_connected_graph(rng, 4, 0.5)));
    }
    EXPECT_EQ(n4.size(), 2u);
}

TEST(LcClassKey, ClassCountsMatchBruteForce) {
    for (int n = 2; n <= 6; n++) {
        std::set<std::string> keys;
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
            if (g.is_connected()) {
                keys.insert(lc_class_key(g));
            }
        }
        EXPECT_EQ(static_cast<int>(keys.size()), oracle::brute_lc_class_count(n)) << "n = " << n;
    }
}

TEST(LcOrbit, ContainsEveryLocalComplement) {
    Graph g = cycle_graph(5);
    auto orbit = lc_orbit(g);
    std::set<std::string> members(orbit.begin(), orbit.end());
    for (int v = 0; v < 5; v++) {
        EXPECT_TRUE(members.count(canonical_form(local_complement(g, v))));
    }
    EXPECT_THROW(lc_orbit(cycle_graph(9), 2), ResourceError);
}
