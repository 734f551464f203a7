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

#include "graphclif/errors.h"
#include "graphclif/graph.h"
#include "graphclif/stabilizer.h"
#include "oracles.h"

using namespace graphclif;

namespace {

StabilizerGroup group(std::initializer_list<const char *> gens) {
    StabilizerGroup s;
    for (const char *g : gens) {
        s.generators.push_back(parse_pauli(g));
    }
    s.n = s.generators.front().n;
    return s;
}

Graph b4() {
    return parse_edge_list("1-2,2-3,3-4,3-5");
}

uint64_t mask(std::initializer_list<int> qubits) {
    uint64_t m = 0;
    for (int q : qubits) {
        m |= uint64_t{1} << (q - 1);
    }
    return m;
}

}  // namespace

TEST(Stabilizer, EnumerateSingleQubit) {
    auto e = enumerate_elements(group({"Z"}));
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(format_pauli(e[0]), "I");
    EXPECT_EQ(format_pauli(e[1]), "Z");
}

TEST(Stabilizer, EnumerateBell) {
    auto e = enumerate_elements(group({"XZ", "ZX"}));
    ASSERT_EQ(e.size(), 4u);
    bool yy = false;
    for (const auto &p : e) {
        yy |= p.x == 3 && p.z == 3;
    }
    EXPECT_TRUE(yy);
}

TEST(Stabilizer, EnumerationMatchesOracle) {
    std::mt19937_64 rng(5);
    for (int c = 0; c < 40; c++) {
        Graph g = oracle::random_connected_graph(rng, 1 + static_cast<int>(rng() % 10), 0.4);
        StabilizerGroup s = standard_generators(g);
        auto a = enumerate_elements(s);
        auto b = oracle::group_elements(s);
        EXPECT_EQ(a.size(), size_t{1} << g.n);
        auto key = [](const PauliOperator &p) { return std::make_tuple(p.x, p.z, p.phase); };
        std::set<std::tuple<uint64_t, uint64_t, uint8_t>> sa, sb;
        for (auto &p : a) {
            sa.insert(key(p));
        }
        for (auto &p : b) {
            sb.insert(key(p));
        }
        EXPECT_EQ(sa, sb);
    }
}

TEST(Stabilizer, DistanceExamples) {
    EXPECT_EQ(distance(group({"XZI", "ZXZ", "IZX"})), 2);
    EXPECT_EQ(distance(standard_generators(cycle_graph(5))), 3);
    std::mt19937_64 rng(6);
    for (int c = 0; c < 30; c++) {
        Graph g = oracle::random_connected_graph(rng, 3 + static_cast<int>(rng() % 8), 0.5);
        Graph h(g.n + 1);
        for (int i = 0; i < g.n; i++) {
            h.adj[i] = g.adj[i];
        }
        h.add_edge(static_cast<int>(rng() % g.n), g.n);
        EXPECT_EQ(distance(standard_generators(h)), 2);
    }
}

TEST(Stabilizer, DistanceKernelsAgreeWithOracle) {
    std::mt19937_64 rng(7);
    for (int c = 0; c < 60; c++) {
        Graph g = oracle::random_connected_graph(rng, 2 + static_cast<int>(rng() % 11), 0.35);
        StabilizerGroup s = conjugate_stabilizer(oracle::random_local_clifford(rng, g.n), standard_generators(g));
        int expected = oracle::distance(s);
        EXPECT_EQ(distance_serial(s), expected);
        EXPECT_EQ(distance_parallel(s, 3), expected);
        EXPECT_EQ(distance(s), expected);
    }
}

TEST(Stabilizer, SupportProfileExamples) {
    SupportProfile b = support_profile(standard_generators(b4()));
    EXPECT_EQ(b.a_omega.at(mask({3, 4})), 1);
    EXPECT_EQ(b.a_omega.at(mask({3, 5})), 1);

    SupportProfile k2 = support_profile(group({"XZ", "ZX"}));
    ASSERT_EQ(k2.minimal_supports.size(), 1u);
    EXPECT_EQ(k2.a_omega.at(mask({1, 2})), 3);

    SupportProfile a4 = support_profile(group({"XZI", "ZXZ", "IZX"}));
    EXPECT_EQ(a4.minimal_supports, (std::vector<uint64_t>{mask({1, 2}), mask({1, 3}), mask({2, 3})}));
    for (auto w : a4.minimal_supports) {
        EXPECT_EQ(a4.a_omega.at(w), 1);
    }
    EXPECT_EQ(a4.distance, 2);
}

TEST(Stabilizer, SupportProfileMatchesOracle) {
    std::mt19937_64 rng(8);
    for (int c = 0; c < 60; c++) {
        Graph g = oracle::random_connected_graph(rng, 2 + static_cast<int>(rng() % 8), 0.4);
        StabilizerGroup s = conjugate_stabilizer(oracle::random_local_clifford(rng, g.n), standard_generators(g));
        SupportProfile p = support_profile(s);
        auto expected = oracle::minimal_support_counts(s);
        std::map<uint64_t, int> got(p.a_omega.begin(), p.a_omega.end());
        EXPECT_EQ(got, expected);
        bool full = false;
        auto letters = oracle::minimal_letters(s, &full);
        MinimalSubgroup m = minimal_subgroup(s);
        EXPECT_EQ(m.letters_per_qubit, letters);
        EXPECT_EQ(m.equals_full_group, full);
    }
}

TEST(Stabilizer, MinimalSubgroupExamples) {
    MinimalSubgroup a4 = minimal_subgroup(group({"XZI", "ZXZ", "IZX"}));
    EXPECT_EQ(a4.letters_per_qubit, (std::vector<uint8_t>{kLetterX, kLetterZ, kLetterX}));
    EXPECT_FALSE(a4.equals_full_group);
    EXPECT_EQ(a4.basis.size(), 2u);

    MinimalSubgroup k2 = minimal_subgroup(group({"XZ", "ZX"}));
    EXPECT_TRUE(k2.equals_full_group);
    EXPECT_EQ(k2.letters_per_qubit, (std::vector<uint8_t>{7, 7}));

    Graph petersen = parse_edge_list("1-2,2-3,3-4,4-5,5-1,1-6,2-7,3-8,4-9,5-10,6-8,8-10,10-7,7-9,9-6");
    EXPECT_TRUE(minimal_subgroup(standard_generators(petersen)).equals_full_group);
}

TEST(Stabilizer, MscExamples) {
    EXPECT_FALSE(msc_check(group({"XZI", "ZXZ", "IZX"})).satisfied);
    EXPECT_TRUE(msc_check(standard_generators(cycle_graph(5))).satisfied);
    EXPECT_FALSE(msc_check(standard_generators(b4())).satisfied);
    EXPECT_TRUE(msc_check(group({"XZ", "ZX"})).satisfied);
}

TEST(Stabilizer, LocalElements) {
    StabilizerGroup s = standard_generators(b4());
    auto e = local_elements(s, mask({3, 4}));
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(format_pauli(e[1]), "IIZXI");
    EXPECT_EQ(local_elements(s, 0).size(), 1u);
    EXPECT_EQ(local_elements(s, mask({1, 2, 3, 4, 5})).size(), 32u);
}

TEST(Stabilizer, IsElement) {
    StabilizerGroup a4 = group({"XZI", "ZXZ", "IZX"});
    EXPECT_TRUE(is_element(a4, parse_pauli("ZXZ")));
    EXPECT_FALSE(is_element(a4, parse_pauli("-XZI")));
    EXPECT_TRUE(is_element(a4, PauliOperator::identity(3)));
    EXPECT_TRUE(is_element(a4, parse_pauli("XIX")));
    EXPECT_FALSE(is_element(a4, parse_pauli("ZII")));
    EXPECT_THROW(is_element(a4, parse_pauli("XX")), DimensionError);
}

TEST(Stabilizer, ValidateRejectsBadGroups) {
    EXPECT_THROW(validate(group({"X", "Z"})), InvalidGroupError);
    EXPECT_THROW(validate(group({"XX", "ZZ", "YY"})), InvalidGroupError);
    EXPECT_THROW(validate(group({"XI", "XI"})), InvalidGroupError);
    EXPECT_THROW(validate(group({"iX"})), InvalidGroupError);
    EXPECT_THROW(validate(group({"XX", "-XX"})), InvalidGroupError);
    EXPECT_NO_THROW(validate(group({"-XX", "ZZ"})));
}

TEST(Stabilizer, ProfileCapability) {
    EXPECT_THROW(support_profile(standard_generators(path_graph(21))), CapabilityError);
    EXPECT_NO_THROW(distance(standard_generators(path_graph(21))));
}

TEST(Stabilizer, SameGroup) {
    StabilizerGroup a = group({"XZ", "ZX"});
    StabilizerGroup b = group({"YY", "ZX"});
    EXPECT_TRUE(same_group(a, b));
    EXPECT_FALSE(same_group(a, group({"-YY", "ZX"})));
}
