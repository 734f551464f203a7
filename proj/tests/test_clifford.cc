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

#include <numbers>
#include <random>
#include <set>

#include "graphclif/clifford.h"
#include "graphclif/errors.h"
#include "oracles.h"

using namespace graphclif;

namespace {

double diff(const Mat2 &a, const Mat2 &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// a = c * b for some unit complex c.
bool equal_up_to_phase(const Mat2 &a, const Mat2 &b) {
    int r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    cd ratio = a(r, c) / b(r, c);
    return std::abs(std::abs(ratio) - 1) < 1e-9 && diff(a, ratio * b) < 1e-9;
}

}  // namespace

TEST(Clifford, CatalogHas24DistinctElements) {
    const auto &cat = clifford_catalog();
    ASSERT_EQ(cat.size(), 24u);
    std::set<std::pair<std::string, std::string>> images;
    std::set<std::string> names;
    for (const auto &c : cat) {
        images.insert({c.x_image().str(), c.z_image().str()});
        names.insert(c.name());
        EXPECT_TRUE(is_unitary(c.matrix()));
        EXPECT_EQ(SingleQubitClifford::from_name(c.name()), c);
    }
    EXPECT_EQ(images.size(), 24u);
    EXPECT_EQ(names.size(), 24u);
    for (size_t i = 0; i < cat.size(); i++) {
        for (size_t j = i + 1; j < cat.size(); j++) {
            EXPECT_FALSE(equal_up_to_phase(cat[i].matrix(), cat[j].matrix()));
        }
    }
}

TEST(Clifford, ClosedUnderComposition) {
    for (const auto &a : clifford_catalog()) {
        EXPECT_EQ(compose(a, a.inverse()), SingleQubitClifford::identity());
        for (const auto &b : clifford_catalog()) {
            SingleQubitClifford c = compose(a, b);
            EXPECT_TRUE(equal_up_to_phase(c.matrix(), a.matrix() * b.matrix()));
        }
    }
}

TEST(Clifford, ConjugationMatchesMatrices) {
    for (const auto &c : clifford_catalog()) {
        for (char l : {'X', 'Y', 'Z'}) {
            for (int s : {1, -1}) {
                SignedPauli p{s, l};
                SignedPauli q = c.conjugate(p);
                EXPECT_LT(diff(c.matrix() * p.matrix() * c.matrix().adjoint(), q.matrix()), 1e-12);
            }
        }
    }
}

TEST(Clifford, IsClifford) {
    EXPECT_EQ(is_clifford(hadamard_matrix()), SingleQubitClifford::hadamard());
    EXPECT_EQ(is_clifford(phase_matrix()), SingleQubitClifford::phase());
    EXPECT_TRUE(is_clifford(cd(0, 1) * pauli_matrix('Y')).has_value());
    Mat2 t;
    t << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
    EXPECT_FALSE(is_clifford(t).has_value());
    Mat2 bad;
    bad << 1, 1, 0, 1;
    EXPECT_THROW(is_clifford(bad), NonUnitaryError);
}

TEST(Clifford, PauliMatch) {
    EXPECT_EQ(pauli_match(-pauli_matrix('Z')), (SignedPauli{-1, 'Z'}));
    EXPECT_EQ(pauli_match(pauli_matrix('Y')), (SignedPauli{1, 'Y'}));
    EXPECT_FALSE(pauli_match(cd(0, 1) * pauli_matrix('X')).has_value());
    EXPECT_FALSE(pauli_match(hadamard_matrix()).has_value());
}

TEST(Clifford, FindConjugator) {
    EXPECT_EQ(find_clifford_conjugator({1, 'Z'}), SingleQubitClifford::identity());
    EXPECT_EQ(find_clifford_conjugator({1, 'X'}), SingleQubitClifford::hadamard());
    EXPECT_EQ(find_clifford_conjugator({-1, 'Z'}).conjugate({-1, 'Z'}), (SignedPauli{1, 'Z'}));
    EXPECT_EQ(find_clifford_conjugator({-1, 'Z'}).z_image(), (SignedPauli{-1, 'Z'}));
    for (char l : {'X', 'Y', 'Z'}) {
        for (int s : {1, -1}) {
            EXPECT_EQ(find_clifford_conjugator({s, l}).conjugate({s, l}), (SignedPauli{1, 'Z'}));
        }
    }
}

TEST(Clifford, ConjugatePauliMatchesDense) {
    std::mt19937_64 rng(40);
    for (int c = 0; c < 200; c++) {
        int n = 1 + static_cast<int>(rng() % 3);
        LocalCliffordOp k = oracle::random_local_clifford(rng, n);
        PauliOperator p = oracle::random_pauli(rng, n);
        std::vector<Mat2> mats;
        for (const auto &q : k) {
            mats.push_back(q.matrix());
        }
        oracle::DenseMatrix kd = oracle::local_dense(mats);
        oracle::DenseMatrix expected = kd * oracle::pauli_dense(p) * kd.adjoint();
        EXPECT_LT((oracle::pauli_dense(conjugate_pauli(k, p)) - expected).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_EQ(conjugate_pauli(inverse(k), conjugate_pauli(k, p)), p);
    }
    EXPECT_THROW(conjugate_pauli(LocalCliffordOp(2), parse_pauli("X")), DimensionError);
}
