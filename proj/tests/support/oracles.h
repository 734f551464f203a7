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

#ifndef GRAPHCLIF_TESTS_ORACLES_H
#define GRAPHCLIF_TESTS_ORACLES_H

// Slow reference computations built from first principles, independent of the library kernels.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "graphclif/clifford.h"
#include "graphclif/graph.h"
#include "graphclif/stabilizer.h"

namespace oracle {

using graphclif::Graph;
using graphclif::PauliOperator;
using graphclif::StabilizerGroup;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Kronecker product with qubit n-1 as the most significant factor, so bit j of a basis index is qubit j.
DenseMatrix pauli_dense(const PauliOperator &p);
DenseMatrix local_dense(const std::vector<graphclif::Mat2> &ops);

/// All 2^n elements as explicit generator products (no Gray code).
std::vector<PauliOperator> group_elements(const StabilizerGroup &s);
int distance(const StabilizerGroup &s);

/// Minimal supports and their element counts by quadratic filtering.
std::map<uint64_t, int> minimal_support_counts(const StabilizerGroup &s);
/// Letters per qubit over the group generated by the minimal elements, and whether it is all of S.
std::vector<uint8_t> minimal_letters(const StabilizerGroup &s, bool *equals_full);

/// The +1 common eigenvector as the top eigenvector of the sum of the generators. n <= 8.
DenseVector stabilizer_state(const StabilizerGroup &s);
bool equal_up_to_phase(const DenseVector &a, const DenseVector &b, double tol);

/// Minimum graph code over all vertex permutations. n <= 7.
uint64_t brute_canonical_code(const Graph &g);

/// Number of LC classes of connected graphs on n labelled vertices, by union-find over all labelled
/// graphs joined under local complementation and vertex transpositions. n <= 6.
int brute_lc_class_count(int n);

/// Every tree on n vertices up to isomorphism (leaf extension with canonical dedup).
std::vector<Graph> all_trees(int n);

Graph random_connected_graph(std::mt19937_64 &rng, int n, double p);
/// Random graph without 3- or 4-cycles and without degree-one vertices, or the cycle C_n on failure.
Graph random_girth5_graph(std::mt19937_64 &rng, int n);
graphclif::LocalCliffordOp random_local_clifford(std::mt19937_64 &rng, int n);
PauliOperator random_pauli(std::mt19937_64 &rng, int n);

}  // namespace oracle

#endif
