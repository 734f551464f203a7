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

#ifndef GRAPHCLIF_LOCAL_UNITARY_H
#define GRAPHCLIF_LOCAL_UNITARY_H

#include <vector>

#include "graphclif/clifford.h"
#include "graphclif/graph.h"

namespace graphclif {

/// One 2x2 unitary per qubit; index = qubit (0-based).
using LocalOp = std::vector<Mat2>;

/// Amplitudes indexed by computational basis state; bit j of the index is qubit j.
using StateVector = std::vector<cd>;

/// Largest qubit count for dense state vectors.
inline constexpr int kMaxDenseQubits = 12;

LocalOp to_local_op(const LocalCliffordOp &k);
LocalOp identity_op(int n);

/// exp(i theta P) for a single-qubit Pauli letter.
Mat2 pauli_rotation(char letter, double theta);

/// Amplitude 2^{-n/2} (-1)^{number of edges with both ends set}.
StateVector graph_state_vector(const Graph &g);
/// The joint +1 eigenvector, fixed up to global phase. n <= 12.
StateVector stabilizer_state_vector(const StabilizerGroup &s);

StateVector apply_pauli(const PauliOperator &p, const StateVector &v);
StateVector apply_local(const LocalOp &op, const StateVector &v);
/// Aligns the phases at the largest-magnitude amplitude of a, then compares entrywise.
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol = kMatchTolerance);

struct Proposition2Result {
    bool each_local_clifford = false;
    bool logical_clifford = false;
};

/// Diagonal F_i = diag(1, e^{i theta_i}) on the even-weight code of length n (3 <= n <= 4).
/// The logical basis is indexed by qubits 2..n; qubit 1 carries their parity.
Proposition2Result verify_proposition2(int n, const std::vector<double> &thetas);

}  // namespace graphclif

#endif
