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

#ifndef GRAPHCLIF_CONSTRUCT_LC_H
#define GRAPHCLIF_CONSTRUCT_LC_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphclif/classify.h"
#include "graphclif/local_unitary.h"

namespace graphclif {

struct InstanceTrace {
    uint64_t seed = 0;
    /// Base Clifford C per qubit (catalog names).
    std::vector<std::string> base;
    /// Qubit pairs (0-based) carrying a phase rotation, with their angles.
    std::vector<std::pair<int, int>> pairs;
    std::vector<double> thetas;
    /// Set when phase pairs were requested but the state has no weight-2 elements.
    std::string notice;
    /// Dense check that U maps the state of s_prime onto the graph state; unset for n > 12.
    std::optional<bool> certificate;
};

/// A claimed local-unitary equivalence U |psi'> = |psi_G>.
struct LUInstance {
    Graph graph;
    StabilizerGroup s_prime;
    LocalOp u;
    InstanceTrace trace;
};

struct InstanceOptions {
    int num_phase_pairs = 1;
    bool use_base_clifford = true;
    /// Fixed angle for every pair instead of a random one.
    std::optional<double> theta;
    /// Restrict the first pair to these qubits (0-based) if they carry a weight-2 element.
    std::optional<std::pair<int, int>> pair;
};

/// Random instance: S' = C† S(G) C for a random catalog C, and U = C D with D a product of
/// exp(i t a) (x) exp(-i s t b) over weight-2 elements s a b of S'.
LUInstance generate_instance(const Graph &g, uint64_t seed, const InstanceOptions &options = {});

/// How each K_i was obtained.
enum class Provenance { kCopiedU, kStandardDiagonal, kStandardAntiDiagonal, kSearch };
std::string to_string(Provenance p);

/// Record for one vertex of V2: the encoded logical operator and the F used.
struct LogicalRecord {
    int vertex = 0;
    std::vector<int> leaves;
    bool diagonal = true;
    std::string f;
    /// K~ at the V2 vertex, i.e. the logical operator on its repetition code.
    SingleQubitClifford logical;
};

struct LCResult {
    LocalCliffordOp k;
    std::vector<Provenance> provenance;
    std::vector<LogicalRecord> logical;
    TheoremClassification classification;
    bool verified = false;
};

/// Turns a local-unitary equivalence into a local-Clifford one. Every returned result verifies.
/// Throws Fact1Error if the inputs are inconsistent with U |psi'> = |psi_G>, UnsupportedClassError
/// for graphs classified Open, CapabilityError when the residual search exceeds its qubit cap.
LCResult construct_lc(const Graph &g, const StabilizerGroup &s_prime, const LocalOp &u);

/// Largest qubit count handled by the exhaustive catalog search.
inline constexpr int kMaxSearchQubits = 8;

/// Depth-first search over catalog assignments for K with K S' K† = S(G). nullopt if none exists.
std::optional<LocalCliffordOp> search_lc(const Graph &g, const StabilizerGroup &s_prime);

/// Exact check that K maps every generator of s_prime into S(G), signs included.
/// With `dense` and n <= 12 the state vectors are compared as well.
bool verify_lc(const Graph &g, const StabilizerGroup &s_prime, const LocalCliffordOp &k, bool dense = false);

}  // namespace graphclif

#endif
