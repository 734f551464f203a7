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

#ifndef GRAPHCLIF_STABILIZER_H
#define GRAPHCLIF_STABILIZER_H

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "graphclif/pauli.h"

namespace graphclif {

/// Stabilizer of an n-qubit stabilizer state: n commuting, Hermitian, independent generators.
struct StabilizerGroup {
    int n = 0;
    std::vector<PauliOperator> generators;
};

/// Throws InvalidGroupError unless the generators satisfy the stabilizer-state invariants.
void validate(const StabilizerGroup &s);

/// GF(2) rank of a list of Paulis viewed as (x|z) rows.
int symplectic_rank(const std::vector<PauliOperator> &rows);

/// Visits all 2^n elements once, in Gray-code order over generator subsets.
/// One generator multiplication per step; the first element is the identity.
template <typename Fn>
void for_each_element(const StabilizerGroup &s, Fn &&fn) {
    PauliOperator cur = PauliOperator::identity(s.n);
    fn(cur);
    uint64_t total = uint64_t{1} << s.generators.size();
    for (uint64_t k = 1; k < total; k++) {
        cur = multiply(cur, s.generators[std::countr_zero(k)]);
        fn(cur);
    }
}

std::vector<PauliOperator> enumerate_elements(const StabilizerGroup &s);

/// Minimum weight of a non-identity element. Streams over all 2^n elements.
/// Dispatches to the OpenMP kernel once n is large enough to amortize thread start-up.
int distance(const StabilizerGroup &s);
/// Single-threaded Gray-code walk; reference for the parallel kernel.
int distance_serial(const StabilizerGroup &s);
/// Splits the generator-subset space into 2^chunk_bits independent Gray-code walks reduced by min.
int distance_parallel(const StabilizerGroup &s, int chunk_bits = 8);

/// Largest n accepted by the full-enumeration analyses below.
inline constexpr int kMaxProfileQubits = 20;

struct SupportProfile {
    /// Minimal supports as qubit bit masks, ascending.
    std::vector<uint64_t> minimal_supports;
    /// A_omega for each minimal support.
    std::map<uint64_t, int> a_omega;
    int distance = 0;
};

/// Letter sets are bit masks: X = 1, Y = 2, Z = 4.
enum LetterBits : uint8_t { kLetterX = 1, kLetterY = 2, kLetterZ = 4 };

struct MinimalSubgroup {
    /// Every element whose support is minimal.
    std::vector<PauliOperator> generators;
    /// An independent subset of `generators` spanning the same group.
    std::vector<PauliOperator> basis;
    /// Per qubit, the letters occurring among elements of M.
    std::vector<uint8_t> letters_per_qubit;
    /// M == S, i.e. the minimal elements have full rank.
    bool equals_full_group = false;
};

struct MscResult {
    bool satisfied = false;
    std::vector<uint8_t> letters_per_qubit;
};

/// Throws CapabilityError for n > kMaxProfileQubits.
SupportProfile support_profile(const StabilizerGroup &s);
MinimalSubgroup minimal_subgroup(const StabilizerGroup &s);
MscResult msc_check(const StabilizerGroup &s);
MscResult msc_check(const MinimalSubgroup &m);

/// Elements R of S with supp(R) contained in omega (a qubit bit mask).
std::vector<PauliOperator> local_elements(const StabilizerGroup &s, uint64_t omega);

/// Exact membership including phase.
bool is_element(const StabilizerGroup &s, const PauliOperator &p);

/// Both groups have the same elements, phases included. Assumes both are valid stabilizer groups.
bool same_group(const StabilizerGroup &a, const StabilizerGroup &b);

/// Decomposition of p over the generators: bit i set if generator i participates.
/// Returns false if the (x|z) part of p is outside the span.
bool decompose(const StabilizerGroup &s, const PauliOperator &p, uint64_t *combination);

std::string format_letters(uint8_t letters);

}  // namespace graphclif

#endif
