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

#ifndef GRAPHCLIF_TESTS_PROPERTIES_H
#define GRAPHCLIF_TESTS_PROPERTIES_H

// Randomized property suites shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <string>

namespace props {

struct Outcome {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const {
        return cases > 0 && failures == 0;
    }
    void fail(const std::string &what) {
        if (failures++ == 0) {
            first_failure = what;
        }
    }
};

/// Minimal-support counts are 1 or 3, and 3 only on even supports.
Outcome minimal_support_counts(uint64_t seed, int cases);
/// Connected, n >= 3, distance 2 implies the MSC fails.
Outcome distance_two_breaks_msc(uint64_t seed, int cases);
/// For v not next to a leaf and on no 3- or 4-cycle, the only non-identity element inside supp(R_v) is R_v.
Outcome isolated_generator_support(uint64_t seed, int cases);
/// Girth >= 5 and distance > 2 imply M = S.
Outcome girth_five_full_group(uint64_t seed, int cases);
/// Distance, the multiset of A_omega and the MSC verdict survive random local Clifford conjugation.
Outcome lc_invariance(uint64_t seed, int cases);
/// Local complementation is an involution and preserves lc_class_key.
Outcome local_complement_key(uint64_t seed, int cases);
/// distance <= bound(n) on random connected graphs.
Outcome distance_bound(uint64_t seed, int cases);
/// A logical Clifford on the even-weight code forces every diagonal factor to be Clifford (n in {3, 4}).
Outcome diagonal_logical_clifford(uint64_t seed, int cases);
/// Symplectic multiply, commute and Hermiticity against dense matrices, n <= 3.
Outcome pauli_dense(uint64_t seed, int cases);
/// graph_state_vector is fixed by every standard generator, n <= 8.
Outcome graph_state_fixed(uint64_t seed, int cases);

}  // namespace props

#endif
