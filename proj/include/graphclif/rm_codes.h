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

#ifndef GRAPHCLIF_RM_CODES_H
#define GRAPHCLIF_RM_CODES_H

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "graphclif/stabilizer.h"

namespace graphclif {

/// Binary linear code of length n <= 64. Bit j of a word is coordinate j.
struct BinaryCode {
    int n = 0;
    /// Independent generator rows.
    std::vector<uint64_t> rows;

    int k() const {
        return static_cast<int>(rows.size());
    }
};

/// Row-reduces to an independent basis of the span.
BinaryCode make_code(int n, const std::vector<uint64_t> &rows);

/// First-order Reed-Muller code on the 2^m points of GF(2)^m in binary counting order.
BinaryCode rm1(int m);
/// Drops coordinate 0 (the zero point).
BinaryCode puncture_first(const BinaryCode &c);
/// Codewords of even weight.
BinaryCode even_subcode(const BinaryCode &c);
BinaryCode dual(const BinaryCode &c);

bool contains(const BinaryCode &c, uint64_t word);
/// All 2^k codewords. k <= 24.
std::vector<uint64_t> codewords(const BinaryCode &c);
/// Minimum non-zero weight, by codeword enumeration when k is small and otherwise by searching
/// low-weight combinations of parity-check columns.
int min_distance(const BinaryCode &c);

struct CSSCode {
    int m = 0;
    int n = 0;
    BinaryCode c1;
    BinaryCode c2;
    std::vector<uint64_t> x_rows;
    std::vector<uint64_t> z_rows;
    uint64_t logical_x = 0;
    uint64_t logical_z = 0;
};

/// [2^m-1, 1, 3] code: X stabilizers from C2 = even(RM*(1,m)), Z stabilizers from the dual of
/// C1 = RM*(1,m). 3 <= m <= 6.
CSSCode build_css(int m);

/// Quantum code distance: the smaller of the minimum weights of C1\C2 and C2-dual\C1-dual.
int css_distance(const CSSCode &css);

enum class LogicalState { kZero, kPlus };
std::string to_string(LogicalState s);

/// Code stabilizers plus Z on every qubit (zero) or X on the logical-X support (plus).
StabilizerGroup logical_state_stabilizer(const CSSCode &css, LogicalState state);

struct TransversalCheck {
    bool ok = false;
    std::set<int> c2_weights;
    std::set<int> coset_weights;
};

/// Weights of C2 lie in {0, 2^{m-1}} and weights of C1\C2 in {2^{m-1}-1, 2^m-1}.
TransversalCheck transversal_weight_check(int m);

}  // namespace graphclif

#endif
