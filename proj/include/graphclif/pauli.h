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

#ifndef GRAPHCLIF_PAULI_H
#define GRAPHCLIF_PAULI_H

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graphclif {

/// Largest supported qubit count. Each of the X and Z parts fits in one machine word.
inline constexpr int kMaxQubits = 63;

inline uint64_t low_mask(int n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

/// An n-qubit Pauli operator i^phase * prod_j X_j^{x_j} Z_j^{z_j}.
///
/// Bit j of `x` / `z` is qubit j (0-based). Textual forms are 1-based with qubit 1 leftmost.
/// With this convention Y = i*XZ, so a Y letter contributes one unit to `phase`.
struct PauliOperator {
    int n = 1;
    uint64_t x = 0;
    uint64_t z = 0;
    uint8_t phase = 0;

    static PauliOperator identity(int n);
    /// Single-letter operator ('I', 'X', 'Y' or 'Z') on qubit q (0-based), Hermitian phase.
    static PauliOperator single(int n, int q, char letter);

    uint64_t support() const {
        return x | z;
    }
    int weight() const {
        return std::popcount(support());
    }
    bool is_identity_up_to_phase() const {
        return (x | z) == 0;
    }
    bool is_hermitian() const {
        return ((phase ^ std::popcount(x & z)) & 1) == 0;
    }
    /// 'I', 'X', 'Y' or 'Z' at qubit q (0-based).
    char letter(int q) const;
    /// Sign of a Hermitian operator once its Y letters are written out: +1 or -1.
    int sign() const;

    bool operator==(const PauliOperator &other) const = default;
};

/// Exact product p*q.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
bool commutes(const PauliOperator &p, const PauliOperator &q);

inline int weight(const PauliOperator &p) {
    return p.weight();
}
/// 1-based qubit indices where the operator acts non-trivially.
std::vector<int> support(const PauliOperator &p);

/// Parses `^(\+|-|i|-i)?[IXYZ]{1,63}$`.
PauliOperator parse_pauli(std::string_view text);
std::string format_pauli(const PauliOperator &p);

}  // namespace graphclif

#endif
