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

#include "graphclif/pauli.h"

#include "graphclif/errors.h"

namespace graphclif {

namespace {

void check_qubits(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw DimensionError("qubit count " + std::to_string(n) + " outside [1, 63]");
    }
}

}  // namespace

PauliOperator PauliOperator::identity(int n) {
    check_qubits(n);
    return PauliOperator{n, 0, 0, 0};
}

PauliOperator PauliOperator::single(int n, int q, char letter) {
    check_qubits(n);
    if (q < 0 || q >= n) {
        throw DimensionError("qubit index out of range");
    }
    PauliOperator p{n, 0, 0, 0};
    uint64_t bit = uint64_t{1} << q;
    switch (letter) {
        case 'I':
            break;
        case 'X':
            p.x = bit;
            break;
        case 'Z':
            p.z = bit;
            break;
        case 'Y':
            p.x = bit;
            p.z = bit;
            p.phase = 1;
            break;
        default:
            throw ParseError(std::string("unknown Pauli letter '") + letter + "'");
    }
    return p;
}

char PauliOperator::letter(int q) const {
    bool bx = (x >> q) & 1;
    bool bz = (z >> q) & 1;
    return "IZXY"[bx * 2 + bz];
}

int PauliOperator::sign() const {
    int display = (phase - std::popcount(x & z)) & 3;
    return display == 2 ? -1 : 1;
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    if (p.n != q.n) {
        throw DimensionError("multiply: operands act on different qubit counts");
    }
    // Moving each Z of p past an X of q costs a factor -1.
    int swaps = std::popcount(p.z & q.x);
    PauliOperator r;
    r.n = p.n;
    r.x = p.x ^ q.x;
    r.z = p.z ^ q.z;
    r.phase = static_cast<uint8_t>((p.phase + q.phase + 2 * swaps) & 3);
    return r;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    if (p.n != q.n) {
        throw DimensionError("commutes: operands act on different qubit counts");
    }
    return ((std::popcount(p.x & q.z) + std::popcount(p.z & q.x)) & 1) == 0;
}

std::vector<int> support(const PauliOperator &p) {
    std::vector<int> out;
    for (uint64_t s = p.support(); s; s &= s - 1) {
        out.push_back(std::countr_zero(s) + 1);
    }
    return out;
}

PauliOperator parse_pauli(std::string_view text) {
    size_t pos = 0;
    int phase = 0;
    if (pos < text.size() && text[pos] == '+') {
        pos++;
    } else if (pos < text.size() && text[pos] == '-') {
        pos++;
        phase = 2;
        if (pos < text.size() && text[pos] == 'i') {
            pos++;
            phase = 3;
        }
    } else if (pos < text.size() && text[pos] == 'i') {
        pos++;
        phase = 1;
    }
    size_t n = text.size() - pos;
    if (n == 0) {
        throw ParseError("Pauli string has no letters", pos);
    }
    if (n > static_cast<size_t>(kMaxQubits)) {
        throw ParseError("Pauli string longer than 63 qubits", pos + kMaxQubits);
    }
    PauliOperator p{static_cast<int>(n), 0, 0, 0};
    for (size_t q = 0; q < n; q++) {
        uint64_t bit = uint64_t{1} << q;
        switch (text[pos + q]) {
            case 'I':
                break;
            case 'X':
                p.x |= bit;
                break;
            case 'Z':
                p.z |= bit;
                break;
            case 'Y':
                p.x |= bit;
                p.z |= bit;
                phase++;
                break;
            default:
                throw ParseError(std::string("unexpected character '") + text[pos + q] + "' in Pauli string",
                                 pos + q);
        }
    }
    p.phase = static_cast<uint8_t>(phase & 3);
    return p;
}

std::string format_pauli(const PauliOperator &p) {
    static const char *kPrefix[] = {"", "i", "-", "-i"};
    int display = (p.phase - std::popcount(p.x & p.z)) & 3;
    std::string out = kPrefix[display];
    out.reserve(out.size() + p.n);
    for (int q = 0; q < p.n; q++) {
        out.push_back(p.letter(q));
    }
    return out;
}

}  // namespace graphclif
