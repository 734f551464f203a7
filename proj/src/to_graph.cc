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

#include "graphclif/to_graph.h"

#include "graphclif/errors.h"

namespace graphclif {

namespace {

/// Gauss-Jordan over the bits selected by `bits_of`, multiplying generators so phases stay exact.
/// Returns the pivot column of each leading row; rows beyond the rank have zero selected bits.
template <typename Bits>
std::vector<int> eliminate(std::vector<PauliOperator> &rows, Bits bits_of) {
    std::vector<int> pivots;
    size_t next = 0;
    int n = rows.empty() ? 0 : rows[0].n;
    for (int col = 0; col < n && next < rows.size(); col++) {
        uint64_t bit = uint64_t{1} << col;
        size_t found = next;
        while (found < rows.size() && !(bits_of(rows[found]) & bit)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && (bits_of(rows[r]) & bit)) {
                rows[r] = multiply(rows[r], rows[next]);
            }
        }
        pivots.push_back(col);
        next++;
    }
    return pivots;
}

LocalCliffordOp uniform(int n, SingleQubitClifford c, uint64_t mask) {
    LocalCliffordOp k(n);
    for (int q = 0; q < n; q++) {
        if ((mask >> q) & 1) {
            k[q] = c;
        }
    }
    return k;
}

}  // namespace

GraphForm stabilizer_to_graph(const StabilizerGroup &s) {
    validate(s);
    int n = s.n;
    std::vector<PauliOperator> rows = s.generators;
    auto x_of = [](const PauliOperator &p) { return p.x; };
    auto z_of = [](const PauliOperator &p) { return p.z; };

    // Rows past the X rank are Z-type; Hadamards on their pivot columns make the X block invertible.
    size_t rank = eliminate(rows, x_of).size();
    std::vector<PauliOperator> ztype(rows.begin() + rank, rows.end());
    uint64_t h_mask = 0;
    for (int col : eliminate(ztype, z_of)) {
        h_mask |= uint64_t{1} << col;
    }
    LocalCliffordOp h = uniform(n, SingleQubitClifford::hadamard(), h_mask);
    rows = conjugate_stabilizer(h, StabilizerGroup{n, rows}).generators;

    std::vector<int> pivots = eliminate(rows, x_of);
    if (static_cast<int>(pivots.size()) != n) {
        throw std::logic_error("X block still singular after Hadamards");
    }
    // Row j now has X exactly on qubit j.
    uint64_t y_mask = 0;
    for (int j = 0; j < n; j++) {
        if ((rows[j].z >> j) & 1) {
            y_mask |= uint64_t{1} << j;
        }
    }
    auto sdg = *SingleQubitClifford::from_name("Sdg");
    LocalCliffordOp d = uniform(n, sdg, y_mask);
    rows = conjugate_stabilizer(d, StabilizerGroup{n, rows}).generators;

    uint64_t minus_mask = 0;
    for (int j = 0; j < n; j++) {
        if (rows[j].sign() < 0) {
            minus_mask |= uint64_t{1} << j;
        }
    }
    LocalCliffordOp z = uniform(n, SingleQubitClifford::pauli('Z'), minus_mask);

    GraphForm out;
    out.graph = Graph(n);
    for (int j = 0; j < n; j++) {
        out.graph.adj[j] = rows[j].z & ~(uint64_t{1} << j);
    }
    out.clifford.resize(n);
    for (int q = 0; q < n; q++) {
        out.clifford[q] = compose(z[q], compose(d[q], h[q]));
    }
    if (!same_group(conjugate_stabilizer(out.clifford, s), standard_generators(out.graph))) {
        throw std::logic_error("graph form failed verification");
    }
    return out;
}

}  // namespace graphclif
