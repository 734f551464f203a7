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

#include "graphclif/local_unitary.h"

#include <cmath>

#include "graphclif/errors.h"

namespace graphclif {

namespace {

void check_dense(int n) {
    if (n < 1 || n > kMaxDenseQubits) {
        throw CapabilityError("dense state vectors are limited to 1 <= n <= 12");
    }
}

int qubits_of(const StateVector &v) {
    int n = std::countr_zero(v.size());
    if (v.size() != (size_t{1} << n)) {
        throw DimensionError("state vector length is not a power of two");
    }
    return n;
}

}  // namespace

LocalOp to_local_op(const LocalCliffordOp &k) {
    LocalOp out;
    out.reserve(k.size());
    for (auto c : k) {
        out.push_back(c.matrix());
    }
    return out;
}

LocalOp identity_op(int n) {
    return LocalOp(n, Mat2::Identity());
}

Mat2 pauli_rotation(char letter, double theta) {
    return std::cos(theta) * Mat2::Identity() + cd(0, std::sin(theta)) * pauli_matrix(letter);
}

StateVector graph_state_vector(const Graph &g) {
    check_dense(g.n);
    size_t dim = size_t{1} << g.n;
    double amp = std::pow(2.0, -g.n / 2.0);
    StateVector v(dim);
    for (size_t b = 0; b < dim; b++) {
        int edges = 0;
        for (uint64_t r = b; r; r &= r - 1) {
            edges += std::popcount(g.adj[std::countr_zero(r)] & b);
        }
        v[b] = (edges / 2) % 2 ? -amp : amp;
    }
    return v;
}

StateVector apply_pauli(const PauliOperator &p, const StateVector &v) {
    if (qubits_of(v) != p.n) {
        throw DimensionError("Pauli and state act on different qubit counts");
    }
    static const cd kPhase[4] = {1, cd(0, 1), -1, cd(0, -1)};
    StateVector out(v.size());
    for (size_t b = 0; b < v.size(); b++) {
        int k = p.phase + 2 * std::popcount(b & p.z);
        out[b ^ p.x] = kPhase[k & 3] * v[b];
    }
    return out;
}

StateVector stabilizer_state_vector(const StabilizerGroup &s) {
    check_dense(s.n);
    size_t dim = size_t{1} << s.n;
    // A generic start vector has non-zero overlap with the target; the projectors keep only that part.
    StateVector v(dim);
    for (size_t b = 0; b < dim; b++) {
        double t = 0.6180339887498949 * static_cast<double>(b + 1) + 0.1;
        v[b] = cd(std::cos(7 * t), std::sin(3 * t)) * (1.0 + 0.37 * std::sin(11 * t));
    }
    for (const auto &g : s.generators) {
        StateVector gv = apply_pauli(g, v);
        for (size_t b = 0; b < dim; b++) {
            v[b] = 0.5 * (v[b] + gv[b]);
        }
    }
    double norm = 0;
    for (const auto &a : v) {
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    if (norm < 1e-8) {
        throw std::logic_error("stabilizer projection vanished");
    }
    for (auto &a : v) {
        a /= norm;
    }
    return v;
}

StateVector apply_local(const LocalOp &op, const StateVector &v) {
    int n = qubits_of(v);
    if (static_cast<int>(op.size()) != n) {
        throw DimensionError("local operator and state act on different qubit counts");
    }
    StateVector out = v;
    for (int q = 0; q < n; q++) {
        const Mat2 &u = op[q];
        size_t bit = size_t{1} << q;
        for (size_t b = 0; b < out.size(); b++) {
            if (b & bit) {
                continue;
            }
            cd a0 = out[b];
            cd a1 = out[b | bit];
            out[b] = u(0, 0) * a0 + u(0, 1) * a1;
            out[b | bit] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
    return out;
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    if (a.size() != b.size()) {
        throw DimensionError("state vectors have different lengths");
    }
    size_t anchor = 0;
    for (size_t i = 1; i < a.size(); i++) {
        if (std::abs(a[i]) > std::abs(a[anchor])) {
            anchor = i;
        }
    }
    if (std::abs(a[anchor]) < tol || std::abs(b[anchor]) < tol) {
        return std::abs(a[anchor]) < tol && std::abs(b[anchor]) < tol;
    }
    cd phase = b[anchor] / a[anchor];
    if (std::abs(std::abs(phase) - 1) > tol) {
        return false;
    }
    for (size_t i = 0; i < a.size(); i++) {
        if (std::abs(b[i] - phase * a[i]) > tol) {
            return false;
        }
    }
    return true;
}

Proposition2Result verify_proposition2(int n, const std::vector<double> &thetas) {
    if (n < 3 || n > 4) {
        throw CapabilityError("the diagonal logical-Clifford check supports 3 <= n <= 4");
    }
    if (static_cast<int>(thetas.size()) != n) {
        throw DimensionError("need one angle per qubit");
    }
    Proposition2Result r;
    r.each_local_clifford = true;
    for (double t : thetas) {
        Mat2 f;
        f << 1, 0, 0, std::polar(1.0, t);
        r.each_local_clifford &= is_clifford(f).has_value();
    }
    // Logical basis state b (k = n-1 bits) is the codeword with qubits 2..n = b and qubit 1 = parity(b).
    int k = n - 1;
    size_t dim = size_t{1} << k;
    std::vector<cd> f(dim);
    for (size_t b = 0; b < dim; b++) {
        double angle = (std::popcount(b) & 1) ? thetas[0] : 0.0;
        for (int j = 0; j < k; j++) {
            if ((b >> j) & 1) {
                angle += thetas[j + 1];
            }
        }
        f[b] = std::polar(1.0, angle);
    }
    // F_L X_j F_L† = X_j D_j with D_j diagonal; it is a phased logical Pauli iff D_j(b) = c (-1)^{z.b}.
    r.logical_clifford = true;
    for (int j = 0; j < k && r.logical_clifford; j++) {
        size_t e = size_t{1} << j;
        std::vector<cd> d(dim);
        for (size_t b = 0; b < dim; b++) {
            d[b] = f[b ^ e] * std::conj(f[b]);
        }
        cd c = d[0];
        size_t z = 0;
        for (int i = 0; i < k; i++) {
            cd ratio = d[size_t{1} << i] / c;
            if (std::abs(ratio + 1.0) < kMatchTolerance) {
                z |= size_t{1} << i;
            }
        }
        for (size_t b = 0; b < dim; b++) {
            double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
            if (std::abs(d[b] - sign * c) > kMatchTolerance) {
                r.logical_clifford = false;
                break;
            }
        }
    }
    return r;
}

}  // namespace graphclif
