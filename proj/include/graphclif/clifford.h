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

#ifndef GRAPHCLIF_CLIFFORD_H
#define GRAPHCLIF_CLIFFORD_H

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphclif/pauli.h"
#include "graphclif/stabilizer.h"

namespace graphclif {

using cd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

inline constexpr double kMatchTolerance = 1e-9;

Mat2 pauli_matrix(char letter);
Mat2 hadamard_matrix();
Mat2 phase_matrix();

bool is_unitary(const Mat2 &u, double tol = kMatchTolerance);

/// A Hermitian single-qubit Pauli with sign: +1 or -1 times X, Y or Z.
struct SignedPauli {
    int sign = 1;
    char letter = 'Z';

    bool operator==(const SignedPauli &other) const = default;
    Mat2 matrix() const;
    std::string str() const;
};

/// Matches ±X, ±Y or ±Z entrywise within tol.
std::optional<SignedPauli> pauli_match(const Mat2 &m, double tol = kMatchTolerance);

/// One of the 24 single-qubit Cliffords modulo global phase. A small value type indexing a
/// process-wide table built by closure from H and S.
class SingleQubitClifford {
  public:
    static constexpr int kCount = 24;

    SingleQubitClifford() = default;
    static SingleQubitClifford from_id(int id);
    static SingleQubitClifford identity() {
        return SingleQubitClifford();
    }
    static SingleQubitClifford hadamard();
    static SingleQubitClifford phase();
    /// Conjugation by the Pauli matrix `letter`.
    static SingleQubitClifford pauli(char letter);
    /// Element with the given images of X and Z; nullopt if they do not anticommute.
    static std::optional<SingleQubitClifford> from_images(SignedPauli x_image, SignedPauli z_image);
    static std::optional<SingleQubitClifford> from_name(const std::string &name);

    int id() const {
        return id_;
    }
    SignedPauli x_image() const;
    SignedPauli z_image() const;
    /// C p C† for a signed letter.
    SignedPauli conjugate(SignedPauli p) const;
    const Mat2 &matrix() const;
    const std::string &name() const;
    SingleQubitClifford inverse() const;

    bool operator==(const SingleQubitClifford &other) const = default;

  private:
    explicit SingleQubitClifford(uint8_t id) : id_(id) {
    }
    uint8_t id_ = 0;
};

/// Matrix product a*b (b acts first), reduced to the catalog.
SingleQubitClifford compose(SingleQubitClifford a, SingleQubitClifford b);

/// All 24 elements, identity first, in closure order.
const std::vector<SingleQubitClifford> &clifford_catalog();

/// F with F p F† = +Z. Shortest word over {H, S} among the candidates.
SingleQubitClifford find_clifford_conjugator(SignedPauli p);

/// The catalog element equal to u up to global phase. Throws NonUnitaryError if u is not unitary.
std::optional<SingleQubitClifford> is_clifford(const Mat2 &u, double tol = kMatchTolerance);

using LocalCliffordOp = std::vector<SingleQubitClifford>;

/// K p K† with exact phase tracking.
PauliOperator conjugate_pauli(const LocalCliffordOp &k, const PauliOperator &p);
StabilizerGroup conjugate_stabilizer(const LocalCliffordOp &k, const StabilizerGroup &s);
LocalCliffordOp inverse(const LocalCliffordOp &k);

}  // namespace graphclif

#endif
