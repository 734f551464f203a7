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

#include "graphclif/clifford.h"

#include <array>
#include <cmath>

#include "graphclif/errors.h"

namespace graphclif {

Mat2 pauli_matrix(char letter) {
    Mat2 m;
    switch (letter) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            throw ParseError(std::string("unknown Pauli letter '") + letter + "'");
    }
    return m;
}

Mat2 hadamard_matrix() {
    Mat2 m;
    double r = 1 / std::sqrt(2.0);
    m << r, r, r, -r;
    return m;
}

Mat2 phase_matrix() {
    Mat2 m;
    m << 1, 0, 0, cd(0, 1);
    return m;
}

bool is_unitary(const Mat2 &u, double tol) {
    return ((u * u.adjoint()) - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

Mat2 SignedPauli::matrix() const {
    return static_cast<double>(sign) * pauli_matrix(letter);
}

std::string SignedPauli::str() const {
    return std::string(sign < 0 ? "-" : "+") + letter;
}

std::optional<SignedPauli> pauli_match(const Mat2 &m, double tol) {
    for (char letter : {'X', 'Y', 'Z'}) {
        Mat2 p = pauli_matrix(letter);
        for (int sign : {1, -1}) {
            if ((m - static_cast<double>(sign) * p).cwiseAbs().maxCoeff() <= tol) {
                return SignedPauli{sign, letter};
            }
        }
    }
    return std::nullopt;
}

namespace {

PauliOperator as_operator(SignedPauli p) {
    PauliOperator op = PauliOperator::single(1, 0, p.letter);
    if (p.sign < 0) {
        op.phase = static_cast<uint8_t>((op.phase + 2) & 3);
    }
    return op;
}

SignedPauli as_signed(const PauliOperator &op) {
    return SignedPauli{op.sign(), op.letter(0)};
}

struct CatalogEntry {
    Mat2 matrix;
    SignedPauli x;
    SignedPauli z;
    std::string name;
    /// Image of X^a Z^b, indexed by a + 2b.
    std::array<PauliOperator, 4> image;
};

struct CatalogTable {
    std::vector<CatalogEntry> entries;
    std::array<std::array<uint8_t, SingleQubitClifford::kCount>, SingleQubitClifford::kCount> product{};
    std::array<uint8_t, SingleQubitClifford::kCount> inverse{};

    int find(SignedPauli x, SignedPauli z) const {
        for (size_t i = 0; i < entries.size(); i++) {
            if (entries[i].x == x && entries[i].z == z) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }
};

Mat2 normalize_phase(const Mat2 &m) {
    for (int i = 0; i < 4; i++) {
        cd v = m(i / 2, i % 2);
        if (std::abs(v) > 1e-6) {
            return m * (std::abs(v) / v);
        }
    }
    return m;
}

std::optional<std::pair<SignedPauli, SignedPauli>> images_of(const Mat2 &u, double tol) {
    auto x = pauli_match(u * pauli_matrix('X') * u.adjoint(), tol);
    auto z = pauli_match(u * pauli_matrix('Z') * u.adjoint(), tol);
    if (!x || !z) {
        return std::nullopt;
    }
    return std::make_pair(*x, *z);
}

std::string special_name(SignedPauli x, SignedPauli z) {
    struct Named {
        SignedPauli x, z;
        const char *name;
    };
    static const Named kNamed[] = {
        {{1, 'X'}, {1, 'Z'}, "I"},    {{1, 'X'}, {-1, 'Z'}, "X"}, {{-1, 'X'}, {-1, 'Z'}, "Y"},
        {{-1, 'X'}, {1, 'Z'}, "Z"},   {{1, 'Z'}, {1, 'X'}, "H"},  {{1, 'Y'}, {1, 'Z'}, "S"},
        {{-1, 'Y'}, {1, 'Z'}, "Sdg"},
    };
    for (const auto &n : kNamed) {
        if (n.x == x && n.z == z) {
            return n.name;
        }
    }
    return "";
}

CatalogTable build_table() {
    CatalogTable t;
    std::vector<std::pair<Mat2, std::string>> queue{{Mat2::Identity(), ""}};
    const std::pair<Mat2, std::string> gens[] = {{hadamard_matrix(), "H"}, {phase_matrix(), "S"}};
    for (size_t head = 0; head < queue.size(); head++) {
        auto [m, word] = queue[head];
        auto im = images_of(m, 1e-9);
        if (t.find(im->first, im->second) >= 0) {
            continue;
        }
        CatalogEntry e;
        e.matrix = normalize_phase(m);
        e.x = im->first;
        e.z = im->second;
        std::string special = special_name(e.x, e.z);
        e.name = !special.empty() ? special : word;
        PauliOperator px = as_operator(e.x);
        PauliOperator pz = as_operator(e.z);
        e.image[0] = PauliOperator::identity(1);
        e.image[1] = px;
        e.image[2] = pz;
        e.image[3] = multiply(px, pz);
        t.entries.push_back(e);
        for (const auto &[g, gname] : gens) {
            queue.emplace_back(g * m, gname + word);
        }
    }
    if (t.entries.size() != SingleQubitClifford::kCount) {
        throw std::logic_error("Clifford closure did not produce 24 elements");
    }
    for (int a = 0; a < SingleQubitClifford::kCount; a++) {
        for (int b = 0; b < SingleQubitClifford::kCount; b++) {
            auto im = images_of(t.entries[a].matrix * t.entries[b].matrix, 1e-9);
            t.product[a][b] = static_cast<uint8_t>(t.find(im->first, im->second));
            if (t.product[a][b] == 0) {
                t.inverse[a] = static_cast<uint8_t>(b);
            }
        }
    }
    return t;
}

const CatalogTable &table() {
    static const CatalogTable t = build_table();
    return t;
}

}  // namespace

SingleQubitClifford SingleQubitClifford::from_id(int id) {
    if (id < 0 || id >= kCount) {
        throw DimensionError("Clifford id out of range");
    }
    return SingleQubitClifford(static_cast<uint8_t>(id));
}

SingleQubitClifford SingleQubitClifford::hadamard() {
    return *from_images({1, 'Z'}, {1, 'X'});
}

SingleQubitClifford SingleQubitClifford::phase() {
    return *from_images({1, 'Y'}, {1, 'Z'});
}

SingleQubitClifford SingleQubitClifford::pauli(char letter) {
    auto c = is_clifford(pauli_matrix(letter));
    return *c;
}

std::optional<SingleQubitClifford> SingleQubitClifford::from_images(SignedPauli x_image, SignedPauli z_image) {
    int id = table().find(x_image, z_image);
    if (id < 0) {
        return std::nullopt;
    }
    return SingleQubitClifford(static_cast<uint8_t>(id));
}

std::optional<SingleQubitClifford> SingleQubitClifford::from_name(const std::string &name) {
    const auto &t = table();
    for (size_t i = 0; i < t.entries.size(); i++) {
        if (t.entries[i].name == name) {
            return SingleQubitClifford(static_cast<uint8_t>(i));
        }
    }
    return std::nullopt;
}

SignedPauli SingleQubitClifford::x_image() const {
    return table().entries[id_].x;
}

SignedPauli SingleQubitClifford::z_image() const {
    return table().entries[id_].z;
}

SignedPauli SingleQubitClifford::conjugate(SignedPauli p) const {
    PauliOperator op = as_operator(p);
    const auto &img = table().entries[id_].image[(op.x & 1) + 2 * (op.z & 1)];
    PauliOperator r = img;
    r.phase = static_cast<uint8_t>((r.phase + op.phase) & 3);
    return as_signed(r);
}

const Mat2 &SingleQubitClifford::matrix() const {
    return table().entries[id_].matrix;
}

const std::string &SingleQubitClifford::name() const {
    return table().entries[id_].name;
}

SingleQubitClifford SingleQubitClifford::inverse() const {
    return SingleQubitClifford::from_id(table().inverse[id_]);
}

SingleQubitClifford compose(SingleQubitClifford a, SingleQubitClifford b) {
    return SingleQubitClifford::from_id(table().product[a.id()][b.id()]);
}

const std::vector<SingleQubitClifford> &clifford_catalog() {
    static const std::vector<SingleQubitClifford> all = [] {
        std::vector<SingleQubitClifford> v;
        for (int i = 0; i < SingleQubitClifford::kCount; i++) {
            v.push_back(SingleQubitClifford::from_id(i));
        }
        return v;
    }();
    return all;
}

SingleQubitClifford find_clifford_conjugator(SignedPauli p) {
    // Catalog order is breadth-first over words in H and S, so the first hit is a shortest word.
    for (const auto &c : clifford_catalog()) {
        if (c.conjugate(p) == SignedPauli{1, 'Z'}) {
            return c;
        }
    }
    throw std::logic_error("no Clifford maps " + p.str() + " to +Z");
}

std::optional<SingleQubitClifford> is_clifford(const Mat2 &u, double tol) {
    if (!is_unitary(u, tol)) {
        throw NonUnitaryError("matrix is not unitary");
    }
    auto im = images_of(u, tol);
    if (!im) {
        return std::nullopt;
    }
    return SingleQubitClifford::from_images(im->first, im->second);
}

PauliOperator conjugate_pauli(const LocalCliffordOp &k, const PauliOperator &p) {
    if (static_cast<int>(k.size()) != p.n) {
        throw DimensionError("local Clifford and Pauli act on different qubit counts");
    }
    const auto &t = table();
    PauliOperator r{p.n, 0, 0, p.phase};
    for (int q = 0; q < p.n; q++) {
        int a = (p.x >> q) & 1;
        int b = (p.z >> q) & 1;
        if (!(a | b)) {
            continue;
        }
        const PauliOperator &img = t.entries[k[q].id()].image[a + 2 * b];
        r.x |= img.x << q;
        r.z |= img.z << q;
        r.phase = static_cast<uint8_t>((r.phase + img.phase) & 3);
    }
    return r;
}

StabilizerGroup conjugate_stabilizer(const LocalCliffordOp &k, const StabilizerGroup &s) {
    StabilizerGroup out{s.n, {}};
    out.generators.reserve(s.generators.size());
    for (const auto &g : s.generators) {
        out.generators.push_back(conjugate_pauli(k, g));
    }
    return out;
}

LocalCliffordOp inverse(const LocalCliffordOp &k) {
    LocalCliffordOp out;
    out.reserve(k.size());
    for (auto c : k) {
        out.push_back(c.inverse());
    }
    return out;
}

}  // namespace graphclif
