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

#include "graphclif/construct_lc.h"

#include <cmath>
#include <numbers>
#include <random>

#include "graphclif/errors.h"

namespace graphclif {

namespace {

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool is_diagonal(const Mat2 &m) {
    return std::abs(m(0, 1)) <= kMatchTolerance && std::abs(m(1, 0)) <= kMatchTolerance;
}

bool is_anti_diagonal(const Mat2 &m) {
    return std::abs(m(0, 0)) <= kMatchTolerance && std::abs(m(1, 1)) <= kMatchTolerance;
}

/// Exact membership in a graph-state stabilizer: the X part fixes the generator subset.
bool in_graph_group(const Graph &g, const PauliOperator &p) {
    PauliOperator r = PauliOperator::identity(g.n);
    for (uint64_t x = p.x; x; x &= x - 1) {
        int a = std::countr_zero(x);
        r = multiply(r, PauliOperator{g.n, uint64_t{1} << a, g.adj[a], 0});
    }
    return r == p;
}

SignedPauli match_or_fact1(const Mat2 &m, const std::string &what) {
    auto p = pauli_match(m);
    if (!p) {
        throw Fact1Error("inputs are not Fact-1 consistent: " + what + " is not a signed Pauli");
    }
    return *p;
}

SingleQubitClifford clifford_or_fact1(const Mat2 &m, const std::string &what) {
    auto c = is_clifford(m);
    if (!c) {
        throw Fact1Error("inputs are not Fact-1 consistent: " + what + " is not a Clifford");
    }
    return *c;
}

std::string vertex_name(int v) {
    return "vertex " + std::to_string(v + 1);
}

/// V3/V4 factors are taken from U; each V2 vertex and its leaves go through the repetition-code decoding.
LCResult standard_procedure(const Graph &g, const LocalOp &u, const VertexPartition &part) {
    int n = g.n;
    LCResult r;
    r.k.assign(n, SingleQubitClifford::identity());
    r.provenance.assign(n, Provenance::kCopiedU);
    const Mat2 h = hadamard_matrix();
    const Mat2 x = pauli_matrix('X');
    const Mat2 z = pauli_matrix('Z');

    for (uint64_t rest = part.v3 | part.v4; rest; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        r.k[i] = clifford_or_fact1(u[i], "U at " + vertex_name(i));
    }

    for (uint64_t rest = part.v2; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        SignedPauli bv = match_or_fact1(u[v].adjoint() * z * u[v], "U^dag Z U at " + vertex_name(v));
        SingleQubitClifford fv = find_clifford_conjugator(bv);
        Mat2 ut_v = u[v] * fv.matrix().adjoint();

        std::vector<int> leaves;
        std::vector<SingleQubitClifford> fw;
        std::vector<Mat2> ut_w;
        for (uint64_t l = g.adj[v] & part.v1; l; l &= l - 1) {
            int w = std::countr_zero(l);
            SignedPauli bw = match_or_fact1(u[w].adjoint() * x * u[w], "U^dag X U at " + vertex_name(w));
            SingleQubitClifford f = find_clifford_conjugator(bw);
            leaves.push_back(w);
            fw.push_back(f);
            ut_w.push_back(h * u[w] * f.matrix().adjoint());
        }

        bool diagonal = is_diagonal(ut_v);
        if (!diagonal && !is_anti_diagonal(ut_v)) {
            throw Fact1Error("inputs are not Fact-1 consistent: U~ at " + vertex_name(v) +
                             " is neither diagonal nor anti-diagonal");
        }
        Mat2 logical = diagonal ? ut_v : Mat2(ut_v * x);
        for (size_t j = 0; j < leaves.size(); j++) {
            bool ok = diagonal ? is_diagonal(ut_w[j]) : is_anti_diagonal(ut_w[j]);
            if (!ok) {
                throw Fact1Error("inputs are not Fact-1 consistent: U~ at " + vertex_name(leaves[j]) +
                                 " does not match the branch of " + vertex_name(v));
            }
            logical = logical * (diagonal ? ut_w[j] : Mat2(ut_w[j] * x));
        }
        // The anti-diagonal code word swap is undone by X on every qubit of the repetition code.
        Mat2 kt_v = diagonal ? logical : Mat2(logical * x);
        SingleQubitClifford kt = clifford_or_fact1(kt_v, "logical operator at " + vertex_name(v));
        SingleQubitClifford kt_w = diagonal ? SingleQubitClifford::identity() : SingleQubitClifford::pauli('X');

        r.k[v] = compose(kt, fv);
        Provenance tag = diagonal ? Provenance::kStandardDiagonal : Provenance::kStandardAntiDiagonal;
        r.provenance[v] = tag;
        for (size_t j = 0; j < leaves.size(); j++) {
            r.k[leaves[j]] = compose(SingleQubitClifford::hadamard(), compose(kt_w, fw[j]));
            r.provenance[leaves[j]] = tag;
        }
        r.logical.push_back(LogicalRecord{v, leaves, diagonal, fv.name(), kt});
    }
    return r;
}

void check_inputs(const Graph &g, const StabilizerGroup &s_prime, const LocalOp &u) {
    if (s_prime.n != g.n || static_cast<int>(u.size()) != g.n) {
        throw DimensionError("graph, stabilizer and local operator disagree on the qubit count");
    }
    validate(s_prime);
    for (int i = 0; i < g.n; i++) {
        if (!is_unitary(u[i])) {
            throw NonUnitaryError("U at " + vertex_name(i) + " is not unitary");
        }
    }
}

}  // namespace

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::kCopiedU:
            return "copied-U";
        case Provenance::kStandardDiagonal:
            return "standard-procedure:diagonal";
        case Provenance::kStandardAntiDiagonal:
            return "standard-procedure:anti-diagonal";
        case Provenance::kSearch:
            return "search-fallback";
    }
    return "search-fallback";
}

std::optional<LocalCliffordOp> search_lc(const Graph &g, const StabilizerGroup &s_prime) {
    int n = g.n;
    if (n > kMaxSearchQubits) {
        throw CapabilityError("catalog search is limited to " + std::to_string(kMaxSearchQubits) + " qubits");
    }
    // Generators of the elements of S' supported on the first k qubits, for each k.
    std::vector<std::vector<PauliOperator>> checks(n + 1);
    for (int k = 1; k <= n; k++) {
        uint64_t mask = low_mask(k);
        std::vector<PauliOperator> local;
        for (const auto &p : local_elements(s_prime, mask)) {
            if (p.support() & (uint64_t{1} << (k - 1))) {
                local.push_back(p);
            }
        }
        checks[k] = std::move(local);
    }
    LocalCliffordOp k(n);
    const auto &catalog = clifford_catalog();
    auto dfs = [&](auto &&self, int depth) -> bool {
        if (depth == n) {
            return true;
        }
        for (auto c : catalog) {
            k[depth] = c;
            bool ok = true;
            for (const auto &p : checks[depth + 1]) {
                if (!in_graph_group(g, conjugate_pauli(k, p))) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, depth + 1)) {
                return true;
            }
        }
        k[depth] = SingleQubitClifford::identity();
        return false;
    };
    if (!dfs(dfs, 0)) {
        return std::nullopt;
    }
    return k;
}

bool verify_lc(const Graph &g, const StabilizerGroup &s_prime, const LocalCliffordOp &k, bool dense) {
    if (s_prime.n != g.n || static_cast<int>(k.size()) != g.n) {
        return false;
    }
    if (symplectic_rank(s_prime.generators) != g.n || static_cast<int>(s_prime.generators.size()) != g.n) {
        return false;
    }
    for (const auto &p : s_prime.generators) {
        if (!in_graph_group(g, conjugate_pauli(k, p))) {
            return false;
        }
    }
    if (dense && g.n <= kMaxDenseQubits) {
        StateVector target = graph_state_vector(g);
        StateVector mapped = apply_local(to_local_op(k), stabilizer_state_vector(s_prime));
        return equal_up_to_global_phase(target, mapped, 1e-8);
    }
    return true;
}

LCResult construct_lc(const Graph &g, const StabilizerGroup &s_prime, const LocalOp &u) {
    check_inputs(g, s_prime, u);
    TheoremClassification cls = classify_theorem(g);
    if (cls.tag == TheoremTag::kOpen) {
        throw UnsupportedClassError("unsupported graph class: no criterion guarantees LU <=> LC for this graph");
    }
    bool main = !cls.cycle3 && !cls.cycle4;
    bool delta2 = cls.distance == 2 && cls.bar_msc.value_or(false);
    bool standard = g.n >= 3 && (main || cls.msc || delta2);

    auto by_search = [&]() {
        auto k = search_lc(g, s_prime);
        if (!k) {
            throw Fact1Error("inputs are not Fact-1 consistent: no local Clifford maps S' onto S(G)");
        }
        LCResult r;
        r.k = *k;
        r.provenance.assign(g.n, Provenance::kSearch);
        return r;
    };

    LCResult r;
    if (standard) {
        try {
            r = standard_procedure(g, u, partition_vertices(g));
        } catch (const Fact1Error &) {
            BarGraph bar = bar_graph(g);
            if (bar.graph.n > 2 || g.n > kMaxSearchQubits) {
                throw;
            }
            r = by_search();
        }
    } else {
        r = by_search();
    }
    r.classification = cls;
    r.verified = verify_lc(g, s_prime, r.k);
    if (!r.verified) {
        throw Fact1Error("inputs are not Fact-1 consistent: the constructed K does not map S' onto S(G)");
    }
    return r;
}

LUInstance generate_instance(const Graph &g, uint64_t seed, const InstanceOptions &options) {
    if (!g.is_connected()) {
        throw DisconnectedGraphError("instances require a connected graph");
    }
    int n = g.n;
    std::mt19937_64 rng(seed);
    LUInstance inst;
    inst.graph = g;
    inst.trace.seed = seed;

    LocalCliffordOp c(n);
    for (int q = 0; q < n; q++) {
        if (options.use_base_clifford) {
            c[q] = SingleQubitClifford::from_id(static_cast<int>(rng() % SingleQubitClifford::kCount));
        }
        inst.trace.base.push_back(c[q].name());
    }
    inst.s_prime = conjugate_stabilizer(inverse(c), standard_generators(g));

    struct Weight2 {
        int a, b;
        PauliOperator element;
    };
    std::vector<Weight2> pairs;
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            uint64_t mask = (uint64_t{1} << a) | (uint64_t{1} << b);
            for (const auto &p : local_elements(inst.s_prime, mask)) {
                if (p.support() == mask) {
                    pairs.push_back({a, b, p});
                }
            }
        }
    }

    LocalOp d = identity_op(n);
    int wanted = options.num_phase_pairs;
    if (wanted > 0 && pairs.empty()) {
        inst.trace.notice = "no weight-2 stabilizer elements (distance " + std::to_string(distance(inst.s_prime)) +
                            "); instance downgraded to Clifford-only";
        wanted = 0;
    }
    for (int k = 0; k < wanted; k++) {
        const Weight2 *chosen = &pairs[rng() % pairs.size()];
        if (k == 0 && options.pair) {
            auto [pa, pb] = *options.pair;
            for (const auto &w : pairs) {
                if ((w.a == pa && w.b == pb) || (w.a == pb && w.b == pa)) {
                    chosen = &w;
                    break;
                }
            }
        }
        double theta = options.theta ? *options.theta : 2 * std::numbers::pi * uniform01(rng);
        const PauliOperator &e = chosen->element;
        // e = s * alpha_a beta_b; exp(i t alpha) (x) exp(-i s t beta) fixes the state.
        int s = e.sign();
        char alpha = e.letter(chosen->a);
        char beta = e.letter(chosen->b);
        d[chosen->a] = pauli_rotation(alpha, theta) * d[chosen->a];
        d[chosen->b] = pauli_rotation(beta, -s * theta) * d[chosen->b];
        inst.trace.pairs.emplace_back(chosen->a, chosen->b);
        inst.trace.thetas.push_back(theta);
    }
    inst.u.resize(n);
    for (int q = 0; q < n; q++) {
        inst.u[q] = c[q].matrix() * d[q];
    }
    if (n <= kMaxDenseQubits) {
        StateVector mapped = apply_local(inst.u, stabilizer_state_vector(inst.s_prime));
        inst.trace.certificate = equal_up_to_global_phase(graph_state_vector(g), mapped, 1e-8);
    }
    return inst;
}

}  // namespace graphclif
