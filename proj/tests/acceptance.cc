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

// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "graphclif/census.h"
#include "graphclif/construct_lc.h"
#include "graphclif/local_unitary.h"
#include "graphclif/rm_codes.h"
#include "oracles.h"
#include "properties.h"

using namespace graphclif;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::map<int, CensusReport> census_cache;

const CensusReport &census(int n) {
    auto it = census_cache.find(n);
    if (it == census_cache.end()) {
        auto t0 = std::chrono::steady_clock::now();
        CensusConfig cfg;
        cfg.n = n;
        cfg.jobs = omp_get_max_threads();
        it = census_cache.emplace(n, run_census(cfg)).first;
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::fprintf(stderr, "  census n=%d: %lld classes in %.1f s\n", n,
                     static_cast<long long>(it->second.class_count), s);
    }
    return it->second;
}

int64_t beyond_with_delta(const CensusReport &r, int d) {
    int64_t c = 0;
    for (const auto &rec : scan(r, ScanPredicate::kBeyondMsc)) {
        c += rec.delta == d;
    }
    return c;
}

Verdict criterion1() {
    const CensusReport &r = census(9);
    int64_t d3 = beyond_with_delta(r, 3);
    std::ostringstream os;
    os << "n=9 classes=" << r.class_count << " beyond_msc=" << r.beyond_msc << " (delta3=" << d3 << ")";
    return {r.class_count == 440 && r.beyond_msc == 3 && d3 == 3, os.str()};
}

Verdict criterion2() {
    const CensusReport &r = census(10);
    int64_t d3 = beyond_with_delta(r, 3);
    int64_t d4 = beyond_with_delta(r, 4);
    std::ostringstream os;
    os << "n=10 classes=" << r.class_count << " beyond_msc=" << r.beyond_msc << " (delta3=" << d3
       << ", delta4=" << d4 << ")";
    return {r.class_count == 3132 && r.beyond_msc == 9 && d3 == 8 && d4 == 1, os.str()};
}

Verdict criterion3() {
    bool ok = true;
    std::ostringstream os;
    os << "beyond_msc n=2..8:";
    for (int n = 2; n <= 8; n++) {
        const CensusReport &r = census(n);
        os << " " << r.beyond_msc;
        ok = ok && r.beyond_msc == 0;
    }
    int64_t s8 = census(8).msc_s_ne_m;
    int64_t s9 = census(9).msc_s_ne_m;
    os << "; MSC with S!=M n=8:" << s8 << " n=9:" << s9;
    return {ok && s8 == 2 && s9 == 0, os.str()};
}

std::string params(const BinaryCode &c) {
    return "[" + std::to_string(c.n) + "," + std::to_string(c.k()) + "," + std::to_string(min_distance(c)) + "]";
}

Verdict criterion4() {
    CSSCode css = build_css(4);
    std::string c1 = params(css.c1);
    std::string c2 = params(css.c2);
    std::string d2 = params(dual(css.c2));
    std::string d1 = params(dual(css.c1));
    int k = css.n - static_cast<int>(css.x_rows.size() + css.z_rows.size());
    int qd = css_distance(css);
    bool ok = c1 == "[15,5,7]" && c2 == "[15,4,8]" && d2 == "[15,11,3]" && k == 1 && qd == 3;
    std::ostringstream os;
    os << "C1=" << c1 << " C2=" << c2 << " dual(C2)=" << d2 << " (dual(C1)=" << d1 << ") quantum=[" << css.n << ","
       << k << "," << qd << "]";
    for (auto state : {LogicalState::kZero, LogicalState::kPlus}) {
        StabilizerGroup s = logical_state_stabilizer(css, state);
        int d = distance(s);
        MinimalSubgroup m = minimal_subgroup(s);
        bool only_z = true;
        for (uint8_t l : m.letters_per_qubit) {
            only_z = only_z && l == kLetterZ;
        }
        bool msc = msc_check(m).satisfied;
        ok = ok && d == (state == LogicalState::kZero ? 3 : 4) && !msc && only_z;
        os << " " << to_string(state) << ":delta=" << d << ",msc=" << (msc ? "true" : "false")
           << ",letters=" << (only_z ? "Z" : "mixed");
    }
    return {ok, os.str()};
}

Verdict criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    CSSCode css = build_css(5);
    int dz = distance(logical_state_stabilizer(css, LogicalState::kZero));
    int dp = distance(logical_state_stabilizer(css, LogicalState::kPlus));
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool weights = true;
    for (int m = 3; m <= 5; m++) {
        weights = weights && transversal_weight_check(m).ok;
    }
    std::ostringstream os;
    os << "m=5 zero delta=" << dz << " plus delta=" << dp << " (" << static_cast<int>(s)
       << " s); transversal m=3..5 " << (weights ? "ok" : "FAILED");
    return {dz == 3 && dp == 4 && s <= 600 && weights, os.str()};
}

Verdict criterion6() {
    std::vector<Graph> corpus;
    for (int n = 2; n <= 10; n++) {
        for (Graph &t : oracle::all_trees(n)) {
            corpus.push_back(std::move(t));
        }
    }
    for (int n = 5; n <= 12; n++) {
        corpus.push_back(cycle_graph(n));
    }
    corpus.push_back(parse_edge_list("1-2,2-3,3-4,3-5"));
    int64_t runs = 0;
    int64_t failures = 0;
    std::string first;
    for (const Graph &g : corpus) {
        for (uint64_t seed = 0; seed < 100; seed++) {
            InstanceOptions o;
            o.num_phase_pairs = 1 + static_cast<int>(seed % 3);
            o.use_base_clifford = (seed / 3) % 2 == 0;
            runs++;
            try {
                LUInstance inst = generate_instance(g, seed, o);
                LCResult r = construct_lc(g, inst.s_prime, inst.u);
                bool ok = r.verified && verify_lc(g, inst.s_prime, r.k) && inst.trace.certificate.value_or(false);
                if (ok && g.n <= 12) {
                    StateVector mapped = apply_local(to_local_op(r.k), stabilizer_state_vector(inst.s_prime));
                    ok = equal_up_to_global_phase(graph_state_vector(g), mapped, 1e-8);
                }
                if (!ok) {
                    failures++;
                }
            } catch (const std::exception &e) {
                failures++;
                if (first.empty()) {
                    first = format_edge_list(g) + " seed " + std::to_string(seed) + ": " + e.what();
                }
            }
        }
    }
    std::ostringstream os;
    os << corpus.size() << " graphs, " << runs << " instances, " << failures << " failures";
    if (!first.empty()) {
        os << " (first: " << first << ")";
    }
    return {failures == 0, os.str()};
}

Verdict criterion7() {
    const int cases = 1000;
    std::vector<std::pair<std::string, props::Outcome>> suites = {
        {"min-support-counts", props::minimal_support_counts(1, cases)},
        {"delta2-no-msc", props::distance_two_breaks_msc(2, cases)},
        {"isolated-generator", props::isolated_generator_support(3, cases)},
        {"girth5-full", props::girth_five_full_group(4, cases)},
        {"lc-invariance", props::lc_invariance(5, cases)},
        {"lc-key", props::local_complement_key(6, cases)},
        {"bound", props::distance_bound(7, cases)},
        {"diagonal-logical", props::diagonal_logical_clifford(8, cases)},
    };
    bool ok = true;
    std::ostringstream os;
    for (const auto &[name, o] : suites) {
        ok = ok && o.ok() && o.cases >= cases;
        os << name << " " << o.failures << "/" << o.cases << "; ";
        if (o.failures) {
            os << "(" << o.first_failure << ") ";
        }
    }
    int64_t violations = 0;
    for (auto &[n, r] : census_cache) {
        violations += static_cast<int64_t>(scan(r, ScanPredicate::kBoundViolation).size());
    }
    os << "census bound violations " << violations;
    return {ok && violations == 0, os.str()};
}

Verdict criterion8() {
    props::Outcome p = props::pauli_dense(11, 1000);
    props::Outcome g = props::graph_state_fixed(12, 1000);
    std::ostringstream os;
    os << "pauli/dense " << p.failures << "/" << p.cases << "; graph-state fixed " << g.failures << "/" << g.cases;
    if (!p.ok()) {
        os << " (" << p.first_failure << ")";
    }
    if (!g.ok()) {
        os << " (" << g.first_failure << ")";
    }
    return {p.ok() && g.ok(), os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Verdict()>>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
    };
    int failed = 0;
    for (const auto &[id, fn] : criteria) {
        Verdict v;
        auto t0 = std::chrono::steady_clock::now();
        try {
            v = fn();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", id, v.detail.c_str(), s);
        std::fflush(stdout);
        failed += !v.pass;
    }
    return failed == 0 ? 0 : 1;
}
