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

#include "graphclif/io.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "graphclif/errors.h"
#include "graphclif/graph6.h"

namespace graphclif {

namespace {

const Json &field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw ParseError(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

}  // namespace

Graph parse_graph_text(const std::string &text) {
    std::string t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) {
        t.pop_back();
    }
    size_t start = t.find_first_not_of(" \t\r\n");
    t = start == std::string::npos ? "" : t.substr(start);
    if (t.empty()) {
        throw ParseError("empty graph text");
    }
    if (t.find_first_of("-,:") == std::string::npos && t.find_first_of("0123456789") == std::string::npos) {
        return decode_graph6(t);
    }
    int n = 0;
    size_t colon = t.find(':');
    if (colon != std::string::npos) {
        try {
            n = std::stoi(t.substr(0, colon));
        } catch (const std::exception &) {
            throw ParseError("bad vertex count before ':'", 0);
        }
        t = t.substr(colon + 1);
    }
    return parse_edge_list(t, n);
}

Json graph_to_json(const Graph &g) {
    Json j;
    j["n"] = g.n;
    j["graph6"] = encode_graph6(g);
    j["edges"] = format_edge_list(g);
    return j;
}

Graph graph_from_json(const Json &j) {
    if (j.is_string()) {
        return parse_graph_text(j.get<std::string>());
    }
    if (!j.is_object()) {
        throw ParseError("graph must be a string or an object");
    }
    if (j.contains("graph6")) {
        return decode_graph6(j.at("graph6").get<std::string>());
    }
    int n = j.contains("n") ? j.at("n").get<int>() : 0;
    return parse_edge_list(field(j, "edges").get<std::string>(), n);
}

Json stabilizer_to_json(const StabilizerGroup &s) {
    Json j = Json::array();
    for (const auto &p : s.generators) {
        j.push_back(format_pauli(p));
    }
    return j;
}

StabilizerGroup stabilizer_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("stabilizer must be a non-empty list of Pauli strings");
    }
    StabilizerGroup s;
    for (const auto &e : j) {
        if (!e.is_string()) {
            throw ParseError("stabilizer generator must be a string");
        }
        s.generators.push_back(parse_pauli(e.get<std::string>()));
    }
    s.n = s.generators.front().n;
    for (const auto &p : s.generators) {
        if (p.n != s.n) {
            throw ParseError("stabilizer generators differ in length");
        }
    }
    return s;
}

Json local_op_to_json(const LocalOp &u) {
    Json j = Json::array();
    for (const auto &m : u) {
        Json rows = Json::array();
        for (int r = 0; r < 2; r++) {
            Json row = Json::array();
            for (int c = 0; c < 2; c++) {
                row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
            }
            rows.push_back(row);
        }
        j.push_back(rows);
    }
    return j;
}

LocalOp local_op_from_json(const Json &j) {
    if (!j.is_array()) {
        throw ParseError("local operator must be a list of 2x2 matrices");
    }
    LocalOp u;
    for (const auto &m : j) {
        if (!m.is_array() || m.size() != 2) {
            throw ParseError("each local factor must have two rows");
        }
        Mat2 mat;
        for (int r = 0; r < 2; r++) {
            if (!m[r].is_array() || m[r].size() != 2) {
                throw ParseError("each row must have two entries");
            }
            for (int c = 0; c < 2; c++) {
                const Json &e = m[r][c];
                if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                    throw ParseError("matrix entries must be [re, im] pairs");
                }
                mat(r, c) = cd(e[0].get<double>(), e[1].get<double>());
            }
        }
        u.push_back(mat);
    }
    return u;
}

Json clifford_op_to_json(const LocalCliffordOp &k) {
    Json j = Json::array();
    for (const auto &c : k) {
        j.push_back(c.name());
    }
    return j;
}

LocalCliffordOp clifford_op_from_json(const Json &j) {
    if (!j.is_array()) {
        throw ParseError("local Clifford must be a list of names");
    }
    LocalCliffordOp k;
    for (const auto &e : j) {
        if (!e.is_string()) {
            throw ParseError("Clifford names must be strings");
        }
        auto c = SingleQubitClifford::from_name(e.get<std::string>());
        if (!c) {
            throw ParseError("unknown Clifford name \"" + e.get<std::string>() + "\"");
        }
        k.push_back(*c);
    }
    return k;
}

Json instance_to_json(const LUInstance &inst) {
    Json j;
    j["graph"] = graph_to_json(inst.graph);
    j["s_prime"] = stabilizer_to_json(inst.s_prime);
    j["u"] = local_op_to_json(inst.u);
    Json t;
    t["seed"] = inst.trace.seed;
    t["base"] = inst.trace.base;
    Json pairs = Json::array();
    for (auto [a, b] : inst.trace.pairs) {
        pairs.push_back(Json::array({a + 1, b + 1}));
    }
    t["pairs"] = pairs;
    t["thetas"] = inst.trace.thetas;
    if (!inst.trace.notice.empty()) {
        t["notice"] = inst.trace.notice;
    }
    if (inst.trace.certificate) {
        t["certificate"] = *inst.trace.certificate;
    }
    j["trace"] = t;
    return j;
}

LUInstance instance_from_json(const Json &j) {
    try {
        LUInstance inst;
        inst.graph = graph_from_json(field(j, "graph"));
        inst.s_prime = stabilizer_from_json(field(j, "s_prime"));
        inst.u = local_op_from_json(field(j, "u"));
        if (j.contains("trace")) {
            const Json &t = j.at("trace");
            inst.trace.seed = t.value("seed", uint64_t{0});
            inst.trace.base = t.value("base", std::vector<std::string>{});
            inst.trace.thetas = t.value("thetas", std::vector<double>{});
            inst.trace.notice = t.value("notice", std::string{});
            if (t.contains("pairs")) {
                for (const auto &p : t.at("pairs")) {
                    inst.trace.pairs.emplace_back(p.at(0).get<int>() - 1, p.at(1).get<int>() - 1);
                }
            }
            if (t.contains("certificate")) {
                inst.trace.certificate = t.at("certificate").get<bool>();
            }
        }
        if (inst.s_prime.n != inst.graph.n || static_cast<int>(inst.u.size()) != inst.graph.n) {
            throw DimensionError("graph, s_prime and u disagree on the qubit count");
        }
        return inst;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
}

Json mask_to_json(uint64_t mask) {
    Json j = Json::array();
    for (; mask; mask &= mask - 1) {
        j.push_back(std::countr_zero(mask) + 1);
    }
    return j;
}

Json classification_to_json(const TheoremClassification &c) {
    Json j;
    j["tag"] = to_string(c.tag);
    Json sat = Json::array();
    for (auto t : c.satisfied) {
        sat.push_back(to_string(t));
    }
    j["satisfied"] = sat;
    j["distance"] = c.distance;
    j["cycle3"] = c.cycle3;
    j["cycle4"] = c.cycle4;
    j["msc"] = c.msc;
    j["s_equals_m"] = c.s_equals_m;
    j["ghz"] = c.ghz;
    j["bar_degenerate"] = c.bar_degenerate;
    j["bar_msc"] = c.bar_msc ? Json(*c.bar_msc) : Json(nullptr);
    return j;
}

Json partition_to_json(const VertexPartition &p) {
    Json j;
    j["V1"] = mask_to_json(p.v1);
    j["V2"] = mask_to_json(p.v2);
    j["V3"] = mask_to_json(p.v3);
    j["V4"] = mask_to_json(p.v4);
    return j;
}

Json lc_result_to_json(const Graph &g, const StabilizerGroup &s_prime, const LCResult &r) {
    Json j;
    j["graph"] = graph_to_json(g);
    j["s_prime"] = stabilizer_to_json(s_prime);
    j["k"] = clifford_op_to_json(r.k);
    j["k_matrices"] = local_op_to_json(to_local_op(r.k));
    Json prov = Json::array();
    for (auto p : r.provenance) {
        prov.push_back(to_string(p));
    }
    j["provenance"] = prov;
    Json logical = Json::array();
    for (const auto &l : r.logical) {
        Json e;
        e["vertex"] = l.vertex + 1;
        Json leaves = Json::array();
        for (int w : l.leaves) {
            leaves.push_back(w + 1);
        }
        e["leaves"] = leaves;
        e["branch"] = l.diagonal ? "diagonal" : "anti-diagonal";
        e["f"] = l.f;
        e["logical"] = l.logical.name();
        logical.push_back(e);
    }
    j["logical"] = logical;
    j["classification"] = classification_to_json(r.classification);
    j["verified"] = r.verified;
    return j;
}

Json class_record_to_json(const ClassRecord &r) {
    Json j;
    j["key"] = r.key;
    j["rep_g6"] = r.rep_g6;
    j["delta"] = r.delta;
    j["msc"] = r.msc;
    j["s_eq_m"] = r.s_eq_m;
    j["tag"] = to_string(r.tag);
    j["orbit_size"] = r.orbit_size;
    if (r.orbit_capped) {
        j["orbit_capped"] = true;
    }
    return j;
}

Json census_to_json(const CensusReport &r) {
    Json j;
    j["n"] = r.n;
    j["class_count"] = r.class_count;
    Json classes = Json::array();
    for (const auto &c : r.classes) {
        classes.push_back(class_record_to_json(c));
    }
    j["classes"] = classes;
    Json totals;
    Json by_delta;
    for (const auto &[d, c] : r.by_delta) {
        by_delta[std::to_string(d)] = c;
    }
    totals["by_delta"] = by_delta;
    Json by_tag;
    for (const auto &[t, c] : r.by_tag) {
        by_tag[t] = c;
    }
    totals["by_tag"] = by_tag;
    totals["beyond_msc"] = r.beyond_msc;
    totals["msc_s_ne_m"] = r.msc_s_ne_m;
    totals["graphs"] = r.graphs;
    totals["skipped_disconnected"] = r.skipped_disconnected;
    j["totals"] = totals;
    return j;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
}

}  // namespace graphclif
