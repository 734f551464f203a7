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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "graphclif/census.h"
#include "graphclif/classify.h"
#include "graphclif/construct_lc.h"
#include "graphclif/errors.h"
#include "graphclif/graph6.h"
#include "graphclif/io.h"
#include "graphclif/rm_codes.h"
#include "graphclif/stabilizer.h"
#include "graphclif/to_graph.h"

#ifndef GRAPHCLIF_VERSION
#define GRAPHCLIF_VERSION "0.0.0"
#endif

using namespace graphclif;

namespace {

constexpr int kSchemaVersion = 1;

enum ExitCode { kOk = 0, kFalse = 1, kParse = 2, kCapability = 3, kFact1 = 4, kUnsupported = 5 };

struct Envelope {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
};

void emit(const Envelope &e, double seconds, std::ostream &out) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = "graphclif";
    j["version"] = GRAPHCLIF_VERSION;
    j["command"] = e.command;
    j["inputs"] = e.inputs;
    j["results"] = e.results;
    j["timing"] = {{"seconds", seconds}};
    out << j.dump(2) << "\n";
}

void write_file(const std::string &path, const Json &j) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write " + path);
    }
    out << j.dump(2) << "\n";
}

Json letters_json(const std::vector<uint8_t> &letters) {
    Json j = Json::array();
    for (auto l : letters) {
        j.push_back(format_letters(l));
    }
    return j;
}

Graph read_graph_arg(const std::string &text, const std::string &file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            throw ParseError("cannot open " + file);
        }
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph_text(ss.str());
    }
    if (text.empty()) {
        throw ParseError("no graph given (use --graph or --graph-file)");
    }
    return parse_graph_text(text);
}

Json analyze(const Graph &g, bool profile) {
    Json r;
    r["graph"] = graph_to_json(g);
    TheoremClassification c = classify_theorem(g);
    StabilizerGroup s = standard_generators(g);
    r["delta"] = c.distance;
    r["distance_bound"] = distance_bound(g.n, has_even_weights(g));
    r["partition"] = partition_to_json(partition_vertices(g));
    r["cycle3"] = c.cycle3;
    r["cycle4"] = c.cycle4;
    MscResult msc = msc_check(s);
    r["msc"] = msc.satisfied;
    r["letters_per_qubit"] = letters_json(msc.letters_per_qubit);
    r["s_equals_m"] = c.s_equals_m;
    r["classification"] = classification_to_json(c);
    if (profile) {
        SupportProfile p = support_profile(s);
        Json sup = Json::array();
        for (uint64_t w : p.minimal_supports) {
            sup.push_back({{"support", mask_to_json(w)}, {"a_omega", p.a_omega.at(w)}});
        }
        r["minimal_supports"] = sup;
    }
    return r;
}

Json code_params(const BinaryCode &c) {
    return Json::array({c.n, c.k(), min_distance(c)});
}

Json rm_report(int m, LogicalState state) {
    CSSCode css = build_css(m);
    Json r;
    r["m"] = m;
    r["n"] = css.n;
    Json classical;
    classical["c1"] = code_params(css.c1);
    classical["c2"] = code_params(css.c2);
    classical["c1_dual"] = code_params(dual(css.c1));
    classical["c2_dual"] = code_params(dual(css.c2));
    r["classical"] = classical;
    r["quantum"] = Json::array({css.n, 1, css_distance(css)});
    TransversalCheck t = transversal_weight_check(m);
    r["transversal_weight_check"] = {{"ok", t.ok}, {"c2_weights", t.c2_weights}, {"coset_weights", t.coset_weights}};
    r["logical_x"] = mask_to_json(css.logical_x);
    r["state"] = to_string(state);
    StabilizerGroup s = logical_state_stabilizer(css, state);
    r["stabilizer"] = stabilizer_to_json(s);
    GraphForm gf = stabilizer_to_graph(s);
    r["graph"] = graph_to_json(gf.graph);
    r["to_graph_clifford"] = clifford_op_to_json(gf.clifford);
    if (css.n <= 31) {
        r["delta"] = distance(s);
    } else {
        r["delta"] = nullptr;
        r["delta_note"] = "not computed: 2^n enumeration exceeds the budget for n > 31";
    }
    if (css.n <= kMaxProfileQubits) {
        MinimalSubgroup ms = minimal_subgroup(s);
        MscResult msc = msc_check(ms);
        r["msc"] = msc.satisfied;
        r["letters_per_qubit"] = letters_json(msc.letters_per_qubit);
        r["s_equals_m"] = ms.equals_full_group;
    } else {
        r["msc"] = nullptr;
        r["msc_note"] = "not computed: minimal-support analysis is limited to n <= 20";
    }
    return r;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"graphclif: local-unitary versus local-Clifford equivalence of graph states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", GRAPHCLIF_VERSION);

    std::string graph_text;
    std::string graph_file;
    bool profile = false;
    auto *analyze_cmd = app.add_subcommand("analyze", "Distance, vertex partition, MSC and theorem tag of a graph");
    analyze_cmd->add_option("-g,--graph", graph_text, "graph6 string or 1-based edge list such as 1-2,2-3");
    analyze_cmd->add_option("--graph-file", graph_file, "File holding the graph text");
    analyze_cmd->add_flag("--profile", profile, "Also list minimal supports with their A_omega");

    int census_n = 0;
    std::string census_input;
    int jobs = 1;
    std::string out_path;
    std::optional<int> min_distance;
    std::optional<int> max_distance;
    std::optional<bool> msc_filter;
    std::string scan_name;
    int scan_k = 0;
    auto *census_cmd = app.add_subcommand("census", "LC classes of connected graphs");
    auto *n_opt = census_cmd->add_option("-n,--n", census_n, "Vertex count for the builtin generator")
                      ->check(CLI::Range(2, 11));
    auto *in_opt = census_cmd->add_option("-i,--input", census_input, "graph6 file, one graph per line");
    n_opt->excludes(in_opt);
    census_cmd->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    census_cmd->add_option("-o,--out", out_path, "Write the report (without timing) to this file");
    census_cmd->add_option("--min-distance", min_distance, "Only list classes with delta >= this");
    census_cmd->add_option("--max-distance", max_distance, "Only list classes with delta <= this");
    census_cmd->add_option("--msc", msc_filter, "Only list classes with this MSC verdict");
    census_cmd->add_option("--scan", scan_name,
                           "Also report classes matching beyond-msc, distance, open, msc-s-ne-m or bound-violation");
    census_cmd->add_option("-k", scan_k, "Distance for --scan distance");

    int rm_m = 4;
    std::string rm_state = "zero";
    auto *rm_cmd = app.add_subcommand("rm", "Reed-Muller CSS code and its logical-state graph");
    rm_cmd->add_option("-m,--m", rm_m, "Order parameter, 3..6")->check(CLI::Range(3, 6));
    rm_cmd->add_option("-s,--state", rm_state, "zero or plus")->check(CLI::IsMember({"zero", "plus"}));

    uint64_t seed = 0;
    int pairs = 1;
    bool no_base = false;
    std::optional<double> theta;
    auto *gen_cmd = app.add_subcommand("gen-instance", "Random local-unitary instance for a graph");
    gen_cmd->add_option("-g,--graph", graph_text, "graph6 string or edge list");
    gen_cmd->add_option("--graph-file", graph_file, "File holding the graph text");
    gen_cmd->add_option("--seed", seed, "Random seed");
    gen_cmd->add_option("--pairs", pairs, "Number of phase pairs")->check(CLI::NonNegativeNumber);
    gen_cmd->add_flag("--no-base", no_base, "Skip the random base Clifford");
    gen_cmd->add_option("--theta", theta, "Fixed rotation angle");
    gen_cmd->add_option("-o,--out", out_path, "Write the instance to this file");

    std::string instance_path;
    auto *construct_cmd = app.add_subcommand("construct-lc", "Turn a local-unitary instance into a local Clifford");
    construct_cmd->add_option("instance", instance_path, "Instance JSON")->required();
    construct_cmd->add_option("-o,--out", out_path, "Write the result to this file");

    std::string result_path;
    bool dense = false;
    auto *verify_cmd = app.add_subcommand("verify", "Check that K maps S' onto S(G)");
    verify_cmd->add_option("result", result_path, "JSON with graph, s_prime and k")->required();
    verify_cmd->add_flag("--dense", dense, "Also compare state vectors (n <= 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
    Envelope env;
    int status = kOk;
    try {
        if (*analyze_cmd) {
            env.command = "analyze";
            Graph g = read_graph_arg(graph_text, graph_file);
            env.inputs["graph"] = graph_to_json(g);
            env.results = analyze(g, profile);
        } else if (*census_cmd) {
            env.command = "census";
            CensusConfig config;
            config.jobs = jobs;
            config.orbit_cap = orbit_cap_from_env();
            config.min_distance = min_distance;
            config.max_distance = max_distance;
            config.msc = msc_filter;
            CensusReport report;
            if (!census_input.empty()) {
                std::ifstream in(census_input);
                if (!in) {
                    throw ParseError("cannot open " + census_input);
                }
                std::vector<Graph> graphs = read_graph6_stream(in);
                if (graphs.empty()) {
                    throw ParseError(census_input + " holds no graphs");
                }
                config.n = graphs.front().n;
                env.inputs["input"] = census_input;
                report = classify_lc_classes(graphs, config);
            } else {
                if (census_n == 0) {
                    throw ParseError("census needs --n or --input");
                }
                config.n = census_n;
                env.inputs["n"] = census_n;
                report = run_census(config);
            }
            env.inputs["jobs"] = jobs;
            Json rep = census_to_json(report);
            if (!scan_name.empty()) {
                auto pred = parse_scan_predicate(scan_name);
                if (!pred) {
                    throw ParseError("unknown scan predicate \"" + scan_name + "\"");
                }
                Json hits = Json::array();
                for (const auto &r : scan(report, *pred, scan_k)) {
                    hits.push_back(class_record_to_json(r));
                }
                rep["scan"] = {{"predicate", scan_name}, {"k", scan_k}, {"classes", hits}};
            }
            if (!out_path.empty()) {
                write_file(out_path, rep);
            }
            env.results = rep;
            std::cerr << summary_table(report);
        } else if (*rm_cmd) {
            env.command = "rm";
            env.inputs = {{"m", rm_m}, {"state", rm_state}};
            env.results = rm_report(rm_m, rm_state == "zero" ? LogicalState::kZero : LogicalState::kPlus);
        } else if (*gen_cmd) {
            env.command = "gen-instance";
            Graph g = read_graph_arg(graph_text, graph_file);
            InstanceOptions opts;
            opts.num_phase_pairs = pairs;
            opts.use_base_clifford = !no_base;
            opts.theta = theta;
            env.inputs = {{"graph", graph_to_json(g)}, {"seed", seed}, {"pairs", pairs}, {"base", !no_base}};
            Json inst = instance_to_json(generate_instance(g, seed, opts));
            if (!out_path.empty()) {
                write_file(out_path, inst);
            }
            env.results = inst;
        } else if (*construct_cmd) {
            env.command = "construct-lc";
            env.inputs["instance"] = instance_path;
            LUInstance inst = instance_from_json(read_json_file(instance_path));
            LCResult r = construct_lc(inst.graph, inst.s_prime, inst.u);
            Json res = lc_result_to_json(inst.graph, inst.s_prime, r);
            if (!out_path.empty()) {
                write_file(out_path, res);
            }
            env.results = res;
        } else if (*verify_cmd) {
            env.command = "verify";
            env.inputs["result"] = result_path;
            Json j = read_json_file(result_path);
            Graph g;
            StabilizerGroup s;
            LocalCliffordOp k;
            try {
                g = graph_from_json(j.at("graph"));
                s = stabilizer_from_json(j.at("s_prime"));
                k = clifford_op_from_json(j.at("k"));
            } catch (const nlohmann::json::exception &e) {
                throw ParseError(std::string("verify input: ") + e.what());
            }
            if (s.n != g.n || static_cast<int>(k.size()) != g.n) {
                throw DimensionError("graph, s_prime and k disagree on the qubit count");
            }
            bool ok = verify_lc(g, s, k, dense);
            env.results = {{"verified", ok}, {"dense", dense && g.n <= kMaxDenseQubits}};
            status = ok ? kOk : kFalse;
        }
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const DimensionError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const DisconnectedGraphError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const InvalidGroupError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const NonUnitaryError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const CapabilityError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapability;
    } catch (const ResourceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapability;
    } catch (const Fact1Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFact1;
    } catch (const UnsupportedClassError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupported;
    }
    emit(env, elapsed(), std::cout);
    return status;
}
