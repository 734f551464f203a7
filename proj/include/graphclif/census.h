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

#ifndef GRAPHCLIF_CENSUS_H
#define GRAPHCLIF_CENSUS_H

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphclif/canonical.h"
#include "graphclif/classify.h"

namespace graphclif {

/// Number of connected graphs on n vertices up to isomorphism, n <= 11.
int64_t connected_graph_count(int n);

/// Canonical codes (graph_code of the canonical graph) of all graphs on n vertices up to isomorphism,
/// sorted ascending. Orderly generation by canonical augmentation, parallel over parents.
/// n <= 10 for the full set; connected_only also admits n = 11.
std::vector<uint64_t> generate_graph_codes(int n, bool connected_only, int jobs = 1);

/// One representative per isomorphism class of connected graphs, in canonical form. 2 <= n <= 11.
std::vector<Graph> generate_connected_graphs(int n, int jobs = 1);

struct CensusConfig {
    int n = 0;
    int jobs = 1;
    int64_t orbit_cap = kDefaultOrbitCap;
    /// Record filters; class_count and totals always cover every class.
    std::optional<int> min_distance;
    std::optional<int> max_distance;
    std::optional<bool> msc;
};

struct ClassRecord {
    /// Minimum canonical graph6 over the orbit; also the representative.
    std::string key;
    std::string rep_g6;
    int delta = 0;
    bool msc = false;
    bool s_eq_m = false;
    TheoremTag tag = TheoremTag::kOpen;
    /// Isomorphism classes in the local-complementation orbit.
    int64_t orbit_size = 0;
    bool orbit_capped = false;
};

struct CensusReport {
    int n = 0;
    int64_t class_count = 0;
    /// Input graphs seen (after dropping disconnected ones).
    int64_t graphs = 0;
    int64_t skipped_disconnected = 0;
    std::vector<ClassRecord> classes;
    std::map<int, int64_t> by_delta;
    std::map<std::string, int64_t> by_tag;
    /// Classes with delta > 2 and MSC false.
    int64_t beyond_msc = 0;
    /// Classes with MSC true and S != M.
    int64_t msc_s_ne_m = 0;
};

/// Buckets connected graphs on config.n vertices into LC classes. Each orbit is closed once over
/// isomorphism classes; the class tag takes the first criterion met by any member of the orbit.
/// Deterministic for any job count.
CensusReport classify_lc_classes(const std::vector<Graph> &graphs, const CensusConfig &config);

/// Builtin census: generation followed by classification.
CensusReport run_census(const CensusConfig &config);

/// Reference implementation: lc_class_key per input graph and classify_theorem per member.
/// Slow; meant for cross-checking small n.
CensusReport classify_lc_classes_serial(const std::vector<Graph> &graphs, const CensusConfig &config);

/// Reads one graph6 string per line; blank lines and lines starting with '#' are ignored.
/// Throws ParseError naming the line on malformed input or mixed vertex counts.
std::vector<Graph> read_graph6_stream(std::istream &in);

enum class ScanPredicate { kBeyondMsc, kDistance, kOpen, kMscNotFull, kBoundViolation };
std::optional<ScanPredicate> parse_scan_predicate(const std::string &name);
std::string to_string(ScanPredicate p);

/// kBeyondMsc: delta > 2 and MSC false. kMscNotFull: MSC true and S != M.
/// kDistance matches delta == k.
std::vector<ClassRecord> scan(const CensusReport &report, ScanPredicate predicate, int k = 0);

/// Human-readable totals table.
std::string summary_table(const CensusReport &report);

}  // namespace graphclif

#endif
