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

#include "graphclif/stabilizer.h"

#include <algorithm>
#include <limits>
#include <omp.h>

#include "graphclif/errors.h"

namespace graphclif {

namespace {

using Vec128 = unsigned __int128;

Vec128 pack(const PauliOperator &p) {
    return (static_cast<Vec128>(p.z) << 64) | p.x;
}

int lowest_bit(Vec128 v) {
    uint64_t lo = static_cast<uint64_t>(v);
    if (lo) {
        return std::countr_zero(lo);
    }
    return 64 + std::countr_zero(static_cast<uint64_t>(v >> 64));
}

/// Incremental GF(2) basis over 128-bit symplectic vectors with combination tracking.
struct Gf2Basis {
    std::vector<Vec128> rows;
    std::vector<uint64_t> combos;
    std::vector<int> pivots;

    /// Returns true if v was independent of the existing rows.
    bool insert(Vec128 v, uint64_t combo) {
        reduce(v, combo);
        if (v == 0) {
            return false;
        }
        rows.push_back(v);
        combos.push_back(combo);
        pivots.push_back(lowest_bit(v));
        return true;
    }

    void reduce(Vec128 &v, uint64_t &combo) const {
        for (size_t i = 0; i < rows.size(); i++) {
            if ((v >> pivots[i]) & 1) {
                v ^= rows[i];
                combo ^= combos[i];
            }
        }
    }
};

int min_weight_walk(const uint64_t *gx, const uint64_t *gz, int count, uint64_t start_x, uint64_t start_z,
                    bool skip_first) {
    int best = std::numeric_limits<int>::max();
    uint64_t cx = start_x;
    uint64_t cz = start_z;
    if (!skip_first) {
        best = std::popcount(cx | cz);
    }
    uint64_t total = uint64_t{1} << count;
    for (uint64_t k = 1; k < total; k++) {
        int j = std::countr_zero(k);
        cx ^= gx[j];
        cz ^= gz[j];
        int w = std::popcount(cx | cz);
        best = w < best ? w : best;
    }
    return best;
}

}  // namespace

int symplectic_rank(const std::vector<PauliOperator> &rows) {
    Gf2Basis basis;
    int rank = 0;
    for (const auto &p : rows) {
        rank += basis.insert(pack(p), 0);
    }
    return rank;
}

void validate(const StabilizerGroup &s) {
    if (s.n < 1 || s.n > kMaxQubits) {
        throw InvalidGroupError("stabilizer qubit count outside [1, 63]");
    }
    if (static_cast<int>(s.generators.size()) != s.n) {
        throw InvalidGroupError("a stabilizer state on n qubits needs exactly n generators");
    }
    for (size_t i = 0; i < s.generators.size(); i++) {
        const auto &g = s.generators[i];
        if (g.n != s.n) {
            throw InvalidGroupError("generator " + std::to_string(i + 1) + " has the wrong length");
        }
        if (!g.is_hermitian()) {
            throw InvalidGroupError("generator " + std::to_string(i + 1) + " is not Hermitian");
        }
        for (size_t j = 0; j < i; j++) {
            if (!commutes(g, s.generators[j])) {
                throw InvalidGroupError("generators " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                        " anticommute");
            }
        }
    }
    if (symplectic_rank(s.generators) != s.n) {
        throw InvalidGroupError("generators are not independent");
    }
}

std::vector<PauliOperator> enumerate_elements(const StabilizerGroup &s) {
    std::vector<PauliOperator> out;
    out.reserve(size_t{1} << s.generators.size());
    for_each_element(s, [&](const PauliOperator &p) { out.push_back(p); });
    return out;
}

int distance_serial(const StabilizerGroup &s) {
    std::vector<uint64_t> gx, gz;
    for (const auto &g : s.generators) {
        gx.push_back(g.x);
        gz.push_back(g.z);
    }
    return min_weight_walk(gx.data(), gz.data(), static_cast<int>(gx.size()), 0, 0, true);
}

int distance_parallel(const StabilizerGroup &s, int chunk_bits) {
    int k = static_cast<int>(s.generators.size());
    int c = std::clamp(chunk_bits, 0, k);
    int low = k - c;
    std::vector<uint64_t> gx, gz;
    for (const auto &g : s.generators) {
        gx.push_back(g.x);
        gz.push_back(g.z);
    }
    const uint64_t *px = gx.data();
    const uint64_t *pz = gz.data();
    int64_t chunks = int64_t{1} << c;
    int best = std::numeric_limits<int>::max();
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
    for (int64_t chunk = 0; chunk < chunks; chunk++) {
        uint64_t sx = 0, sz = 0;
        for (int j = 0; j < c; j++) {
            if ((chunk >> j) & 1) {
                sx ^= px[low + j];
                sz ^= pz[low + j];
            }
        }
        int w = min_weight_walk(px, pz, low, sx, sz, chunk == 0);
        best = w < best ? w : best;
    }
    return best;
}

int distance(const StabilizerGroup &s) {
    if (s.generators.size() >= 22 && omp_get_max_threads() > 1) {
        return distance_parallel(s);
    }
    return distance_serial(s);
}

namespace {

/// Counts of elements per support mask (index = support), n <= kMaxProfileQubits.
std::vector<uint32_t> support_counts(const StabilizerGroup &s) {
    if (s.n > kMaxProfileQubits) {
        throw CapabilityError("support analysis enumerates 2^n elements and is limited to n <= 20; use "
                              "distance-only mode for larger states");
    }
    std::vector<uint32_t> counts(size_t{1} << s.n, 0);
    uint64_t cx = 0, cz = 0;
    counts[0]++;
    uint64_t total = uint64_t{1} << s.generators.size();
    for (uint64_t k = 1; k < total; k++) {
        const auto &g = s.generators[std::countr_zero(k)];
        cx ^= g.x;
        cz ^= g.z;
        counts[cx | cz]++;
    }
    return counts;
}

/// minimal[w] != 0 iff some element has support exactly w and none has a non-empty support strictly inside w.
std::vector<uint8_t> minimal_flags(const std::vector<uint32_t> &counts, int n) {
    size_t size = counts.size();
    std::vector<uint8_t> below(size, 0);
    for (size_t w = 1; w < size; w++) {
        below[w] = counts[w] != 0;
    }
    // Subset-OR (zeta) transform: below[w] = some non-empty support is a subset of w.
    for (int b = 0; b < n; b++) {
        size_t bit = size_t{1} << b;
        for (size_t w = 0; w < size; w++) {
            if (w & bit) {
                below[w] |= below[w ^ bit];
            }
        }
    }
    std::vector<uint8_t> minimal(size, 0);
    for (size_t w = 1; w < size; w++) {
        if (!counts[w]) {
            continue;
        }
        bool is_min = true;
        for (size_t rest = w; rest; rest &= rest - 1) {
            size_t bit = rest & (~rest + 1);
            if (below[w ^ bit]) {
                is_min = false;
                break;
            }
        }
        minimal[w] = is_min;
    }
    return minimal;
}

}  // namespace

SupportProfile support_profile(const StabilizerGroup &s) {
    auto counts = support_counts(s);
    auto minimal = minimal_flags(counts, s.n);
    SupportProfile out;
    out.distance = std::numeric_limits<int>::max();
    for (size_t w = 1; w < counts.size(); w++) {
        if (counts[w]) {
            out.distance = std::min(out.distance, std::popcount(w));
        }
        if (minimal[w]) {
            out.minimal_supports.push_back(w);
            out.a_omega[w] = static_cast<int>(counts[w]);
        }
    }
    return out;
}

MinimalSubgroup minimal_subgroup(const StabilizerGroup &s) {
    auto counts = support_counts(s);
    auto minimal = minimal_flags(counts, s.n);
    MinimalSubgroup out;
    Gf2Basis basis;
    for_each_element(s, [&](const PauliOperator &p) {
        if (minimal[p.support()]) {
            out.generators.push_back(p);
            if (basis.insert(pack(p), 0)) {
                out.basis.push_back(p);
            }
        }
    });
    uint64_t mx = 0, my = 0, mz = 0;
    StabilizerGroup m{s.n, out.basis};
    uint64_t cx = 0, cz = 0;
    uint64_t total = uint64_t{1} << m.generators.size();
    for (uint64_t k = 1; k < total; k++) {
        const auto &g = m.generators[std::countr_zero(k)];
        cx ^= g.x;
        cz ^= g.z;
        mx |= cx & ~cz;
        my |= cx & cz;
        mz |= cz & ~cx;
    }
    out.letters_per_qubit.resize(s.n);
    for (int q = 0; q < s.n; q++) {
        uint8_t l = 0;
        l |= ((mx >> q) & 1) ? kLetterX : 0;
        l |= ((my >> q) & 1) ? kLetterY : 0;
        l |= ((mz >> q) & 1) ? kLetterZ : 0;
        out.letters_per_qubit[q] = l;
    }
    out.equals_full_group = static_cast<int>(out.basis.size()) == s.n;
    return out;
}

MscResult msc_check(const MinimalSubgroup &m) {
    MscResult r;
    r.letters_per_qubit = m.letters_per_qubit;
    r.satisfied = std::all_of(m.letters_per_qubit.begin(), m.letters_per_qubit.end(),
                              [](uint8_t l) { return l == (kLetterX | kLetterY | kLetterZ); });
    return r;
}

MscResult msc_check(const StabilizerGroup &s) {
    return msc_check(minimal_subgroup(s));
}

std::vector<PauliOperator> local_elements(const StabilizerGroup &s, uint64_t omega) {
    // Elements supported in omega form a subgroup: solve for the generator combinations whose
    // (x|z) vector vanishes outside omega, then enumerate that subgroup.
    uint64_t outside = low_mask(s.n) & ~omega;
    Gf2Basis basis;
    std::vector<uint64_t> kernel;
    for (size_t i = 0; i < s.generators.size(); i++) {
        const auto &g = s.generators[i];
        PauliOperator restricted{s.n, g.x & outside, g.z & outside, 0};
        Vec128 v = pack(restricted);
        uint64_t combo = uint64_t{1} << i;
        basis.reduce(v, combo);
        if (v == 0) {
            kernel.push_back(combo);
        } else {
            basis.rows.push_back(v);
            basis.combos.push_back(combo);
            basis.pivots.push_back(lowest_bit(v));
        }
    }
    std::vector<PauliOperator> gens;
    for (uint64_t combo : kernel) {
        PauliOperator p = PauliOperator::identity(s.n);
        for (uint64_t c = combo; c; c &= c - 1) {
            p = multiply(p, s.generators[std::countr_zero(c)]);
        }
        gens.push_back(p);
    }
    return enumerate_elements(StabilizerGroup{s.n, gens});
}

bool decompose(const StabilizerGroup &s, const PauliOperator &p, uint64_t *combination) {
    if (p.n != s.n) {
        throw DimensionError("decompose: operator and group act on different qubit counts");
    }
    Gf2Basis basis;
    for (size_t i = 0; i < s.generators.size(); i++) {
        basis.insert(pack(s.generators[i]), uint64_t{1} << i);
    }
    Vec128 v = pack(p);
    uint64_t combo = 0;
    basis.reduce(v, combo);
    if (v != 0) {
        return false;
    }
    *combination = combo;
    return true;
}

bool is_element(const StabilizerGroup &s, const PauliOperator &p) {
    uint64_t combo = 0;
    if (!decompose(s, p, &combo)) {
        return false;
    }
    PauliOperator r = PauliOperator::identity(s.n);
    for (uint64_t c = combo; c; c &= c - 1) {
        r = multiply(r, s.generators[std::countr_zero(c)]);
    }
    return r.phase == p.phase;
}

bool same_group(const StabilizerGroup &a, const StabilizerGroup &b) {
    if (a.n != b.n) {
        return false;
    }
    for (const auto &g : a.generators) {
        if (!is_element(b, g)) {
            return false;
        }
    }
    return symplectic_rank(a.generators) == symplectic_rank(b.generators);
}

std::string format_letters(uint8_t letters) {
    std::string out;
    if (letters & kLetterX) out += 'X';
    if (letters & kLetterY) out += 'Y';
    if (letters & kLetterZ) out += 'Z';
    return out;
}

}  // namespace graphclif
