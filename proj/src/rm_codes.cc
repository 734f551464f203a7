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

#include "graphclif/rm_codes.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "graphclif/errors.h"

namespace graphclif {

namespace {

void check_m(int m) {
    if (m < 3 || m > 6) {
        throw DimensionError("Reed-Muller order m must lie in [3, 6]");
    }
}

uint64_t word_mask(int n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

/// Reduced row echelon form; pivots[i] is the pivot column of rows[i].
void rref(std::vector<uint64_t> &rows, std::vector<int> &pivots, int n) {
    pivots.clear();
    size_t next = 0;
    for (int col = 0; col < n && next < rows.size(); col++) {
        uint64_t bit = uint64_t{1} << col;
        size_t found = next;
        while (found < rows.size() && !(rows[found] & bit)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && (rows[r] & bit)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(col);
        next++;
    }
    rows.resize(next);
}

/// Lexicographic order of the words as strings with coordinate 0 leftmost.
bool lex_less(uint64_t a, uint64_t b, int n) {
    for (int j = 0; j < n; j++) {
        int x = (a >> j) & 1;
        int y = (b >> j) & 1;
        if (x != y) {
            return x < y;
        }
    }
    return false;
}

}  // namespace

BinaryCode make_code(int n, const std::vector<uint64_t> &rows) {
    if (n < 1 || n > 64) {
        throw DimensionError("code length must lie in [1, 64]");
    }
    BinaryCode c{n, rows};
    for (auto &r : c.rows) {
        r &= word_mask(n);
    }
    std::vector<int> pivots;
    rref(c.rows, pivots, n);
    return c;
}

BinaryCode rm1(int m) {
    check_m(m);
    int n = 1 << m;
    std::vector<uint64_t> rows{word_mask(n)};
    for (int i = 0; i < m; i++) {
        uint64_t row = 0;
        for (int p = 0; p < n; p++) {
            if ((p >> i) & 1) {
                row |= uint64_t{1} << p;
            }
        }
        rows.push_back(row);
    }
    return make_code(n, rows);
}

BinaryCode puncture_first(const BinaryCode &c) {
    std::vector<uint64_t> rows;
    for (uint64_t r : c.rows) {
        rows.push_back(r >> 1);
    }
    return make_code(c.n - 1, rows);
}

BinaryCode even_subcode(const BinaryCode &c) {
    std::vector<uint64_t> rows;
    uint64_t odd = 0;
    bool have_odd = false;
    for (uint64_t r : c.rows) {
        if (std::popcount(r) % 2 == 0) {
            rows.push_back(r);
        } else if (!have_odd) {
            odd = r;
            have_odd = true;
        } else {
            rows.push_back(r ^ odd);
        }
    }
    return make_code(c.n, rows);
}

BinaryCode dual(const BinaryCode &c) {
    std::vector<uint64_t> rows = c.rows;
    std::vector<int> pivots;
    rref(rows, pivots, c.n);
    uint64_t pivot_mask = 0;
    for (int p : pivots) {
        pivot_mask |= uint64_t{1} << p;
    }
    std::vector<uint64_t> out;
    for (int f = 0; f < c.n; f++) {
        if ((pivot_mask >> f) & 1) {
            continue;
        }
        uint64_t v = uint64_t{1} << f;
        for (size_t i = 0; i < rows.size(); i++) {
            if ((rows[i] >> f) & 1) {
                v |= uint64_t{1} << pivots[i];
            }
        }
        out.push_back(v);
    }
    return make_code(c.n, out);
}

bool contains(const BinaryCode &c, uint64_t word) {
    std::vector<uint64_t> rows = c.rows;
    std::vector<int> pivots;
    rref(rows, pivots, c.n);
    for (size_t i = 0; i < rows.size(); i++) {
        if ((word >> pivots[i]) & 1) {
            word ^= rows[i];
        }
    }
    return word == 0;
}

std::vector<uint64_t> codewords(const BinaryCode &c) {
    if (c.k() > 24) {
        throw CapabilityError("codeword enumeration is limited to dimension 24");
    }
    std::vector<uint64_t> out;
    out.reserve(size_t{1} << c.k());
    uint64_t cur = 0;
    out.push_back(cur);
    for (uint64_t i = 1; i < (uint64_t{1} << c.k()); i++) {
        cur ^= c.rows[std::countr_zero(i)];
        out.push_back(cur);
    }
    return out;
}

int min_distance(const BinaryCode &c) {
    if (c.k() == 0) {
        return 0;
    }
    if (c.k() <= 24) {
        int best = c.n + 1;
        for (uint64_t w : codewords(c)) {
            if (w) {
                best = std::min(best, std::popcount(w));
            }
        }
        return best;
    }
    // A weight-w codeword is a set of w parity-check columns summing to zero.
    BinaryCode h = dual(c);
    std::vector<uint64_t> cols(c.n, 0);
    for (int j = 0; j < c.n; j++) {
        for (int i = 0; i < h.k(); i++) {
            cols[j] |= ((h.rows[i] >> j) & uint64_t{1}) << i;
        }
    }
    for (int w = 1; w <= c.n; w++) {
        std::vector<int> idx(w);
        for (int i = 0; i < w; i++) {
            idx[i] = i;
        }
        long long budget = 200'000'000;
        while (true) {
            uint64_t sum = 0;
            for (int i : idx) {
                sum ^= cols[i];
            }
            if (sum == 0) {
                return w;
            }
            if (--budget == 0) {
                throw CapabilityError("minimum distance search exceeded its budget");
            }
            int i = w - 1;
            while (i >= 0 && idx[i] == c.n - w + i) {
                i--;
            }
            if (i < 0) {
                break;
            }
            idx[i]++;
            for (int j = i + 1; j < w; j++) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return 0;
}

CSSCode build_css(int m) {
    check_m(m);
    CSSCode css;
    css.m = m;
    css.c1 = puncture_first(rm1(m));
    css.c2 = even_subcode(css.c1);
    css.n = css.c1.n;
    css.x_rows = css.c2.rows;
    css.z_rows = dual(css.c1).rows;
    for (uint64_t x : css.x_rows) {
        for (uint64_t z : css.z_rows) {
            if (std::popcount(x & z) % 2) {
                throw std::logic_error("CSS construction: X and Z rows do not commute");
            }
        }
    }
    for (uint64_t r : css.c2.rows) {
        if (!contains(css.c1, r)) {
            throw std::logic_error("CSS construction: C2 is not contained in C1");
        }
    }
    int target = (1 << (m - 1)) - 1;
    bool found = false;
    for (uint64_t w : codewords(css.c1)) {
        if (std::popcount(w) != target || contains(css.c2, w)) {
            continue;
        }
        if (!found || lex_less(w, css.logical_x, css.n)) {
            css.logical_x = w;
            found = true;
        }
    }
    css.logical_z = word_mask(css.n);
    if (!found || std::popcount(css.logical_x & css.logical_z) % 2 == 0) {
        throw std::logic_error("CSS construction: logical operators do not anticommute");
    }
    if (static_cast<int>(css.x_rows.size() + css.z_rows.size()) != css.n - 1) {
        throw std::logic_error("CSS construction: expected n-1 stabilizer generators");
    }
    return css;
}

int css_distance(const CSSCode &css) {
    int dx = css.n + 1;
    for (uint64_t w : codewords(css.c1)) {
        if (!contains(css.c2, w)) {
            dx = std::min(dx, std::popcount(w));
        }
    }
    // C2-dual \ C1-dual: Hamming words of odd weight, i.e. the dual of C2 outside the even part.
    BinaryCode c2_dual = dual(css.c2);
    BinaryCode c1_dual = dual(css.c1);
    int dz = css.n + 1;
    if (c2_dual.k() <= 24) {
        for (uint64_t w : codewords(c2_dual)) {
            if (!contains(c1_dual, w)) {
                dz = std::min(dz, std::popcount(w));
            }
        }
    } else {
        // Odd-weight words of a code whose even part is c1_dual: min over low weights.
        dz = min_distance(c2_dual);
        if (dz % 2 == 0) {
            throw CapabilityError("Z distance search needs odd-weight enumeration");
        }
    }
    return std::min(dx, dz);
}

std::string to_string(LogicalState s) {
    return s == LogicalState::kZero ? "zero" : "plus";
}

StabilizerGroup logical_state_stabilizer(const CSSCode &css, LogicalState state) {
    StabilizerGroup s{css.n, {}};
    for (uint64_t r : css.x_rows) {
        s.generators.push_back(PauliOperator{css.n, r, 0, 0});
    }
    for (uint64_t r : css.z_rows) {
        s.generators.push_back(PauliOperator{css.n, 0, r, 0});
    }
    if (state == LogicalState::kZero) {
        s.generators.push_back(PauliOperator{css.n, 0, css.logical_z, 0});
    } else {
        s.generators.push_back(PauliOperator{css.n, css.logical_x, 0, 0});
    }
    validate(s);
    return s;
}

TransversalCheck transversal_weight_check(int m) {
    CSSCode css = build_css(m);
    TransversalCheck t;
    for (uint64_t w : codewords(css.c2)) {
        t.c2_weights.insert(std::popcount(w));
    }
    for (uint64_t w : codewords(css.c1)) {
        if (!contains(css.c2, w)) {
            t.coset_weights.insert(std::popcount(w));
        }
    }
    int half = 1 << (m - 1);
    std::set<int> c2_allowed{0, half};
    std::set<int> coset_allowed{half - 1, 2 * half - 1};
    t.ok = std::includes(c2_allowed.begin(), c2_allowed.end(), t.c2_weights.begin(), t.c2_weights.end()) &&
           std::includes(coset_allowed.begin(), coset_allowed.end(), t.coset_weights.begin(),
                         t.coset_weights.end());
    return t;
}

}  // namespace graphclif
