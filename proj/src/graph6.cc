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

#include "graphclif/graph6.h"

#include "graphclif/errors.h"

namespace graphclif {

std::string encode_graph6(const Graph &g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(63 + g.n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((g.n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((g.n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (g.n & 63)));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < g.n; j++) {
        for (int i = 0; i < j; i++) {
            acc = (acc << 1) | static_cast<int>(g.has_edge(i, j));
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) {
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    }
    return out;
}

Graph decode_graph6(std::string_view text) {
    size_t pos = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) {
        pos = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    auto sextet = [&](size_t at) {
        if (at >= text.size()) {
            throw ParseError("graph6 string is truncated", at);
        }
        int c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) {
            throw ParseError("invalid graph6 character", at);
        }
        return c - 63;
    };
    long n = 0;
    if (pos < text.size() && text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~') {
            throw ParseError("graph6 vertex count above 258047 is not supported", pos);
        }
        n = (sextet(pos + 1) << 12) | (sextet(pos + 2) << 6) | sextet(pos + 3);
        pos += 4;
    } else {
        n = sextet(pos);
        pos += 1;
    }
    if (n > kMaxVertices) {
        throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds 63", 0);
    }
    Graph g(static_cast<int>(n));
    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                             std::to_string(bytes),
                         pos);
    }
    size_t k = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++, k++) {
            int chunk = sextet(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    if (bits % 6) {
        int last = sextet(pos + bytes - 1);
        if (last & ((1 << (6 - bits % 6)) - 1)) {
            throw ParseError("graph6 padding bits are not zero", pos + bytes - 1);
        }
    }
    return g;
}

}  // namespace graphclif
