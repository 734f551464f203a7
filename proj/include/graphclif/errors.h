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

#ifndef GRAPHCLIF_ERRORS_H
#define GRAPHCLIF_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphclif {

/// Operands disagree on qubit/vertex count.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (Pauli strings, graph6, edge lists, JSON payloads).
struct ParseError : std::invalid_argument {
    ParseError(const std::string &msg, size_t position)
        : std::invalid_argument(msg + " (at position " + std::to_string(position) + ")"), position(position) {
    }
    explicit ParseError(const std::string &msg) : std::invalid_argument(msg), position(0) {
    }
    size_t position;
};

/// The request exceeds what an exhaustive method can handle (e.g. n too large for full enumeration).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A bounded search (LC orbit closure, fallback search) exceeded its cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generators violate the stabilizer group invariants.
struct InvalidGroupError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DisconnectedGraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The (S', U) pair handed to CONSTRUCT-LC is not consistent with U mapping |psi'> onto |psi_G>.
struct Fact1Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitaryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace graphclif

#endif
