// Copyright 2026 The steerqc Authors
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

#ifndef STEERQC_ERRORS_H
#define STEERQC_ERRORS_H

#include <stdexcept>
#include <string>

namespace steerqc {

/// Operands disagree on qubit count, or a size is out of range.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed Pauli text. `position` is the 0-based offending character.
struct ParseError : std::invalid_argument {
    ParseError(const std::string &msg, size_t position)
        : std::invalid_argument(msg + " (at position " + std::to_string(position) + ")"), position(position) {
    }
    size_t position;
};

/// A Pauli product came out anti-Hermitian where a Hermitian result is required.
struct PhaseError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The tableau is not in the state an operation requires.
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Least-squares or eigen-solve failure.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad configuration value. `field` names the offending key.
struct ConfigError : std::invalid_argument {
    ConfigError(const std::string &field, const std::string &msg)
        : std::invalid_argument(field + ": " + msg), field(field) {
    }
    std::string field;
};

}  // namespace steerqc

#endif
