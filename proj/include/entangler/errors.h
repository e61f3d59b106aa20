// Copyright 2026 The Entangler Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entangler {

/// Bad input to a library call (qubit out of range, malformed config, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested computation exceeds a hard size limit.
struct ResourceError : std::length_error {
    using std::length_error::length_error;
};

/// Unknown catalog name.
struct LookupError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Circuit text that does not match the grammar. Line and column are 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string &message, std::size_t line, std::size_t column);

    std::size_t line;
    std::size_t column;
};

}  // namespace entangler
