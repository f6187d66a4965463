// Copyright 2026 The polysea Authors
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

#ifndef POLYSEA_ERRORS_HPP
#define POLYSEA_ERRORS_HPP

#include <stdexcept>

namespace polysea {

/// Thrown whenever a checked 64-bit operation would wrap. Arithmetic in this
/// library is exact by contract; silent wraparound is never allowed to stand
/// in for a result, so overflow gets its own exception type.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Operands built against different truncation parameters n. The product maps
/// change meaning with n, so this is a hard error rather than a re-truncation.
struct ConfigMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value violates its domain constraint: a polynomial whose first nonzero
/// coefficient is negative, an element with p = q = 0 and m < 0, or a
/// difference requested where none exists.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed polynomial, element, or expression text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration window whose cardinality exceeds the configured cap.
/// Enumeration refuses rather than thrashing.
struct WindowTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace polysea

#endif  // POLYSEA_ERRORS_HPP
