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

#ifndef POLYSEA_CONFIG_HPP
#define POLYSEA_CONFIG_HPP

#include "polysea/errors.hpp"

namespace polysea {

/// The truncation parameter n >= 2 that fixes one instance of the whole
/// construction: polynomials carry degrees 1..n-1, the product maps cut at
/// degree n-1 and read the carry off degree n. Values built against different
/// configs never mix.
class AlgebraConfig {
public:
    explicit AlgebraConfig(int n) : n_(n) {
        if (n < 2) throw DomainError("algebra parameter n must be >= 2");
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    /// Highest stored degree, n - 1.
    [[nodiscard]] int max_degree() const noexcept { return n_ - 1; }

    friend bool operator==(const AlgebraConfig&, const AlgebraConfig&) noexcept = default;

private:
    int n_;
};

inline void require_same_config(const AlgebraConfig& a, const AlgebraConfig& b) {
    if (!(a == b)) throw ConfigMismatch("operands belong to different algebra configs");
}

}  // namespace polysea

#endif  // POLYSEA_CONFIG_HPP
