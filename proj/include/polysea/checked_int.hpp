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

#ifndef POLYSEA_CHECKED_INT_HPP
#define POLYSEA_CHECKED_INT_HPP

#include <compare>
#include <cstdint>
#include <ostream>

#include "polysea/errors.hpp"

namespace polysea {

/// 64-bit integer whose +, -, * throw OverflowError instead of wrapping.
/// Every coefficient and every m-component in the library is an Int, so no
/// axiom check can pass by accident of modular arithmetic.
class Int {
public:
    constexpr Int() noexcept = default;
    constexpr Int(std::int64_t v) noexcept : v_(v) {}  // NOLINT: implicit by design

    [[nodiscard]] constexpr std::int64_t value() const noexcept { return v_; }

    friend Int operator+(Int a, Int b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("integer addition overflowed");
        return Int(r);
    }
    friend Int operator-(Int a, Int b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("integer subtraction overflowed");
        return Int(r);
    }
    friend Int operator*(Int a, Int b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("integer multiplication overflowed");
        return Int(r);
    }
    Int operator-() const { return Int(0) - *this; }

    Int& operator+=(Int b) { return *this = *this + b; }
    Int& operator-=(Int b) { return *this = *this - b; }
    Int& operator*=(Int b) { return *this = *this * b; }

    [[nodiscard]] Int abs() const { return v_ < 0 ? -*this : *this; }
    [[nodiscard]] constexpr int signum() const noexcept { return (v_ > 0) - (v_ < 0); }

    friend constexpr bool operator==(Int, Int) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(Int, Int) noexcept = default;

    friend std::ostream& operator<<(std::ostream& os, Int x) { return os << x.v_; }

private:
    std::int64_t v_ = 0;
};

}  // namespace polysea

#endif  // POLYSEA_CHECKED_INT_HPP
