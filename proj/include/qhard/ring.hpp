// Copyright 2026 The qhard Authors
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

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qhard {

using BigInt = boost::multiprecision::cpp_int;

/// An element (a + b w + c w^2 + d w^3) / sqrt(2)^k of Z[w, 1/sqrt(2)], w = e^{i pi/4}.
///
/// Values are kept in canonical form: either k = 0 or the numerator is not divisible by sqrt(2). Canonical
/// forms of equal values are coefficient-wise identical, so == is exact equality.
class RingElement {
   public:
    RingElement() = default;
    RingElement(BigInt a, BigInt b, BigInt c, BigInt d, int k = 0);

    static RingElement from_int(long long value);
    /// w^k for any integer k.
    static RingElement omega_power(int k);
    /// 1 / sqrt(2)^k.
    static RingElement inv_sqrt2_power(int k);

    const BigInt &coefficient(size_t i) const {
        return coeffs_[i];
    }
    int k() const {
        return k_;
    }
    bool is_zero() const;

    RingElement operator+(const RingElement &other) const;
    RingElement operator-(const RingElement &other) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement &other) const;
    RingElement &operator+=(const RingElement &other);
    RingElement &operator-=(const RingElement &other);

    RingElement conjugate() const;
    /// Multiplies by w^k (exact coefficient rotation).
    RingElement times_omega(int k) const;
    /// Divides by sqrt(2)^j.
    RingElement scaled_down(int j = 1) const;

    /// Returns k when the value is exactly w^k, k in [0, 8).
    std::optional<int> omega_exponent() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;
    size_t hash() const;

    bool operator==(const RingElement &other) const = default;
    /// Lexicographic on (a, b, c, d, k); any total order on canonical forms works for canonicalization.
    std::strong_ordering operator<=>(const RingElement &other) const;

   private:
    void normalize();

    std::array<BigInt, 4> coeffs_{};
    int k_ = 0;
};

}  // namespace qhard
