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

#include "qhard/ring.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace qhard {

namespace {

// x * sqrt(2) with sqrt(2) = w - w^3.
std::array<BigInt, 4> times_sqrt2(const std::array<BigInt, 4> &x) {
    return {x[1] - x[3], x[0] + x[2], x[1] + x[3], x[2] - x[0]};
}

bool is_even(const BigInt &v) {
    return !boost::multiprecision::bit_test(v, 0);
}

size_t hash_bigint(const BigInt &v) {
    if (boost::multiprecision::msb(abs(v) + 1) < 62) {
        return std::hash<long long>{}(v.convert_to<long long>());
    }
    return std::hash<std::string>{}(v.str());
}

}  // namespace

RingElement::RingElement(BigInt a, BigInt b, BigInt c, BigInt d, int k)
    : coeffs_{std::move(a), std::move(b), std::move(c), std::move(d)}, k_(k) {
    normalize();
}

RingElement RingElement::from_int(long long value) {
    return RingElement(value, 0, 0, 0, 0);
}

RingElement RingElement::omega_power(int k) {
    return from_int(1).times_omega(k);
}

RingElement RingElement::inv_sqrt2_power(int k) {
    return RingElement(1, 0, 0, 0, k);
}

bool RingElement::is_zero() const {
    return coeffs_[0].is_zero() && coeffs_[1].is_zero() && coeffs_[2].is_zero() && coeffs_[3].is_zero();
}

void RingElement::normalize() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ < 0) {
        coeffs_ = times_sqrt2(coeffs_);
        k_++;
    }
    // x is divisible by sqrt(2) iff a + c and b + d are even; then x / sqrt(2) = x sqrt(2) / 2.
    while (k_ > 0 && is_even(coeffs_[0] + coeffs_[2]) && is_even(coeffs_[1] + coeffs_[3])) {
        auto &x = coeffs_;
        std::array<BigInt, 4> half{(x[1] - x[3]) / 2, (x[0] + x[2]) / 2, (x[1] + x[3]) / 2, (x[2] - x[0]) / 2};
        coeffs_ = std::move(half);
        k_--;
    }
}

RingElement RingElement::operator+(const RingElement &other) const {
    RingElement r = *this;
    r += other;
    return r;
}

RingElement &RingElement::operator+=(const RingElement &other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    std::array<BigInt, 4> lhs = coeffs_;
    std::array<BigInt, 4> rhs = other.coeffs_;
    int k = std::max(k_, other.k_);
    for (int i = k_; i < k; i++) lhs = times_sqrt2(lhs);
    for (int i = other.k_; i < k; i++) rhs = times_sqrt2(rhs);
    for (size_t i = 0; i < 4; i++) lhs[i] += rhs[i];
    coeffs_ = std::move(lhs);
    k_ = k;
    normalize();
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto &c : r.coeffs_) c = -c;
    return r;
}

RingElement RingElement::operator-(const RingElement &other) const {
    return *this + (-other);
}

RingElement &RingElement::operator-=(const RingElement &other) {
    return *this += -other;
}

RingElement RingElement::operator*(const RingElement &other) const {
    if (is_zero() || other.is_zero()) return {};
    const auto &x = coeffs_;
    const auto &y = other.coeffs_;
    // w^4 = -1 folds the degree 4..6 terms back with a sign flip.
    BigInt r0 = x[0] * y[0] - x[1] * y[3] - x[2] * y[2] - x[3] * y[1];
    BigInt r1 = x[0] * y[1] + x[1] * y[0] - x[2] * y[3] - x[3] * y[2];
    BigInt r2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0] - x[3] * y[3];
    BigInt r3 = x[0] * y[3] + x[1] * y[2] + x[2] * y[1] + x[3] * y[0];
    return RingElement(std::move(r0), std::move(r1), std::move(r2), std::move(r3), k_ + other.k_);
}

RingElement RingElement::conjugate() const {
    // conj(w^j) = w^{8-j} = -w^{4-j}.
    RingElement r;
    r.coeffs_ = {coeffs_[0], -coeffs_[3], -coeffs_[2], -coeffs_[1]};
    r.k_ = k_;
    return r;
}

RingElement RingElement::times_omega(int k) const {
    k = ((k % 8) + 8) % 8;
    RingElement r = *this;
    for (int i = 0; i < k; i++) {
        auto &x = r.coeffs_;
        std::array<BigInt, 4> rotated{-x[3], x[0], x[1], x[2]};
        x = std::move(rotated);
    }
    return r;
}

RingElement RingElement::scaled_down(int j) const {
    RingElement r = *this;
    if (r.is_zero()) return r;
    r.k_ += j;
    r.normalize();
    return r;
}

std::optional<int> RingElement::omega_exponent() const {
    if (k_ != 0) return std::nullopt;
    int nonzero = -1;
    for (int i = 0; i < 4; i++) {
        if (!coeffs_[i].is_zero()) {
            if (nonzero >= 0) return std::nullopt;
            nonzero = i;
        }
    }
    if (nonzero < 0) return std::nullopt;
    if (coeffs_[nonzero] == 1) return nonzero;
    if (coeffs_[nonzero] == -1) return nonzero + 4;
    return std::nullopt;
}

std::complex<double> RingElement::to_complex() const {
    const double r = std::sqrt(0.5);
    double a = coeffs_[0].convert_to<double>();
    double b = coeffs_[1].convert_to<double>();
    double c = coeffs_[2].convert_to<double>();
    double d = coeffs_[3].convert_to<double>();
    std::complex<double> v(a + (b - d) * r, c + (b + d) * r);
    return v * std::pow(r, k_);
}

std::string RingElement::to_string() const {
    std::ostringstream out;
    out << "(" << coeffs_[0] << "," << coeffs_[1] << "," << coeffs_[2] << "," << coeffs_[3] << ";k=" << k_ << ")";
    return out.str();
}

size_t RingElement::hash() const {
    size_t h = static_cast<size_t>(k_) * 0x9e3779b97f4a7c15ull;
    for (const auto &c : coeffs_) {
        h ^= hash_bigint(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::strong_ordering RingElement::operator<=>(const RingElement &other) const {
    for (size_t i = 0; i < 4; i++) {
        if (coeffs_[i] < other.coeffs_[i]) return std::strong_ordering::less;
        if (coeffs_[i] > other.coeffs_[i]) return std::strong_ordering::greater;
    }
    return k_ <=> other.k_;
}

}  // namespace qhard
