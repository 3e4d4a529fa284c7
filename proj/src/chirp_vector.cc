// Copyright 2026 The bssc Authors
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

#include "bssc/chirp_vector.h"

#include <bit>
#include <cmath>

#include "bssc/error.h"

namespace bssc {

namespace {

const cd kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

ChirpVector::ChirpVector(int m, int r) : m_(m), r_(r), phases_(size_t{1} << m, -1) {
}

void ChirpVector::set_phase(uint64_t v, int k) {
    phases_[v] = k < 0 ? -1 : (int8_t)(k & 3);
}

std::vector<uint64_t> ChirpVector::support() const {
    std::vector<uint64_t> out;
    for (uint64_t v = 0; v < phases_.size(); v++) {
        if (phases_[v] >= 0) {
            out.push_back(v);
        }
    }
    return out;
}

uint64_t ChirpVector::support_size() const {
    uint64_t n = 0;
    for (int8_t p : phases_) {
        n += p >= 0;
    }
    return n;
}

std::vector<cd> ChirpVector::to_complex() const {
    double scale = std::pow(2.0, -0.5 * r_);
    std::vector<cd> out(phases_.size());
    for (size_t v = 0; v < phases_.size(); v++) {
        if (phases_[v] >= 0) {
            out[v] = kPowersOfI[phases_[v]] * scale;
        }
    }
    return out;
}

ChirpVector ChirpVector::rotated(int k) const {
    ChirpVector out = *this;
    for (int8_t &p : out.phases_) {
        if (p >= 0) {
            p = (int8_t)((p + k) & 3);
        }
    }
    return out;
}

ChirpVector ChirpVector::canonical() const {
    for (int8_t p : phases_) {
        if (p >= 0) {
            return rotated(4 - p);
        }
    }
    return *this;
}

bool ChirpVector::projectively_equal(const ChirpVector &other) const {
    return m_ == other.m_ && r_ == other.r_ && canonical() == other.canonical();
}

std::optional<ChirpVector> ChirpVector::from_complex(std::span<const cd> v, double tol) {
    uint64_t n = v.size();
    if (n == 0 || !std::has_single_bit(n)) {
        return std::nullopt;
    }
    int m = std::countr_zero(n);
    double norm_sq = 0;
    uint64_t count = 0;
    double peak = 0;
    for (const cd &x : v) {
        norm_sq += std::norm(x);
        peak = std::max(peak, std::abs(x));
    }
    if (peak == 0) {
        return std::nullopt;
    }
    for (const cd &x : v) {
        count += std::abs(x) > 0.5 * peak;
    }
    if (!std::has_single_bit(count)) {
        return std::nullopt;
    }
    int r = std::countr_zero(count);
    double expected = std::pow(2.0, -0.5 * r);
    if (std::abs(norm_sq - 1) > 1e3 * tol) {
        return std::nullopt;
    }
    ChirpVector out(m, r);
    for (uint64_t i = 0; i < n; i++) {
        if (std::abs(v[i]) <= 0.5 * peak) {
            if (std::abs(v[i]) > tol) {
                return std::nullopt;
            }
            continue;
        }
        int best = -1;
        for (int k = 0; k < 4; k++) {
            if (std::abs(v[i] - kPowersOfI[k] * expected) <= tol) {
                best = k;
            }
        }
        if (best < 0) {
            return std::nullopt;
        }
        out.set_phase(i, best);
    }
    return out;
}

double ExactOverlap::norm_sq() const {
    return ((double)re * re + (double)im * im) / std::pow(2.0, log2_den);
}

bool ExactOverlap::norm_sq_equals(uint64_t num, int k) const {
    // (re^2 + im^2) / 2^log2_den == num / 2^k, cross-multiplied in 128 bits.
    unsigned __int128 lhs = (unsigned __int128)(re * re + im * im);
    unsigned __int128 rhs = num;
    if (k > log2_den) {
        lhs <<= (k - log2_den);
    } else {
        rhs <<= (log2_den - k);
    }
    return lhs == rhs;
}

ExactOverlap inner(const ChirpVector &w1, const ChirpVector &w2) {
    if (w1.size() != w2.size()) {
        throw Error(ErrorCode::LengthMismatch, "inner product of different lengths");
    }
    // sum over the common support of i^{k2 - k1}.
    int64_t count[4] = {0, 0, 0, 0};
    const std::vector<int8_t> &p1 = w1.phases(), &p2 = w2.phases();
    for (size_t v = 0; v < p1.size(); v++) {
        if (p1[v] >= 0 && p2[v] >= 0) {
            count[(p2[v] - p1[v]) & 3]++;
        }
    }
    ExactOverlap o;
    o.re = count[0] - count[2];
    o.im = count[1] - count[3];
    o.log2_den = w1.r() + w2.r();
    return o;
}

size_t ChirpVectorHash::operator()(const ChirpVector &w) const {
    uint64_t h = 1469598103934665603ull ^ (uint64_t)w.r();
    for (int8_t p : w.phases()) {
        h = (h ^ (uint8_t)p) * 1099511628211ull;
    }
    return (size_t)h;
}

}  // namespace bssc
