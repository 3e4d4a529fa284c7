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

#include "bssc/fwht.h"

#include <atomic>
#include <bit>

#include "bssc/error.h"

namespace bssc {

namespace {

std::atomic<bool> g_fault{false};

template <typename T>
void butterflies(std::span<T> a, size_t first_stride, size_t last_stride) {
    bool fault = g_fault.load(std::memory_order_relaxed);
    for (size_t h = first_stride; h < last_stride; h <<= 1) {
        for (size_t i = 0; i < a.size(); i += 2 * h) {
            for (size_t j = i; j < i + h; j++) {
                T x = a[j], y = a[j + h];
                a[j] = x + y;
                a[j + h] = fault ? y - x : x - y;
            }
        }
    }
}

void check_length(size_t n) {
    if (n == 0 || !std::has_single_bit(n)) {
        throw Error(ErrorCode::LengthMismatch, "transform length must be a power of two");
    }
}

}  // namespace

void fwht(std::span<std::complex<double>> a) {
    check_length(a.size());
    butterflies(a, 1, a.size());
}

void fwht(std::span<double> a) {
    check_length(a.size());
    butterflies(a, 1, a.size());
}

void fwht_leading(std::span<std::complex<double>> a, int m, int r) {
    if (a.size() != (size_t{1} << m)) {
        throw Error(ErrorCode::LengthMismatch, "vector length is not 2^m");
    }
    // Leading tensor position k is index bit m-1-k, stride 2^{m-1-k}.
    butterflies(a, size_t{1} << (m - r), a.size());
}

void set_fwht_fault(bool enabled) {
    g_fault.store(enabled);
}

bool fwht_fault() {
    return g_fault.load();
}

}  // namespace bssc
