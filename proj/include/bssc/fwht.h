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

#ifndef BSSC_FWHT_H
#define BSSC_FWHT_H

#include <complex>
#include <span>

namespace bssc {

/// In-place unnormalized Walsh-Hadamard transform: a[y] <- sum_v (-1)^{y.v} a[v].
/// The length must be a power of two.
void fwht(std::span<std::complex<double>> a);
void fwht(std::span<double> a);

/// Transform over the first r of m tensor positions only (the r most
/// significant index bits), i.e. (H_2 unnormalized)^{(x) r} (x) I.
void fwht_leading(std::span<std::complex<double>> a, int m, int r);

/// Test hook: when enabled, every butterfly computes (x + y, y - x) instead of
/// (x + y, x - y). Used to check that the verify suite notices a broken kernel.
void set_fwht_fault(bool enabled);
bool fwht_fault();

}  // namespace bssc

#endif
