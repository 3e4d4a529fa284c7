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

#ifndef BSSC_CHIRP_VECTOR_H
#define BSSC_CHIRP_VECTOR_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bssc {

using cd = std::complex<double>;

/// A length-2^m vector whose entries are 0 or i^k / sqrt(2^r), stored exactly.
///
/// phase(v) is -1 for a zero entry and k in {0,1,2,3} otherwise. r is only a
/// scale; a well-formed codeword has exactly 2^r nonzero entries.
class ChirpVector {
   public:
    ChirpVector() = default;
    ChirpVector(int m, int r);

    int m() const {
        return m_;
    }
    int r() const {
        return r_;
    }
    uint64_t size() const {
        return phases_.size();
    }
    int phase(uint64_t v) const {
        return phases_[v];
    }
    bool on(uint64_t v) const {
        return phases_[v] >= 0;
    }
    /// k < 0 switches the entry off; otherwise k is reduced mod 4.
    void set_phase(uint64_t v, int k);
    const std::vector<int8_t> &phases() const {
        return phases_;
    }

    std::vector<uint64_t> support() const;
    uint64_t support_size() const;

    std::vector<cd> to_complex() const;

    /// Multiplies every entry by i^k.
    ChirpVector rotated(int k) const;
    /// Global phase fixed so that the first nonzero entry is +1/sqrt(2^r).
    ChirpVector canonical() const;
    bool projectively_equal(const ChirpVector &other) const;

    /// Reads an amplitude vector back into exact form. The support is the set
    /// of entries with modulus above half the expected one; every phase must
    /// be within tol of a power of i. Returns nullopt otherwise.
    static std::optional<ChirpVector> from_complex(std::span<const cd> v, double tol = 1e-9);

    bool operator==(const ChirpVector &other) const = default;

   private:
    int m_ = 0;
    int r_ = 0;
    std::vector<int8_t> phases_;
};

/// w1^dagger w2 = (re + i im) / sqrt(2^{log2_den}).
struct ExactOverlap {
    int64_t re = 0;
    int64_t im = 0;
    int log2_den = 0;

    /// |w1^dagger w2|^2 as a double (exact when representable).
    double norm_sq() const;
    /// |w1^dagger w2|^2 == num / 2^k, compared without rounding.
    bool norm_sq_equals(uint64_t num, int k) const;
    bool is_zero() const {
        return re == 0 && im == 0;
    }
};

ExactOverlap inner(const ChirpVector &w1, const ChirpVector &w2);

struct ChirpVectorHash {
    size_t operator()(const ChirpVector &w) const;
};

}  // namespace bssc

#endif
