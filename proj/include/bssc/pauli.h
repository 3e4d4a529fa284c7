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

#ifndef BSSC_PAULI_H
#define BSSC_PAULI_H

#include <span>
#include <string>
#include <vector>

#include "bssc/chirp_vector.h"
#include "bssc/gf2.h"

namespace bssc {

/// i^k E(a, b), where E(a, b) = i^{a.b} D(a, b) and D(a, b) = X(a) Z(b).
///
/// E(a, b) e_v = i^{a.b} (-1)^{b.v} e_{v+a}, and every E(a, b) is Hermitian.
struct PauliElement {
    Gf2Vector a;
    Gf2Vector b;
    int k = 0;

    PauliElement() = default;
    PauliElement(Gf2Vector a, Gf2Vector b, int k = 0);
    static PauliElement identity(int m);

    int m() const {
        return a.size();
    }
    /// Exact product; the phase exponent is kept in {0, 1, 2, 3}.
    PauliElement operator*(const PauliElement &other) const;
    bool operator==(const PauliElement &other) const = default;

    /// Phase marker followed by one of I, X, Z, Y per qubit, e.g. "-iXZ".
    std::string str() const;
};

/// b.c + a.d mod 2 for (a, b) and (c, d).
bool symplectic_inner(const PauliElement &p, const PauliElement &q);

bool commutes(const PauliElement &p, const PauliElement &q);

/// Throws Error(LengthMismatch) unless |v| = 2^m.
std::vector<cd> apply_pauli(const PauliElement &p, std::span<const cd> v);
ChirpVector apply_pauli(const PauliElement &p, const ChirpVector &w);

/// A stabilizer group given by r independent, pairwise commuting generators
/// (-1)^{d_j} E(a_j, b_j).
class StabilizerGroup {
   public:
    /// Rows of ab are (a_j | b_j). Throws Error(DependentRows) or
    /// Error(NotIsotropic).
    static StabilizerGroup from(const Gf2Matrix &ab, const Gf2Vector &d);

    int m() const {
        return m_;
    }
    int r() const {
        return (int)generators_.size();
    }
    const std::vector<PauliElement> &generators() const {
        return generators_;
    }
    Gf2Matrix generator_matrix() const;
    Gf2Vector signs() const;

    /// All 2^r group elements. Element x is the ordered product of the
    /// generators selected by the bits of x (generator 0 is the top bit).
    std::vector<PauliElement> elements() const;

    /// (1/2^r) sum over the group, applied to v.
    std::vector<cd> project(std::span<const cd> v) const;

   private:
    int m_ = 0;
    std::vector<PauliElement> generators_;
};

}  // namespace bssc

#endif
