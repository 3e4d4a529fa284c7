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

#ifndef BSSC_CLIFFORD_H
#define BSSC_CLIFFORD_H

#include <span>
#include <vector>

#include "bssc/chirp_vector.h"
#include "bssc/gf2.h"
#include "bssc/symplectic.h"

namespace bssc {

/// G_D(P): e_v -> e_{P^T v}.
std::vector<cd> apply_gd(const Gf2Matrix &p, std::span<const cd> v);

/// G_U(S) = diag(i^{v^T S v mod 4}).
std::vector<cd> apply_gu(const Gf2Matrix &s, std::span<const cd> v);

/// G_Omega(r) = H_2^{(x) r} (x) I, normalized.
std::vector<cd> apply_gomega(int m, int r, std::span<const cd> v);

/// G = G_D(P^T) G_U(S) G_Omega(r), never stored densely.
struct CliffordFactored {
    int m = 0;
    Gf2Matrix perm;
    Gf2Matrix sym;
    int r = 0;

    /// The preimage of the coset representative: perm = [H | I_~I], sym = S~_r.
    static CliffordFactored from_coset(const CosetRep &rep);

    std::vector<cd> apply(std::span<const cd> v) const;
};

/// F_Omega(r) F_U(S) F_D(P^T).
SymplecticElement phi(const CliffordFactored &g);

/// Column b of G_D(P^T) G_U(S~_r) G_Omega(r) Z(m, r), with Z(m, r) = I (x) sigma_z
/// on the last m - r qubits. Evaluated in floating point and read back exactly.
ChirpVector clifford_column(const CosetRep &rep, const Gf2Vector &b);
std::vector<cd> clifford_column_complex(const CosetRep &rep, const Gf2Vector &b);

}  // namespace bssc

#endif
