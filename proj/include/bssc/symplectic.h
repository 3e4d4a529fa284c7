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

#ifndef BSSC_SYMPLECTIC_H
#define BSSC_SYMPLECTIC_H

#include <random>

#include "bssc/gf2.h"

namespace bssc {

/// [[0, I], [I, 0]].
Gf2Matrix omega(int m);

/// F Omega F^T == Omega.
bool is_symplectic(const Gf2Matrix &f);

/// I_{m|r}: the diagonal matrix with ones in the first r positions.
Gf2Matrix partial_identity(int m, int r);

/// I_{m|-r}: the diagonal matrix with ones in the last m-r positions.
Gf2Matrix partial_identity_complement(int m, int r);

/// Places an r x r matrix in the upper-left corner of an m x m zero matrix.
Gf2Matrix embed_upper_left(const Gf2Matrix &s, int m);

/// A 2m x 2m binary matrix in Sp(2m;2), viewed as blocks [[A, B], [C, D]].
class SymplecticElement {
   public:
    SymplecticElement() = default;
    /// Throws Error(NotSymplectic).
    explicit SymplecticElement(Gf2Matrix f);
    static SymplecticElement from_blocks(
        const Gf2Matrix &a, const Gf2Matrix &b, const Gf2Matrix &c, const Gf2Matrix &d);
    static SymplecticElement identity(int m);

    int m() const {
        return f_.rows() / 2;
    }
    const Gf2Matrix &matrix() const {
        return f_;
    }
    Gf2Matrix a() const;
    Gf2Matrix b() const;
    Gf2Matrix c() const;
    Gf2Matrix d() const;

    SymplecticElement operator*(const SymplecticElement &other) const;
    /// Omega F^T Omega.
    SymplecticElement inverse() const;
    bool operator==(const SymplecticElement &other) const = default;

   private:
    struct Unchecked {};
    SymplecticElement(Gf2Matrix f, Unchecked) : f_(std::move(f)) {
    }
    Gf2Matrix f_;
};

/// F_D(P) = [[P, 0], [0, P^{-T}]]. Throws Error(NotInvertible).
SymplecticElement make_fd(const Gf2Matrix &p);
/// F_U(S) = [[I, S], [0, I]]. Throws Error(NotSymmetric).
SymplecticElement make_fu(const Gf2Matrix &s);
/// F_Omega(r) = [[I_{m|-r}, I_{m|r}], [I_{m|r}, I_{m|-r}]].
SymplecticElement make_fomega(int m, int r);

/// Names one left coset of the parabolic subgroup {F_D(P) F_U(S)}.
struct CosetRep {
    int r = 0;
    /// r-dimensional subspace of F_2^m in echelon form.
    SchubertCellRep h;
    /// r x r symmetric.
    Gf2Matrix sr;

    int m() const {
        return h.m;
    }
    bool operator==(const CosetRep &other) const = default;
};

/// The representative F_D(P^{-T}) F_U(S~_r) F_Omega(r), where P = [H | I_~I]
/// and S~_r is sr embedded in the upper-left corner. Its lower-left block is
/// [H | 0], so distinct reps lie in distinct cosets.
SymplecticElement coset_matrix(const CosetRep &rep);

/// rs[ I_{m|r} P^T | (I_{m|r} S~_r + I_{m|-r}) P^{-1} ], an m x 2m matrix
/// whose row space is Lagrangian.
Gf2Matrix coset_to_lagrangian(const CosetRep &rep);

/// F = F_D(p1) F_U(s1) F_Omega(r) F_U(s2) F_D(p2).
struct BruhatFactors {
    int r = 0;
    Gf2Matrix p1;
    Gf2Matrix s1;
    Gf2Matrix s2;
    Gf2Matrix p2;

    SymplecticElement recompose() const;
};

struct BruhatDecomposition {
    int r = 0;
    /// [H | I_~I] built from cs(C).
    Gf2Matrix p;
    /// r x r symmetric block of S~_r.
    Gf2Matrix sr;
    Gf2Matrix m;
    Gf2Matrix s;
    CosetRep coset;
    BruhatFactors factors;

    /// F_D(P^{-T}) F_U(S~_r) F_Omega(r) F_D(M) F_U(S).
    SymplecticElement recompose() const;
};

BruhatDecomposition bruhat_decompose(const SymplecticElement &f);
/// Throws Error(NotSymplectic).
BruhatDecomposition bruhat_decompose(const Gf2Matrix &f);

CosetRep canonical_rep(const SymplecticElement &f);

/// |Sp(2m;2)| = 2^{m^2} prod_{i=1}^m (4^i - 1).
unsigned __int128 symplectic_group_order(int m);

/// Number of Lagrangian subspaces: prod_{i=1}^m (2^i + 1).
uint64_t lagrangian_count(int m);

Gf2Matrix random_invertible(int m, std::mt19937_64 &rng);
Gf2Matrix random_symmetric(int m, std::mt19937_64 &rng);

/// Uniform over all cosets.
CosetRep random_coset(int m, std::mt19937_64 &rng);

/// Uniform over Sp(2m;2).
SymplecticElement random_symplectic(int m, std::mt19937_64 &rng);

}  // namespace bssc

#endif
