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

#ifndef BSSC_CODEBOOK_H
#define BSSC_CODEBOOK_H

#include <functional>
#include <optional>
#include <random>
#include <string>

#include "bssc/chirp_vector.h"
#include "bssc/gf2.h"
#include "bssc/pauli.h"
#include "bssc/symplectic.h"

namespace bssc {

/// Position of a codeword in enumeration order. 64 bits overflow from m = 10.
using Serial = unsigned __int128;

std::string serial_to_string(Serial s);

/// One codeword: rank r, on-off pattern H (r-dim subspace), chirp part S_r
/// (r x r symmetric) and column index b.
struct BsscId {
    int m = 0;
    int r = 0;
    SchubertCellRep h;
    Gf2Matrix sr;
    Gf2Vector b;

    CosetRep coset() const {
        return CosetRep{r, h, sr};
    }
    bool is_bc() const {
        return r == m;
    }
    bool operator==(const BsscId &other) const = default;
};

/// The binary chirp i^{a^T S a + 2 b^T a} / sqrt(2^m) as a rank-m id.
BsscId bc_id(const Gf2Matrix &s, const Gf2Vector &b);

/// Upper triangle of a symmetric matrix, row by row, first entry most significant.
uint64_t symmetric_bits(const Gf2Matrix &s);
Gf2Matrix symmetric_from_bits(int r, uint64_t bits);

/// w_b(a) = i^{u^T S~ u + 2 b^T u} f(b, u, r) / sqrt(2^r) with u = P^{-1} a,
/// P = [H | I_~I] and f = 1 iff u and b agree in their last m - r coordinates.
ChirpVector bssc_vector(const BsscId &id);

/// {I_~I b_{m-r} + H x : x in F_2^r}, sorted.
std::vector<uint64_t> on_off_support(const BsscId &id);

/// 2^m * (number of r-dim subspaces) * 2^{r(r+1)/2}.
Serial rank_count(int m, int r);
/// 2^m prod_{r=1}^m (2^r + 1).
Serial codebook_size(int m);
/// 2^{m(m+3)/2}.
Serial bc_count(int m);

/// Visits every codeword in serial order: rank, pivot set, free bits, S_r bits, b.
void for_each_codeword(int m, const std::function<void(const BsscId &)> &visit);
/// The rank-m part only.
void for_each_bc(int m, const std::function<void(const BsscId &)> &visit);

BsscId codeword_at(int m, Serial serial);
Serial serial_of(const BsscId &id);

/// Uniform over the whole codebook, which weights rank r by rank_count(m, r).
BsscId sample_bssc(int m, std::mt19937_64 &rng);
BsscId sample_bc(int m, std::mt19937_64 &rng);

/// sqrt(1 - |w1^dagger w2|^2).
double chordal_distance(const ChirpVector &w1, const ChirpVector &w2);

/// Entrywise product, rescaled to unit norm; nullopt if it vanishes.
std::optional<ChirpVector> pointwise_mul(const ChirpVector &w1, const ChirpVector &w2);
ChirpVector conjugate(const ChirpVector &w);

/// Generators (rows of [I_{m|r} P^T | (I_{m|r} S~ + I_{m|-r}) P^{-1}]) with the
/// signs under which the codeword is a +1 eigenvector of each of them.
StabilizerGroup stabilizer_of(const BsscId &id);

struct ProductSparsity {
    int r = 0;
    SchubertCellRep h;
};

/// Sparsity of the entrywise product of two binary chirps: rank and row
/// space of S1 + S2.
ProductSparsity bc_product_sparsity(const Gf2Matrix &s1, const Gf2Matrix &s2);

/// serial,r,pivots,h_bits,sr_bits,b,support
std::string csv_header();
/// Pivots are written 1-based and ';'-separated; bit fields in hex.
std::string csv_row(const BsscId &id);

}  // namespace bssc

#endif
