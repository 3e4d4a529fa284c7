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

#include "bssc/clifford.h"

#include <bit>
#include <cmath>

#include "bssc/error.h"
#include "bssc/fwht.h"

namespace bssc {

namespace {

const cd kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_length(int m, size_t n) {
    if (n != (size_t{1} << m)) {
        throw Error(ErrorCode::LengthMismatch, "vector length is not 2^m");
    }
}

}  // namespace

std::vector<cd> apply_gd(const Gf2Matrix &p, std::span<const cd> v) {
    int m = p.rows();
    check_length(m, v.size());
    Gf2Matrix pt = p.transpose();
    std::vector<cd> out(v.size());
    for (uint64_t i = 0; i < v.size(); i++) {
        out[(pt * Gf2Vector(m, i)).word()] = v[i];
    }
    return out;
}

std::vector<cd> apply_gu(const Gf2Matrix &s, std::span<const cd> v) {
    check_length(s.rows(), v.size());
    std::vector<cd> out(v.size());
    for (uint64_t i = 0; i < v.size(); i++) {
        out[i] = kPowersOfI[quadratic_form(s, i) & 3] * v[i];
    }
    return out;
}

std::vector<cd> apply_gomega(int m, int r, std::span<const cd> v) {
    check_length(m, v.size());
    std::vector<cd> out(v.begin(), v.end());
    fwht_leading(out, m, r);
    double scale = std::pow(2.0, -0.5 * r);
    for (cd &x : out) {
        x *= scale;
    }
    return out;
}

CliffordFactored CliffordFactored::from_coset(const CosetRep &rep) {
    int m = rep.m();
    return CliffordFactored{m, complete_to_invertible(rep.h).p, embed_upper_left(rep.sr, m), rep.r};
}

std::vector<cd> CliffordFactored::apply(std::span<const cd> v) const {
    std::vector<cd> out = apply_gomega(m, r, v);
    out = apply_gu(sym, out);
    return apply_gd(perm.transpose(), out);
}

SymplecticElement phi(const CliffordFactored &g) {
    return make_fomega(g.m, g.r) * make_fu(g.sym) * make_fd(g.perm.transpose());
}

std::vector<cd> clifford_column_complex(const CosetRep &rep, const Gf2Vector &b) {
    int m = rep.m();
    std::vector<cd> e(size_t{1} << m);
    // Z(m, r) e_b = (-1)^{wt(b_{m-r})} e_b.
    e[b.word()] = b.tail(m - rep.r).weight() % 2 ? -1.0 : 1.0;
    return CliffordFactored::from_coset(rep).apply(e);
}

ChirpVector clifford_column(const CosetRep &rep, const Gf2Vector &b) {
    std::vector<cd> v = clifford_column_complex(rep, b);
    std::optional<ChirpVector> w = ChirpVector::from_complex(v, 1e-9);
    if (!w) {
        throw Error(ErrorCode::DimensionMismatch, "Clifford column is not a chirp vector");
    }
    return *w;
}

}  // namespace bssc
