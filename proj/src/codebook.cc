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

#include "bssc/codebook.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "bssc/error.h"

namespace bssc {

namespace {

int sym_bit_count(int r) {
    return r * (r + 1) / 2;
}

std::string hex(uint64_t x) {
    std::ostringstream out;
    out << std::hex << x;
    return out.str();
}

Serial uniform_serial(Serial bound, std::mt19937_64 &rng) {
    int bits = 0;
    while (bits < 128 && ((Serial)1 << bits) < bound) {
        bits++;
    }
    while (true) {
        Serial x = ((Serial)rng() << 64) | rng();
        if (bits < 128) {
            x &= ((Serial)1 << bits) - 1;
        }
        if (x < bound) {
            return x;
        }
    }
}

}  // namespace

std::string serial_to_string(Serial s) {
    if (s == 0) {
        return "0";
    }
    std::string out;
    while (s > 0) {
        out.push_back(char('0' + (int)(s % 10)));
        s /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

BsscId bc_id(const Gf2Matrix &s, const Gf2Vector &b) {
    int m = s.rows();
    return BsscId{m, m, column_echelon(Gf2Matrix::identity(m)), s, b};
}

uint64_t symmetric_bits(const Gf2Matrix &s) {
    uint64_t bits = 0;
    for (int i = 0; i < s.rows(); i++) {
        for (int j = i; j < s.rows(); j++) {
            bits = (bits << 1) | (s.get(i, j) ? 1 : 0);
        }
    }
    return bits;
}

Gf2Matrix symmetric_from_bits(int r, uint64_t bits) {
    Gf2Matrix s(r, r);
    int remaining = sym_bit_count(r);
    for (int i = 0; i < r; i++) {
        for (int j = i; j < r; j++) {
            remaining--;
            bool bit = (bits >> remaining) & 1;
            s.set(i, j, bit);
            s.set(j, i, bit);
        }
    }
    return s;
}

ChirpVector bssc_vector(const BsscId &id) {
    int m = id.m, r = id.r;
    Completion c = complete_to_invertible(id.h);
    Gf2Matrix s_tilde = embed_upper_left(id.sr, m);
    uint64_t low = (uint64_t{1} << (m - r)) - 1;
    ChirpVector w(m, r);
    for (uint64_t a = 0; a < (uint64_t{1} << m); a++) {
        Gf2Vector u = c.p_inv * Gf2Vector(m, a);
        if (((u.word() ^ id.b.word()) & low) != 0) {
            continue;
        }
        w.set_phase(a, quadratic_form(s_tilde, u.word()) + 2 * id.b.overlap(u));
    }
    return w;
}

std::vector<uint64_t> on_off_support(const BsscId &id) {
    int m = id.m, r = id.r;
    Gf2Vector offset = selection_matrix(m, id.h.nonpivots()) * id.b.tail(m - r);
    std::vector<uint64_t> out;
    for (uint64_t x = 0; x < (uint64_t{1} << r); x++) {
        out.push_back((id.h.matrix * Gf2Vector(r, x) ^ offset).word());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Serial rank_count(int m, int r) {
    return ((Serial)gaussian_binomial(m, r) << m) << sym_bit_count(r);
}

Serial codebook_size(int m) {
    Serial n = (Serial)1 << m;
    for (int r = 1; r <= m; r++) {
        n *= (Serial)((uint64_t{1} << r) + 1);
    }
    return n;
}

Serial bc_count(int m) {
    return (Serial)1 << (m * (m + 3) / 2);
}

namespace {

void for_each_in_rank(int m, int r, const std::function<void(const BsscId &)> &visit) {
    uint64_t sym_total = uint64_t{1} << sym_bit_count(r);
    uint64_t b_total = uint64_t{1} << m;
    for_each_subspace(m, r, [&](const SchubertCellRep &h) {
        for (uint64_t s = 0; s < sym_total; s++) {
            Gf2Matrix sr = symmetric_from_bits(r, s);
            for (uint64_t b = 0; b < b_total; b++) {
                visit(BsscId{m, r, h, sr, Gf2Vector(m, b)});
            }
        }
    });
}

}  // namespace

void for_each_codeword(int m, const std::function<void(const BsscId &)> &visit) {
    for (int r = 0; r <= m; r++) {
        for_each_in_rank(m, r, visit);
    }
}

void for_each_bc(int m, const std::function<void(const BsscId &)> &visit) {
    for_each_in_rank(m, m, visit);
}

BsscId codeword_at(int m, Serial serial) {
    if (serial >= codebook_size(m)) {
        throw Error(ErrorCode::DimensionMismatch, "serial beyond the codebook");
    }
    int r = 0;
    while (serial >= rank_count(m, r)) {
        serial -= rank_count(m, r);
        r++;
    }
    uint64_t b = (uint64_t)(serial & ((Serial{1} << m) - 1));
    serial >>= m;
    uint64_t s = (uint64_t)(serial & ((Serial{1} << sym_bit_count(r)) - 1));
    serial >>= sym_bit_count(r);
    return BsscId{m, r, subspace_at(m, r, (uint64_t)serial), symmetric_from_bits(r, s), Gf2Vector(m, b)};
}

Serial serial_of(const BsscId &id) {
    Serial offset = 0;
    for (int r = 0; r < id.r; r++) {
        offset += rank_count(id.m, r);
    }
    Serial within = ((Serial)subspace_index(id.h) << sym_bit_count(id.r)) | symmetric_bits(id.sr);
    return offset + ((within << id.m) | id.b.word());
}

BsscId sample_bssc(int m, std::mt19937_64 &rng) {
    return codeword_at(m, uniform_serial(codebook_size(m), rng));
}

BsscId sample_bc(int m, std::mt19937_64 &rng) {
    Serial offset = codebook_size(m) - bc_count(m);
    return codeword_at(m, offset + uniform_serial(bc_count(m), rng));
}

double chordal_distance(const ChirpVector &w1, const ChirpVector &w2) {
    double overlap = inner(w1, w2).norm_sq();
    return std::sqrt(std::max(0.0, 1.0 - overlap));
}

std::optional<ChirpVector> pointwise_mul(const ChirpVector &w1, const ChirpVector &w2) {
    if (w1.size() != w2.size()) {
        throw Error(ErrorCode::LengthMismatch, "entrywise product of different lengths");
    }
    uint64_t count = 0;
    for (uint64_t v = 0; v < w1.size(); v++) {
        count += w1.on(v) && w2.on(v);
    }
    if (count == 0) {
        return std::nullopt;
    }
    if (!std::has_single_bit(count)) {
        throw Error(ErrorCode::DimensionMismatch, "product support is not a power of two");
    }
    ChirpVector out(w1.m(), std::countr_zero(count));
    for (uint64_t v = 0; v < w1.size(); v++) {
        if (w1.on(v) && w2.on(v)) {
            out.set_phase(v, w1.phase(v) + w2.phase(v));
        }
    }
    return out;
}

ChirpVector conjugate(const ChirpVector &w) {
    ChirpVector out(w.m(), w.r());
    for (uint64_t v = 0; v < w.size(); v++) {
        if (w.on(v)) {
            out.set_phase(v, 4 - w.phase(v));
        }
    }
    return out;
}

StabilizerGroup stabilizer_of(const BsscId &id) {
    int m = id.m;
    Gf2Matrix ab = coset_to_lagrangian(id.coset());
    ChirpVector w = bssc_vector(id);
    ChirpVector negated = w.rotated(2);
    Gf2Vector d(m);
    for (int j = 0; j < m; j++) {
        Gf2Vector row = ab.row(j);
        ChirpVector image = apply_pauli(PauliElement(row.head(m), row.tail(m)), w);
        if (image == negated) {
            d.set(j, true);
        } else if (image != w) {
            throw Error(ErrorCode::NotIsotropic, "codeword is not an eigenvector of its stabilizer");
        }
    }
    return StabilizerGroup::from(ab, d);
}

ProductSparsity bc_product_sparsity(const Gf2Matrix &s1, const Gf2Matrix &s2) {
    Gf2Matrix sum = s1 + s2;
    SchubertCellRep h = column_space(sum.transpose());
    return ProductSparsity{h.r(), h};
}

std::string csv_header() {
    return "serial,r,pivots,h_bits,sr_bits,b,support";
}

std::string csv_row(const BsscId &id) {
    std::string pivots;
    for (size_t j = 0; j < id.h.pivots.size(); j++) {
        if (j) {
            pivots += ';';
        }
        pivots += std::to_string(id.h.pivots[j] + 1);
    }
    std::ostringstream out;
    out << serial_to_string(serial_of(id)) << ',' << id.r << ',' << pivots << ',' << hex(id.h.free_bits()) << ','
        << hex(symmetric_bits(id.sr)) << ',' << hex(id.b.word()) << ',' << (uint64_t{1} << id.r);
    return out.str();
}

}  // namespace bssc
