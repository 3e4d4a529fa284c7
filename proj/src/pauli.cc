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

#include "bssc/pauli.h"

#include <bit>

#include "bssc/error.h"

namespace bssc {

namespace {

const cd kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_vector(const PauliElement &p, size_t n) {
    if (n != (size_t{1} << p.m())) {
        throw Error(ErrorCode::LengthMismatch, "vector length is not 2^m");
    }
}

}  // namespace

PauliElement::PauliElement(Gf2Vector a_, Gf2Vector b_, int k_) : a(a_), b(b_), k(k_ & 3) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "a and b differ in length");
    }
}

PauliElement PauliElement::identity(int m) {
    return PauliElement(Gf2Vector(m), Gf2Vector(m), 0);
}

PauliElement PauliElement::operator*(const PauliElement &o) const {
    if (m() != o.m()) {
        throw Error(ErrorCode::DimensionMismatch, "Pauli operators on different qubit counts");
    }
    // i^{k1} i^{a.b} D(a,b) i^{k2} i^{c.d} D(c,d) = i^{...} (-1)^{b.c} D(a+c, b+d),
    // then re-normalize D(a+c, b+d) = i^{-(a+c).(b+d)} E(a+c, b+d).
    Gf2Vector s = a ^ o.a, t = b ^ o.b;
    int phase = k + o.k + a.overlap(b) + o.a.overlap(o.b) + 2 * b.overlap(o.a) - s.overlap(t);
    return PauliElement(s, t, ((phase % 4) + 4) % 4);
}

std::string PauliElement::str() const {
    static const char *kMarks[4] = {"+", "+i", "-", "-i"};
    std::string out = kMarks[k];
    for (int q = 0; q < m(); q++) {
        out += "IXZY"[(a[q] ? 1 : 0) + (b[q] ? 2 : 0)];
    }
    return out;
}

bool symplectic_inner(const PauliElement &p, const PauliElement &q) {
    return p.b.dot(q.a) ^ p.a.dot(q.b);
}

bool commutes(const PauliElement &p, const PauliElement &q) {
    return !symplectic_inner(p, q);
}

std::vector<cd> apply_pauli(const PauliElement &p, std::span<const cd> v) {
    check_vector(p, v.size());
    uint64_t a = p.a.word(), b = p.b.word();
    int base = p.k + p.a.overlap(p.b);
    std::vector<cd> out(v.size());
    for (uint64_t i = 0; i < v.size(); i++) {
        int phase = base + 2 * (std::popcount(b & i) & 1);
        out[i ^ a] = kPowersOfI[phase & 3] * v[i];
    }
    return out;
}

ChirpVector apply_pauli(const PauliElement &p, const ChirpVector &w) {
    check_vector(p, w.size());
    uint64_t a = p.a.word(), b = p.b.word();
    int base = p.k + p.a.overlap(p.b);
    ChirpVector out(w.m(), w.r());
    for (uint64_t i = 0; i < w.size(); i++) {
        if (w.on(i)) {
            out.set_phase(i ^ a, w.phase(i) + base + 2 * (std::popcount(b & i) & 1));
        }
    }
    return out;
}

StabilizerGroup StabilizerGroup::from(const Gf2Matrix &ab, const Gf2Vector &d) {
    if (ab.cols() % 2 != 0 || d.size() != ab.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "generator matrix must be r x 2m with r signs");
    }
    int m = ab.cols() / 2;
    if (rank(ab) != ab.rows()) {
        throw Error(ErrorCode::DependentRows, "stabilizer generators are linearly dependent");
    }
    StabilizerGroup g;
    g.m_ = m;
    for (int j = 0; j < ab.rows(); j++) {
        Gf2Vector row = ab.row(j);
        g.generators_.emplace_back(row.head(m), row.tail(m), d[j] ? 2 : 0);
    }
    for (int i = 0; i < g.r(); i++) {
        for (int j = i + 1; j < g.r(); j++) {
            if (!commutes(g.generators_[i], g.generators_[j])) {
                throw Error(
                    ErrorCode::NotIsotropic,
                    "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
            }
        }
    }
    return g;
}

Gf2Matrix StabilizerGroup::generator_matrix() const {
    Gf2Matrix ab(r(), 2 * m_);
    for (int j = 0; j < r(); j++) {
        ab.set_row(j, Gf2Vector::concat(generators_[j].a, generators_[j].b));
    }
    return ab;
}

Gf2Vector StabilizerGroup::signs() const {
    Gf2Vector d(r());
    for (int j = 0; j < r(); j++) {
        d.set(j, generators_[j].k == 2);
    }
    return d;
}

std::vector<PauliElement> StabilizerGroup::elements() const {
    int n = r();
    std::vector<PauliElement> out(size_t{1} << n, PauliElement::identity(m_));
    for (uint64_t x = 1; x < out.size(); x++) {
        // Peel off the lowest set bit; bit j of x (from the top) selects generator j.
        int low = std::countr_zero(x);
        out[x] = out[x & (x - 1)] * generators_[n - 1 - low];
    }
    return out;
}

std::vector<cd> StabilizerGroup::project(std::span<const cd> v) const {
    if (v.size() != (size_t{1} << m_)) {
        throw Error(ErrorCode::LengthMismatch, "vector length is not 2^m");
    }
    std::vector<cd> acc(v.size());
    double scale = 1.0 / (double)(uint64_t{1} << r());
    for (const PauliElement &e : elements()) {
        std::vector<cd> term = apply_pauli(e, v);
        for (size_t i = 0; i < acc.size(); i++) {
            acc[i] += term[i] * scale;
        }
    }
    return acc;
}

}  // namespace bssc
