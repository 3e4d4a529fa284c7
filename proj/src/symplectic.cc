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

#include "bssc/symplectic.h"

#include "bssc/error.h"

namespace bssc {

Gf2Matrix omega(int m) {
    Gf2Matrix z = Gf2Matrix::zeros(m, m), i = Gf2Matrix::identity(m);
    return Gf2Matrix::blocks(z, i, i, z);
}

bool is_symplectic(const Gf2Matrix &f) {
    if (!f.is_square() || f.rows() % 2 != 0) {
        return false;
    }
    Gf2Matrix w = omega(f.rows() / 2);
    return f * w * f.transpose() == w;
}

Gf2Matrix partial_identity(int m, int r) {
    Gf2Matrix d(m, m);
    for (int i = 0; i < r; i++) {
        d.set(i, i, true);
    }
    return d;
}

Gf2Matrix partial_identity_complement(int m, int r) {
    Gf2Matrix d(m, m);
    for (int i = r; i < m; i++) {
        d.set(i, i, true);
    }
    return d;
}

Gf2Matrix embed_upper_left(const Gf2Matrix &s, int m) {
    Gf2Matrix out(m, m);
    for (int i = 0; i < s.rows(); i++) {
        for (int j = 0; j < s.cols(); j++) {
            out.set(i, j, s.get(i, j));
        }
    }
    return out;
}

SymplecticElement::SymplecticElement(Gf2Matrix f) : f_(std::move(f)) {
    if (!is_symplectic(f_)) {
        throw Error(ErrorCode::NotSymplectic, "F Omega F^T != Omega");
    }
}

SymplecticElement SymplecticElement::from_blocks(
    const Gf2Matrix &a, const Gf2Matrix &b, const Gf2Matrix &c, const Gf2Matrix &d) {
    return SymplecticElement(Gf2Matrix::blocks(a, b, c, d));
}

SymplecticElement SymplecticElement::identity(int m) {
    return SymplecticElement(Gf2Matrix::identity(2 * m), Unchecked{});
}

Gf2Matrix SymplecticElement::a() const {
    return f_.block(0, 0, m(), m());
}
Gf2Matrix SymplecticElement::b() const {
    return f_.block(0, m(), m(), m());
}
Gf2Matrix SymplecticElement::c() const {
    return f_.block(m(), 0, m(), m());
}
Gf2Matrix SymplecticElement::d() const {
    return f_.block(m(), m(), m(), m());
}

SymplecticElement SymplecticElement::operator*(const SymplecticElement &other) const {
    return SymplecticElement(f_ * other.f_, Unchecked{});
}

SymplecticElement SymplecticElement::inverse() const {
    Gf2Matrix w = omega(m());
    return SymplecticElement(w * f_.transpose() * w, Unchecked{});
}

SymplecticElement make_fd(const Gf2Matrix &p) {
    if (!is_invertible(p)) {
        throw Error(ErrorCode::NotInvertible, "F_D needs an invertible matrix");
    }
    int m = p.rows();
    Gf2Matrix z = Gf2Matrix::zeros(m, m);
    return SymplecticElement::from_blocks(p, z, z, invert(p).transpose());
}

SymplecticElement make_fu(const Gf2Matrix &s) {
    if (!s.is_symmetric()) {
        throw Error(ErrorCode::NotSymmetric, "F_U needs a symmetric matrix");
    }
    int m = s.rows();
    Gf2Matrix i = Gf2Matrix::identity(m);
    return SymplecticElement::from_blocks(i, s, Gf2Matrix::zeros(m, m), i);
}

SymplecticElement make_fomega(int m, int r) {
    if (r < 0 || r > m) {
        throw Error(ErrorCode::DimensionMismatch, "F_Omega rank outside [0, m]");
    }
    Gf2Matrix on = partial_identity(m, r), off = partial_identity_complement(m, r);
    return SymplecticElement::from_blocks(off, on, on, off);
}

SymplecticElement coset_matrix(const CosetRep &rep) {
    int m = rep.m();
    Completion c = complete_to_invertible(rep.h);
    return make_fd(c.p_inv_t) * make_fu(embed_upper_left(rep.sr, m)) * make_fomega(m, rep.r);
}

Gf2Matrix coset_to_lagrangian(const CosetRep &rep) {
    int m = rep.m();
    Completion c = complete_to_invertible(rep.h);
    Gf2Matrix on = partial_identity(m, rep.r);
    Gf2Matrix left = on * c.p.transpose();
    Gf2Matrix right = (on * embed_upper_left(rep.sr, m) + partial_identity_complement(m, rep.r)) * c.p_inv;
    return Gf2Matrix::hstack(left, right);
}

SymplecticElement BruhatFactors::recompose() const {
    int m = p1.rows();
    return make_fd(p1) * make_fu(s1) * make_fomega(m, r) * make_fu(s2) * make_fd(p2);
}

SymplecticElement BruhatDecomposition::recompose() const {
    int mm = p.rows();
    return make_fd(invert(p).transpose()) * make_fu(embed_upper_left(sr, mm)) * make_fomega(mm, r) * make_fd(m) *
           make_fu(s);
}

BruhatDecomposition bruhat_decompose(const Gf2Matrix &f) {
    return bruhat_decompose(SymplecticElement(f));
}

BruhatDecomposition bruhat_decompose(const SymplecticElement &f) {
    int m = f.m();
    Gf2Matrix a = f.a(), b = f.b(), c = f.c(), d = f.d();
    BruhatDecomposition out;

    SchubertCellRep h = column_space(c);
    int r = h.r();
    Gf2Matrix on = partial_identity(m, r);
    Gf2Matrix off = partial_identity_complement(m, r);
    Completion comp = complete_to_invertible(h);
    Gf2Matrix pt = comp.p.transpose();

    Gf2Matrix pinv_c = comp.p_inv * c;
    Gf2Matrix pt_a = pt * a;
    Gf2Matrix mm = Gf2Matrix::vstack(pinv_c.block(0, 0, r, m), pt_a.block(r, 0, m - r, m));
    Gf2Matrix m_inv = invert(mm);
    Gf2Matrix m_inv_t = m_inv.transpose();

    Gf2Matrix s_tilde = pt_a * m_inv + off;

    Gf2Matrix n_top = comp.p_inv * d + off * m_inv_t;
    Gf2Matrix n_bottom = pt * b + on * m_inv_t;
    Gf2Matrix s = m_inv * Gf2Matrix::vstack(n_top.block(0, 0, r, m), n_bottom.block(r, 0, m - r, m));

    out.r = r;
    out.p = comp.p;
    out.sr = s_tilde.block(0, 0, r, r);
    out.m = mm;
    out.s = s;
    out.coset = CosetRep{r, h, out.sr};
    out.factors = BruhatFactors{r, comp.p_inv_t, s_tilde, mm * s * mm.transpose(), mm};
    return out;
}

CosetRep canonical_rep(const SymplecticElement &f) {
    return bruhat_decompose(f).coset;
}

unsigned __int128 symplectic_group_order(int m) {
    unsigned __int128 n = (unsigned __int128)1 << (m * m);
    for (int i = 1; i <= m; i++) {
        n *= ((unsigned __int128)1 << (2 * i)) - 1;
    }
    return n;
}

uint64_t lagrangian_count(int m) {
    uint64_t n = 1;
    for (int i = 1; i <= m; i++) {
        n *= (uint64_t{1} << i) + 1;
    }
    return n;
}

Gf2Matrix random_invertible(int m, std::mt19937_64 &rng) {
    while (true) {
        Gf2Matrix p(m, m);
        for (int i = 0; i < m; i++) {
            p.set_row(i, Gf2Vector(m, rng()));
        }
        if (is_invertible(p)) {
            return p;
        }
    }
}

Gf2Matrix random_symmetric(int m, std::mt19937_64 &rng) {
    Gf2Matrix s(m, m);
    for (int i = 0; i < m; i++) {
        for (int j = i; j < m; j++) {
            bool bit = rng() & 1;
            s.set(i, j, bit);
            s.set(j, i, bit);
        }
    }
    return s;
}

CosetRep random_coset(int m, std::mt19937_64 &rng) {
    uint64_t total = lagrangian_count(m);
    uint64_t pick = std::uniform_int_distribution<uint64_t>(0, total - 1)(rng);
    int r = 0;
    for (;; r++) {
        uint64_t w = gaussian_binomial(m, r) << (r * (r + 1) / 2);
        if (pick < w) {
            break;
        }
        pick -= w;
    }
    uint64_t cells = gaussian_binomial(m, r);
    CosetRep rep;
    rep.r = r;
    rep.h = subspace_at(m, r, pick % cells);
    rep.sr = random_symmetric(r, rng);
    return rep;
}

SymplecticElement random_symplectic(int m, std::mt19937_64 &rng) {
    CosetRep rep = random_coset(m, rng);
    return coset_matrix(rep) * make_fd(random_invertible(m, rng)) * make_fu(random_symmetric(m, rng));
}

}  // namespace bssc
