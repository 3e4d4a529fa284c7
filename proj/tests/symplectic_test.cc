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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "bssc/error.h"

using namespace bssc;

namespace {

std::vector<Gf2Matrix> brute_force_group(int m) {
    int n = 2 * m;
    std::vector<Gf2Matrix> out;
    for (uint64_t bits = 0; bits < (uint64_t{1} << (n * n)); bits++) {
        std::vector<uint64_t> rows(n);
        for (int i = 0; i < n; i++) {
            rows[i] = (bits >> (i * n)) & ((uint64_t{1} << n) - 1);
        }
        Gf2Matrix f = Gf2Matrix::from_row_words(n, rows);
        if (is_symplectic(f)) {
            out.push_back(f);
        }
    }
    return out;
}

std::vector<Gf2Matrix> all_invertible(int m) {
    std::vector<Gf2Matrix> out;
    for (uint64_t bits = 0; bits < (uint64_t{1} << (m * m)); bits++) {
        std::vector<uint64_t> rows(m);
        for (int i = 0; i < m; i++) {
            rows[i] = (bits >> (i * m)) & ((uint64_t{1} << m) - 1);
        }
        Gf2Matrix p = Gf2Matrix::from_row_words(m, rows);
        if (is_invertible(p)) {
            out.push_back(p);
        }
    }
    return out;
}

// Row words of the reduced row echelon form: a canonical name for a row space.
std::vector<uint64_t> row_space_key(const Gf2Matrix &m) {
    SchubertCellRep h = column_space(m.transpose());
    Gf2Matrix t = h.matrix.transpose();
    std::vector<uint64_t> key;
    for (int i = 0; i < t.rows(); i++) {
        key.push_back(t.row_word(i));
    }
    return key;
}

bool symplectic_dot(const Gf2Vector &u, const Gf2Vector &v, int m) {
    return u.head(m).dot(v.tail(m)) ^ u.tail(m).dot(v.head(m));
}

}  // namespace

TEST(symplectic, membership_examples) {
    for (int m = 1; m <= 4; m++) {
        ASSERT_TRUE(is_symplectic(Gf2Matrix::identity(2 * m)));
        ASSERT_TRUE(is_symplectic(omega(m)));
        ASSERT_EQ(make_fomega(m, m).matrix(), omega(m));
        ASSERT_EQ(make_fomega(m, 0), SymplecticElement::identity(m));
    }
    Gf2Matrix swapped = Gf2Matrix::from_strings({"0100", "1000", "0010", "0001"});
    ASSERT_FALSE(is_symplectic(swapped));
    ASSERT_THROW(SymplecticElement{swapped}, Error);
    ASSERT_FALSE(is_symplectic(Gf2Matrix::identity(3)));
}

TEST(symplectic, generator_errors) {
    try {
        make_fd(Gf2Matrix::from_strings({"11", "11"}));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::NotInvertible);
    }
    try {
        make_fu(Gf2Matrix::from_strings({"01", "00"}));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::NotSymmetric);
    }
}

TEST(symplectic, generator_relations) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 200; t++) {
        int m = 1 + rng() % 6;
        Gf2Matrix p = random_invertible(m, rng), s = random_symmetric(m, rng);
        ASSERT_EQ(make_fd(p) * make_fu(s), make_fu(p * s * p.transpose()) * make_fd(p));
        int r = rng() % (m + 1);
        SymplecticElement w = make_fomega(m, m);
        ASSERT_EQ(w * make_fomega(m, r) * w, make_fomega(m, r));
        // Omega F_Omega(r) swaps the last m-r pairs: F_Omega(m-r) up to reversing coordinates.
        Gf2Matrix rev(m, m);
        for (int i = 0; i < m; i++) {
            rev.set(i, m - 1 - i, true);
        }
        ASSERT_EQ(w * make_fomega(m, r), make_fd(rev) * make_fomega(m, m - r) * make_fd(rev));
    }
}

TEST(symplectic, closure_and_inverse) {
    std::mt19937_64 rng(11);
    for (int m = 1; m <= 8; m++) {
        for (int t = 0; t < 30; t++) {
            SymplecticElement f = random_symplectic(m, rng), g = random_symplectic(m, rng);
            ASSERT_TRUE(is_symplectic(f.matrix()));
            ASSERT_TRUE(is_symplectic((f * g).matrix()));
            ASSERT_TRUE(is_symplectic(f.inverse().matrix()));
            ASSERT_EQ(f * f.inverse(), SymplecticElement::identity(m));
            ASSERT_EQ(f.matrix().transpose() * omega(m) * f.matrix(), omega(m));
        }
    }
}

TEST(bruhat, identity_and_omega) {
    for (int m = 1; m <= 5; m++) {
        BruhatDecomposition id = bruhat_decompose(SymplecticElement::identity(m));
        ASSERT_EQ(id.r, 0);
        ASSERT_EQ(id.p, Gf2Matrix::identity(m));
        ASSERT_EQ(id.sr.rows(), 0);
        ASSERT_EQ(id.m, Gf2Matrix::identity(m));
        ASSERT_TRUE(id.s.is_zero());

        BruhatDecomposition w = bruhat_decompose(omega(m));
        ASSERT_EQ(w.r, m);
        ASSERT_EQ(w.p, Gf2Matrix::identity(m));
        ASSERT_TRUE(w.sr.is_zero());
        ASSERT_EQ(w.m, Gf2Matrix::identity(m));
        ASSERT_TRUE(w.s.is_zero());
        ASSERT_EQ(w.coset.h.matrix, Gf2Matrix::identity(m));
    }
}

TEST(bruhat, rejects_non_symplectic) {
    try {
        bruhat_decompose(Gf2Matrix::from_strings({"0100", "1000", "0010", "0001"}));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::NotSymplectic);
    }
}

TEST(bruhat, roundtrip_random) {
    std::mt19937_64 rng(12);
    for (int m = 1; m <= 6; m++) {
        for (int t = 0; t < 1000; t++) {
            SymplecticElement f = random_symplectic(m, rng);
            BruhatDecomposition d = bruhat_decompose(f);
            ASSERT_EQ(d.recompose(), f);
            ASSERT_EQ(d.factors.recompose(), f);
            ASSERT_TRUE(d.s.is_symmetric());
            ASSERT_TRUE(d.sr.is_symmetric());
            // S~_r really is S_r padded with zeros.
            ASSERT_EQ(d.factors.s1, embed_upper_left(d.sr, m));
            ASSERT_EQ(d.r, rank(f.c()));
            ASSERT_EQ(coset_matrix(d.coset) * make_fd(d.m) * make_fu(d.s), f);
        }
    }
}

TEST(bruhat, exhaustive_small_groups) {
    std::vector<Gf2Matrix> sp2 = brute_force_group(1);
    ASSERT_EQ(sp2.size(), 6u);
    ASSERT_EQ((uint64_t)symplectic_group_order(1), 6u);

    std::vector<Gf2Matrix> sp4 = brute_force_group(2);
    ASSERT_EQ(sp4.size(), 720u);
    ASSERT_EQ((uint64_t)symplectic_group_order(2), 720u);

    std::map<std::vector<uint64_t>, int> reps;
    for (const Gf2Matrix &m : sp4) {
        SymplecticElement f(m);
        BruhatDecomposition d = bruhat_decompose(f);
        ASSERT_EQ(d.recompose(), f);
        // F and its representative share a coset: rep^{-1} F has zero C block.
        ASSERT_TRUE((coset_matrix(d.coset).inverse() * f).c().is_zero());
        std::vector<uint64_t> key = row_space_key(coset_to_lagrangian(d.coset));
        key.push_back(d.coset.r);
        reps[key]++;
    }
    ASSERT_EQ(reps.size(), 15u);
    ASSERT_EQ(lagrangian_count(2), 15u);
    for (const auto &kv : reps) {
        ASSERT_EQ(kv.second, 48);
    }
}

TEST(canonical_rep, constant_on_cosets) {
    std::mt19937_64 rng(13);
    for (int m = 1; m <= 3; m++) {
        std::vector<Gf2Matrix> gl = all_invertible(m);
        for (int t = 0; t < 10; t++) {
            SymplecticElement f = random_symplectic(m, rng);
            CosetRep rep = canonical_rep(f);
            for (const Gf2Matrix &q : gl) {
                ASSERT_EQ(canonical_rep(f * make_fd(q)), rep);
            }
            for (int k = 0; k < 20; k++) {
                ASSERT_EQ(canonical_rep(f * make_fu(random_symmetric(m, rng))), rep);
            }
        }
    }
    CosetRep w = canonical_rep(make_fomega(3, 3));
    ASSERT_EQ(w.r, 3);
    ASSERT_EQ(w.h.matrix, Gf2Matrix::identity(3));
    ASSERT_TRUE(w.sr.is_zero());
}

TEST(canonical_rep, rep_of_rep_is_itself) {
    for (int m = 1; m <= 4; m++) {
        for (int r = 0; r <= m; r++) {
            for_each_subspace(m, r, [&](const SchubertCellRep &h) {
                for (uint64_t sbits = 0; sbits < (uint64_t{1} << (r * (r + 1) / 2)) && sbits < 64; sbits++) {
                    Gf2Matrix sr(r, r);
                    int k = 0;
                    for (int i = 0; i < r; i++) {
                        for (int j = i; j < r; j++, k++) {
                            bool bit = (sbits >> k) & 1;
                            sr.set(i, j, bit);
                            sr.set(j, i, bit);
                        }
                    }
                    CosetRep rep{r, h, sr};
                    ASSERT_EQ(canonical_rep(coset_matrix(rep)), rep);
                }
            });
        }
    }
}

TEST(lagrangian, examples_and_isotropy) {
    CosetRep z{0, column_space(Gf2Matrix::zeros(3, 1)), Gf2Matrix(0, 0)};
    ASSERT_EQ(coset_to_lagrangian(z), Gf2Matrix::hstack(Gf2Matrix::zeros(3, 3), Gf2Matrix::identity(3)));
    CosetRep x{3, column_echelon(Gf2Matrix::identity(3)), Gf2Matrix(3, 3)};
    ASSERT_EQ(coset_to_lagrangian(x), Gf2Matrix::hstack(Gf2Matrix::identity(3), Gf2Matrix::zeros(3, 3)));

    std::mt19937_64 rng(14);
    for (int m = 1; m <= 6; m++) {
        for (int t = 0; t < 100; t++) {
            CosetRep rep = random_coset(m, rng);
            Gf2Matrix l = coset_to_lagrangian(rep);
            ASSERT_EQ(rank(l), m);
            for (int i = 0; i < m; i++) {
                for (int j = 0; j < m; j++) {
                    ASSERT_FALSE(symplectic_dot(l.row(i), l.row(j), m));
                }
            }
            // Same Lagrangian as rs([0 | I] F^{-1}) for the coset matrix.
            Gf2Matrix inv = coset_matrix(rep).inverse().matrix();
            Gf2Matrix bottom = Gf2Matrix::hstack(Gf2Matrix::zeros(m, m), Gf2Matrix::identity(m)) * inv;
            ASSERT_EQ(row_space_key(bottom), row_space_key(l));
        }
    }
}

TEST(lagrangian, bijection_m2) {
    std::set<std::vector<uint64_t>> seen;
    int count = 0;
    for (int r = 0; r <= 2; r++) {
        for_each_subspace(2, r, [&](const SchubertCellRep &h) {
            for (uint64_t sbits = 0; sbits < (uint64_t{1} << (r * (r + 1) / 2)); sbits++) {
                Gf2Matrix sr(r, r);
                int k = 0;
                for (int i = 0; i < r; i++) {
                    for (int j = i; j < r; j++, k++) {
                        bool bit = (sbits >> k) & 1;
                        sr.set(i, j, bit);
                        sr.set(j, i, bit);
                    }
                }
                seen.insert(row_space_key(coset_to_lagrangian(CosetRep{r, h, sr})));
                count++;
            }
        });
    }
    ASSERT_EQ(count, 15);
    ASSERT_EQ(seen.size(), 15u);
}

TEST(random_symplectic, uniform_m1) {
    std::mt19937_64 rng(15);
    std::map<std::vector<uint64_t>, int> hist;
    const int draws = 60000;
    for (int t = 0; t < draws; t++) {
        SymplecticElement f = random_symplectic(1, rng);
        hist[{f.matrix().row_word(0), f.matrix().row_word(1)}]++;
    }
    ASSERT_EQ(hist.size(), 6u);
    double p = 1.0 / 6, mean = draws * p, sigma = std::sqrt(draws * p * (1 - p));
    for (const auto &kv : hist) {
        ASSERT_LT(std::abs(kv.second - mean), 3 * sigma);
    }
}

TEST(random_symplectic, support_m2) {
    std::mt19937_64 rng(16);
    std::set<std::vector<uint64_t>> seen;
    for (int t = 0; t < 20000; t++) {
        SymplecticElement f = random_symplectic(2, rng);
        std::vector<uint64_t> key;
        for (int i = 0; i < 4; i++) {
            key.push_back(f.matrix().row_word(i));
        }
        seen.insert(key);
    }
    ASSERT_EQ(seen.size(), 720u);
}
