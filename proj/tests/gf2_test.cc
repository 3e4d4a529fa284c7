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

#include "bssc/gf2.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "bssc/error.h"

using namespace bssc;

namespace {

Gf2Matrix random_matrix(std::mt19937_64 &rng, int rows, int cols) {
    Gf2Matrix m(rows, cols);
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            m.set(i, j, rng() & 1);
        }
    }
    return m;
}

// All vectors in the column span, as a sorted set of words.
std::set<uint64_t> span_of(const Gf2Matrix &m) {
    std::set<uint64_t> out;
    for (uint64_t x = 0; x < (uint64_t{1} << m.cols()); x++) {
        out.insert((m * Gf2Vector(m.cols(), x)).word());
    }
    return out;
}

int brute_rank(const Gf2Matrix &m) {
    size_t n = span_of(m).size();
    int r = 0;
    while ((size_t{1} << r) < n) {
        r++;
    }
    return r;
}

}  // namespace

TEST(gf2_vector, bit_order) {
    Gf2Vector v = Gf2Vector::parse("100");
    ASSERT_EQ(v.word(), 4u);
    ASSERT_TRUE(v[0]);
    ASSERT_FALSE(v[2]);
    ASSERT_EQ(Gf2Vector::unit(3, 2).word(), 1u);
    ASSERT_EQ(v.str(), "100");
    ASSERT_EQ(Gf2Vector::parse("1011").head(2).str(), "10");
    ASSERT_EQ(Gf2Vector::parse("1011").tail(2).str(), "11");
    ASSERT_EQ(Gf2Vector::concat(Gf2Vector::parse("10"), Gf2Vector::parse("011")).str(), "10011");
    ASSERT_EQ(Gf2Vector::parse("111").overlap(Gf2Vector::parse("101")), 2);
    ASSERT_FALSE(Gf2Vector::parse("111").dot(Gf2Vector::parse("101")));
    ASSERT_THROW(Gf2Vector::parse("10x"), Error);
}

TEST(gf2_matrix, rank_examples) {
    ASSERT_EQ(rank(Gf2Matrix::identity(3)), 3);
    ASSERT_EQ(rank(Gf2Matrix::zeros(3, 3)), 0);
    ASSERT_EQ(rank(Gf2Matrix::from_strings({"10", "10", "01"})), 2);
}

TEST(gf2_matrix, rank_matches_span_size) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; t++) {
        int rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        Gf2Matrix m = random_matrix(rng, rows, cols);
        ASSERT_EQ(rank(m), brute_rank(m));
        ASSERT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(gf2_matrix, product_matches_definition) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; t++) {
        Gf2Matrix a = random_matrix(rng, 4, 5), b = random_matrix(rng, 5, 3);
        Gf2Matrix p = a * b;
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 3; j++) {
                bool s = false;
                for (int k = 0; k < 5; k++) {
                    s ^= a.get(i, k) && b.get(k, j);
                }
                ASSERT_EQ(p.get(i, j), s);
            }
        }
        ASSERT_EQ(p.transpose(), b.transpose() * a.transpose());
    }
}

TEST(gf2_matrix, blocks_and_text) {
    Gf2Matrix m = Gf2Matrix::from_strings({"1100", "0110", "0011", "1001"});
    ASSERT_EQ(m.block(1, 1, 2, 2), Gf2Matrix::from_strings({"11", "01"}));
    Gf2Matrix rebuilt = Gf2Matrix::blocks(m.block(0, 0, 2, 2), m.block(0, 2, 2, 2), m.block(2, 0, 2, 2), m.block(2, 2, 2, 2));
    ASSERT_EQ(rebuilt, m);
    ASSERT_EQ(Gf2Matrix::parse_text(m.to_text()), m);
    ASSERT_EQ(Gf2Matrix::parse_text("10\r\n 01\n\n"), Gf2Matrix::identity(2));
    ASSERT_THROW(Gf2Matrix::parse_text("10\n1\n"), Error);
    ASSERT_THROW(Gf2Matrix::parse_text(""), Error);
}

TEST(gf2_matrix, invert_examples) {
    ASSERT_EQ(invert(Gf2Matrix::identity(4)), Gf2Matrix::identity(4));
    Gf2Matrix p0 = Gf2Matrix::from_strings({"100", "001", "010"});
    ASSERT_EQ(invert(p0), p0);
    Gf2Matrix p1 = Gf2Matrix::from_strings({"100", "101", "010"});
    Gf2Matrix p1_inv_t = Gf2Matrix::from_strings({"101", "001", "010"});
    ASSERT_EQ(invert(p1).transpose(), p1_inv_t);
    try {
        invert(Gf2Matrix::from_strings({"11", "11"}));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::Singular);
    }
}

TEST(gf2_matrix, invert_random) {
    std::mt19937_64 rng(3);
    int found = 0;
    for (int t = 0; t < 500; t++) {
        int n = 1 + rng() % 8;
        Gf2Matrix m = random_matrix(rng, n, n);
        if (rank(m) == n) {
            found++;
            ASSERT_EQ(m * invert(m), Gf2Matrix::identity(n));
            ASSERT_EQ(invert(m) * m, Gf2Matrix::identity(n));
        } else {
            ASSERT_THROW(invert(m), Error);
        }
    }
    ASSERT_GT(found, 50);
}

TEST(gf2_matrix, null_space) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; t++) {
        int rows = 1 + rng() % 5, cols = 1 + rng() % 6;
        Gf2Matrix m = random_matrix(rng, rows, cols);
        Gf2Matrix k = null_space(m);
        ASSERT_EQ(k.rows(), cols);
        ASSERT_EQ(k.cols(), cols - rank(m));
        ASSERT_EQ(rank(k), k.cols());
        ASSERT_TRUE((m * k).is_zero());
    }
}

TEST(schubert, column_echelon_examples) {
    SchubertCellRep a = column_echelon(Gf2Matrix::from_strings({"10", "01", "00"}));
    ASSERT_EQ(a.pivots, (std::vector<int>{0, 1}));
    ASSERT_EQ(a.free_bits(), 0u);

    SchubertCellRep b = column_echelon(Gf2Matrix::from_strings({"10", "10", "01"}));
    ASSERT_EQ(b.pivots, (std::vector<int>{0, 2}));
    ASSERT_EQ(b.matrix, Gf2Matrix::from_strings({"10", "10", "01"}));
    ASSERT_EQ(b.free_bits(), 1u);

    Gf2Matrix g = Gf2Matrix::from_strings({"110", "011", "001"});
    SchubertCellRep c = column_echelon(g);
    ASSERT_EQ(c.matrix, Gf2Matrix::identity(3));

    try {
        column_echelon(Gf2Matrix::from_strings({"11", "11", "00"}));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::RankDeficient);
    }
}

TEST(schubert, echelon_is_basis_independent) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; t++) {
        int m = 1 + rng() % 6;
        Gf2Matrix a = random_matrix(rng, m, 1 + rng() % m);
        SchubertCellRep h = column_space(a);
        ASSERT_EQ(span_of(h.matrix), span_of(a));
        // Re-mix columns: same subspace must give an identical representative.
        Gf2Matrix mixed = a * random_matrix(rng, a.cols(), a.cols());
        if (rank(mixed) == h.r()) {
            ASSERT_EQ(column_space(mixed), h);
        }
        // Echelon shape.
        for (int j = 0; j < h.r(); j++) {
            ASSERT_TRUE(h.matrix.get(h.pivots[j], j));
            for (int i = 0; i < h.pivots[j]; i++) {
                ASSERT_FALSE(h.matrix.get(i, j));
            }
            for (int k = 0; k < h.r(); k++) {
                if (k != j) {
                    ASSERT_FALSE(h.matrix.get(h.pivots[j], k));
                }
            }
        }
    }
}

TEST(schubert, dual_example) {
    for (int u = 0; u < 2; u++) {
        SchubertCellRep h = SchubertCellRep::from_free_bits(3, {0, 2}, u);
        DualComplement d = dual_complement(h);
        ASSERT_EQ(d.raw, Gf2Matrix::from_strings({u ? "1" : "0", "1", "0"}));
        ASSERT_TRUE((h.matrix.transpose() * d.echelon.matrix).is_zero());
    }
}

TEST(schubert, dual_edge_cases) {
    SchubertCellRep full = column_echelon(Gf2Matrix::identity(4));
    ASSERT_EQ(dual_complement(full).raw.cols(), 0);
    SchubertCellRep empty = column_space(Gf2Matrix::zeros(4, 1));
    ASSERT_EQ(empty.r(), 0);
    ASSERT_EQ(dual_complement(empty).raw, Gf2Matrix::identity(4));
    ASSERT_EQ(complete_to_invertible(full).p, Gf2Matrix::identity(4));
}

TEST(schubert, completion_example) {
    SchubertCellRep h0 = SchubertCellRep::from_free_bits(3, {0, 2}, 0);
    Completion c0 = complete_to_invertible(h0);
    ASSERT_EQ(c0.p, Gf2Matrix::from_strings({"100", "001", "010"}));
    ASSERT_EQ(c0.p_inv_t, c0.p);

    SchubertCellRep h1 = SchubertCellRep::from_free_bits(3, {0, 2}, 1);
    Completion c1 = complete_to_invertible(h1);
    ASSERT_EQ(c1.p, Gf2Matrix::from_strings({"100", "101", "010"}));
    ASSERT_EQ(c1.p_inv_t, Gf2Matrix::from_strings({"101", "001", "010"}));
}

TEST(schubert, exhaustive_dual_and_completion) {
    for (int m = 1; m <= 6; m++) {
        for (int r = 0; r <= m; r++) {
            for_each_subspace(m, r, [&](const SchubertCellRep &h) {
                DualComplement d = dual_complement(h);
                std::vector<int> np = h.nonpivots();
                ASSERT_TRUE((h.matrix.transpose() * d.raw).is_zero());
                ASSERT_EQ(rank(d.raw), m - r);
                ASSERT_EQ(d.echelon.r(), m - r);
                ASSERT_EQ(column_space(d.reverted.matrix), d.reverted);
                Completion c = complete_to_invertible(h);
                ASSERT_EQ(c.p * c.p_inv, Gf2Matrix::identity(m));
                ASSERT_EQ(c.p_inv_t, c.p_inv.transpose());
                Gf2Matrix ii = selection_matrix(m, h.pivots);
                Gf2Matrix ic = selection_matrix(m, np);
                ASSERT_EQ(ii.transpose() * h.matrix, Gf2Matrix::identity(r));
                ASSERT_TRUE((ii.transpose() * ic).is_zero());
                ASSERT_EQ(d.raw.transpose() * ic, Gf2Matrix::identity(m - r));
            });
        }
    }
}

TEST(schubert, free_bit_count_matches_enumeration) {
    for (int m = 1; m <= 5; m++) {
        for (int r = 0; r <= m && m * r <= 16; r++) {
            // Count echelon matrices per pivot set by brute force.
            std::map<std::vector<int>, uint64_t> counts;
            for (uint64_t bits = 0; bits < (uint64_t{1} << (m * r)); bits++) {
                Gf2Matrix a(m, r);
                for (int k = 0; k < m * r; k++) {
                    a.set(k / r, k % r, (bits >> k) & 1);
                }
                if (rank(a) == r) {
                    SchubertCellRep h = column_echelon(a);
                    if (h.matrix == a) {
                        counts[h.pivots]++;
                    }
                }
            }
            for (const auto &[pivots, count] : counts) {
                ASSERT_EQ(count, uint64_t{1} << free_bit_count(m, pivots));
            }
        }
    }
}

TEST(grassmannian, counts) {
    // Brute-force oracle: distinct column spans of all m x r matrices of rank r.
    for (int m = 1; m <= 4; m++) {
        for (int r = 0; r <= m; r++) {
            std::set<std::set<uint64_t>> spaces;
            for (uint64_t bits = 0; bits < (uint64_t{1} << (m * r)); bits++) {
                Gf2Matrix a(m, r);
                for (int k = 0; k < m * r; k++) {
                    a.set(k / r, k % r, (bits >> k) & 1);
                }
                if (rank(a) == r) {
                    spaces.insert(span_of(a));
                }
            }
            uint64_t n = 0;
            for_each_subspace(m, r, [&](const SchubertCellRep &h) {
                ASSERT_TRUE(spaces.count(span_of(h.matrix)));
                n++;
            });
            ASSERT_EQ(n, spaces.size());
            ASSERT_EQ(gaussian_binomial(m, r), spaces.size());
        }
    }
    ASSERT_EQ(gaussian_binomial(3, 2), 7u);
    ASSERT_EQ(gaussian_binomial(2, 1), 3u);
    ASSERT_EQ(gaussian_binomial(5, 0), 1u);
}

TEST(grassmannian, product_formula) {
    for (int m = 1; m <= 6; m++) {
        for (int r = 0; r <= m; r++) {
            double num = 1, den = 1;
            for (int i = 0; i < r; i++) {
                num *= 1.0 - std::pow(2.0, m - i);
                den *= 1.0 - std::pow(2.0, i + 1);
            }
            uint64_t n = 0;
            for_each_subspace(m, r, [&](const SchubertCellRep &) { n++; });
            ASSERT_EQ((double)n, num / den);
        }
    }
}

TEST(grassmannian, index_roundtrip) {
    for (int m = 1; m <= 5; m++) {
        for (int r = 0; r <= m; r++) {
            uint64_t i = 0;
            for_each_subspace(m, r, [&](const SchubertCellRep &h) {
                ASSERT_EQ(subspace_index(h), i);
                ASSERT_EQ(subspace_at(m, r, i), h);
                i++;
            });
        }
    }
}
