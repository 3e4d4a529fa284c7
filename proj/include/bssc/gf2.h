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

#ifndef BSSC_GF2_H
#define BSSC_GF2_H

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bssc {

/// Largest supported number of qubits / binary dimension m (N = 2^m = 4096).
constexpr int kMaxM = 12;

/// Widest row a Gf2Matrix can hold; one machine word per row.
constexpr int kMaxWidth = 64;

/// A binary vector of fixed length n <= 64, packed into one word.
///
/// Index 0 is the most significant of the n stored bits, so the vector
/// (v_0, ..., v_{n-1}) is the integer sum v_i 2^{n-1-i}. That integer is also
/// the position of the basis vector e_{v_0} (x) ... (x) e_{v_{n-1}} in C^{2^n}.
class Gf2Vector {
   public:
    Gf2Vector() = default;
    explicit Gf2Vector(int size, uint64_t word = 0);

    static Gf2Vector unit(int size, int index);
    static Gf2Vector parse(std::string_view bits);

    int size() const {
        return size_;
    }
    uint64_t word() const {
        return word_;
    }
    bool operator[](int index) const;
    void set(int index, bool value);

    int weight() const;
    bool is_zero() const {
        return word_ == 0;
    }
    /// Parity of the elementwise product.
    bool dot(const Gf2Vector &other) const;
    /// Integer number of positions where both are 1 (needed for mod-4 phases).
    int overlap(const Gf2Vector &other) const;

    /// First k coordinates.
    Gf2Vector head(int k) const;
    /// Last k coordinates.
    Gf2Vector tail(int k) const;
    static Gf2Vector concat(const Gf2Vector &front, const Gf2Vector &back);

    Gf2Vector operator^(const Gf2Vector &other) const;
    Gf2Vector &operator^=(const Gf2Vector &other);
    bool operator==(const Gf2Vector &other) const = default;

    std::string str() const;

   private:
    int size_ = 0;
    uint64_t word_ = 0;
};

/// Dense binary matrix, row-major, one 64-bit word per row. Column 0 is the
/// most significant bit of each row word (same convention as Gf2Vector).
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    static Gf2Matrix identity(int n);
    static Gf2Matrix zeros(int rows, int cols) {
        return Gf2Matrix(rows, cols);
    }
    /// Rows given as '0'/'1' strings.
    static Gf2Matrix from_strings(const std::vector<std::string> &rows);
    static Gf2Matrix from_row_words(int cols, std::vector<uint64_t> words);
    static Gf2Matrix from_columns(int rows, std::span<const Gf2Vector> columns);
    /// Text format: one row per line, '0'/'1' characters, no separators.
    static Gf2Matrix parse_text(std::string_view text);

    int rows() const {
        return rows_;
    }
    int cols() const {
        return cols_;
    }
    bool get(int row, int col) const;
    void set(int row, int col, bool value);
    uint64_t row_word(int row) const {
        return data_[row];
    }
    Gf2Vector row(int row) const {
        return Gf2Vector(cols_, data_[row]);
    }
    Gf2Vector column(int col) const;
    void set_row(int row, const Gf2Vector &v);
    void set_column(int col, const Gf2Vector &v);

    Gf2Matrix transpose() const;
    Gf2Matrix block(int row0, int col0, int rows, int cols) const;
    static Gf2Matrix hstack(const Gf2Matrix &left, const Gf2Matrix &right);
    static Gf2Matrix vstack(const Gf2Matrix &top, const Gf2Matrix &bottom);
    /// 2x2 block matrix [[a, b], [c, d]].
    static Gf2Matrix blocks(const Gf2Matrix &a, const Gf2Matrix &b, const Gf2Matrix &c, const Gf2Matrix &d);

    Gf2Matrix operator*(const Gf2Matrix &other) const;
    Gf2Vector operator*(const Gf2Vector &v) const;
    Gf2Matrix operator+(const Gf2Matrix &other) const;
    bool operator==(const Gf2Matrix &other) const = default;

    bool is_square() const {
        return rows_ == cols_;
    }
    bool is_symmetric() const;
    bool is_zero() const;

    std::string to_text() const;

   private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint64_t> data_;
};

/// The integer v^T S v (not reduced), for v given as a packed word.
int quadratic_form(const Gf2Matrix &s, uint64_t v);

/// Dimension of the row space.
int rank(const Gf2Matrix &m);

/// Throws Error(Singular) when the matrix is not invertible.
Gf2Matrix invert(const Gf2Matrix &m);

bool is_invertible(const Gf2Matrix &m);

/// Basis of {x : M x = 0} as the columns of a cols x (cols - rank) matrix.
Gf2Matrix null_space(const Gf2Matrix &m);

/// A subspace H of F_2^m of dimension r, stored as its unique m x r matrix in
/// column reduced echelon form. pivots are the 0-based leading rows i_0 < ... <
/// i_{r-1}; column j has a 1 at row pivots[j], zeros above it, and row pivots[j]
/// is zero outside column j. The remaining entries below each pivot are free.
struct SchubertCellRep {
    int m = 0;
    std::vector<int> pivots;
    Gf2Matrix matrix;

    int r() const {
        return static_cast<int>(pivots.size());
    }
    std::vector<int> nonpivots() const;

    /// Number of free entries: sum_j (m - 1 - i_j) - (r - 1 - j).
    int free_bit_count() const;
    /// Free entries packed column by column, top to bottom, first one most significant.
    uint64_t free_bits() const;
    static SchubertCellRep from_free_bits(int m, std::vector<int> pivots, uint64_t bits);

    bool operator==(const SchubertCellRep &other) const = default;
};

int free_bit_count(int m, std::span<const int> pivots);

/// m x k matrix whose j-th column is e_{indices[j]} (the I_I of a pivot set).
Gf2Matrix selection_matrix(int m, std::span<const int> indices);

/// Echelon representative of cs(M) for an m x r matrix of full column rank.
/// Throws Error(RankDeficient) if rank(M) < r.
SchubertCellRep column_echelon(const Gf2Matrix &m);

/// Echelon representative of cs(M) for a matrix of any shape or rank.
SchubertCellRep column_space(const Gf2Matrix &m);

struct DualComplement {
    /// The m x (m-r) matrix with H^T raw = 0 whose rows at the non-pivot
    /// positions form the identity.
    Gf2Matrix raw;
    /// Echelon representative of cs(raw), the orthogonal complement of cs(H).
    SchubertCellRep echelon;
    /// raw with rows and columns reversed, which is already in echelon form
    /// (pivots m-1-k for the non-pivot rows k of H, reversed).
    SchubertCellRep reverted;
};

DualComplement dual_complement(const SchubertCellRep &h);

struct Completion {
    /// [H | I_{nonpivots}], invertible.
    Gf2Matrix p;
    Gf2Matrix p_inv;
    /// [I_{pivots} | raw dual], equal to transpose(p_inv).
    Gf2Matrix p_inv_t;
};

Completion complete_to_invertible(const SchubertCellRep &h);

/// Number of r-dimensional subspaces of F_2^m.
uint64_t gaussian_binomial(int m, int r);

/// Visits every r-dimensional subspace of F_2^m exactly once, ordered by pivot
/// set (lexicographic) and then by free bits.
void for_each_subspace(int m, int r, const std::function<void(const SchubertCellRep &)> &visit);

/// The index-th subspace in for_each_subspace order.
SchubertCellRep subspace_at(int m, int r, uint64_t index);

/// Inverse of subspace_at.
uint64_t subspace_index(const SchubertCellRep &h);

/// Advances an increasing index tuple over {0..n-1} to its lexicographic
/// successor. Returns false after the last one.
bool next_combination(std::vector<int> &combo, int n);

}  // namespace bssc

#endif
