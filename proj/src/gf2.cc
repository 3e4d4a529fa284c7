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

#include <algorithm>
#include <bit>
#include <sstream>

#include "bssc/error.h"

namespace bssc {

namespace {

uint64_t low_mask(int n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

uint64_t bit_at(int width, int index) {
    return uint64_t{1} << (width - 1 - index);
}

void check_width(int n) {
    if (n < 0 || n > kMaxWidth) {
        throw Error(ErrorCode::DimensionMismatch, "width " + std::to_string(n) + " outside [0, 64]");
    }
}

/// Reduced row echelon form in place. Returns the pivot column of each of the
/// first rank rows.
std::vector<int> rref(std::vector<uint64_t> &rows, int width) {
    std::vector<int> pivots;
    size_t next = 0;
    for (int c = 0; c < width && next < rows.size(); c++) {
        uint64_t b = bit_at(width, c);
        size_t found = next;
        while (found < rows.size() && !(rows[found] & b)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t k = 0; k < rows.size(); k++) {
            if (k != next && (rows[k] & b)) {
                rows[k] ^= rows[next];
            }
        }
        pivots.push_back(c);
        next++;
    }
    return pivots;
}

}  // namespace

Gf2Vector::Gf2Vector(int size, uint64_t word) : size_(size), word_(word & low_mask(size)) {
    check_width(size);
}

Gf2Vector Gf2Vector::unit(int size, int index) {
    return Gf2Vector(size, bit_at(size, index));
}

Gf2Vector Gf2Vector::parse(std::string_view bits) {
    Gf2Vector v((int)bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set((int)i, true);
        } else if (bits[i] != '0') {
            throw Error(ErrorCode::ParseError, "bad bit character '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

bool Gf2Vector::operator[](int index) const {
    return (word_ & bit_at(size_, index)) != 0;
}

void Gf2Vector::set(int index, bool value) {
    uint64_t b = bit_at(size_, index);
    word_ = value ? (word_ | b) : (word_ & ~b);
}

int Gf2Vector::weight() const {
    return std::popcount(word_);
}

bool Gf2Vector::dot(const Gf2Vector &other) const {
    return std::popcount(word_ & other.word_) & 1;
}

int Gf2Vector::overlap(const Gf2Vector &other) const {
    return std::popcount(word_ & other.word_);
}

Gf2Vector Gf2Vector::head(int k) const {
    return Gf2Vector(k, word_ >> (size_ - k));
}

Gf2Vector Gf2Vector::tail(int k) const {
    return Gf2Vector(k, word_);
}

Gf2Vector Gf2Vector::concat(const Gf2Vector &front, const Gf2Vector &back) {
    int n = front.size_ + back.size_;
    check_width(n);
    uint64_t hi = back.size_ >= 64 ? 0 : front.word_ << back.size_;
    return Gf2Vector(n, hi | back.word_);
}

Gf2Vector Gf2Vector::operator^(const Gf2Vector &other) const {
    if (size_ != other.size_) {
        throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
    }
    return Gf2Vector(size_, word_ ^ other.word_);
}

Gf2Vector &Gf2Vector::operator^=(const Gf2Vector &other) {
    *this = *this ^ other;
    return *this;
}

std::string Gf2Vector::str() const {
    std::string s(size_, '0');
    for (int i = 0; i < size_; i++) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, 0) {
    check_width(cols);
    if (rows < 0) {
        throw Error(ErrorCode::DimensionMismatch, "negative row count");
    }
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; i++) {
        m.data_[i] = bit_at(n, i);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string> &rows) {
    int cols = rows.empty() ? 0 : (int)rows[0].size();
    Gf2Matrix m((int)rows.size(), cols);
    for (size_t i = 0; i < rows.size(); i++) {
        if ((int)rows[i].size() != cols) {
            throw Error(ErrorCode::ParseError, "ragged matrix rows");
        }
        m.data_[i] = Gf2Vector::parse(rows[i]).word();
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_row_words(int cols, std::vector<uint64_t> words) {
    Gf2Matrix m((int)words.size(), cols);
    for (size_t i = 0; i < words.size(); i++) {
        m.data_[i] = words[i] & low_mask(cols);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_columns(int rows, std::span<const Gf2Vector> columns) {
    Gf2Matrix m(rows, (int)columns.size());
    for (size_t j = 0; j < columns.size(); j++) {
        m.set_column((int)j, columns[j]);
    }
    return m;
}

Gf2Matrix Gf2Matrix::parse_text(std::string_view text) {
    std::vector<std::string> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char c : line) {
            if (c != ' ' && c != '\t' && c != '\r') {
                trimmed.push_back(c);
            }
        }
        if (!trimmed.empty()) {
            rows.push_back(trimmed);
        }
    }
    if (rows.empty()) {
        throw Error(ErrorCode::ParseError, "empty matrix");
    }
    if (rows[0].size() > (size_t)kMaxWidth) {
        throw Error(ErrorCode::ParseError, "matrix wider than 64 columns");
    }
    return from_strings(rows);
}

bool Gf2Matrix::get(int row, int col) const {
    return (data_[row] & bit_at(cols_, col)) != 0;
}

void Gf2Matrix::set(int row, int col, bool value) {
    uint64_t b = bit_at(cols_, col);
    data_[row] = value ? (data_[row] | b) : (data_[row] & ~b);
}

Gf2Vector Gf2Matrix::column(int col) const {
    Gf2Vector v(rows_);
    for (int i = 0; i < rows_; i++) {
        v.set(i, get(i, col));
    }
    return v;
}

void Gf2Matrix::set_row(int row, const Gf2Vector &v) {
    if (v.size() != cols_) {
        throw Error(ErrorCode::DimensionMismatch, "row length");
    }
    data_[row] = v.word();
}

void Gf2Matrix::set_column(int col, const Gf2Vector &v) {
    if (v.size() != rows_) {
        throw Error(ErrorCode::DimensionMismatch, "column length");
    }
    for (int i = 0; i < rows_; i++) {
        set(i, col, v[i]);
    }
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; i++) {
        uint64_t w = data_[i];
        while (w) {
            int low = std::countr_zero(w);
            t.set(cols_ - 1 - low, i, true);
            w &= w - 1;
        }
    }
    return t;
}

Gf2Matrix Gf2Matrix::block(int row0, int col0, int rows, int cols) const {
    if (row0 < 0 || col0 < 0 || row0 + rows > rows_ || col0 + cols > cols_) {
        throw Error(ErrorCode::DimensionMismatch, "block out of range");
    }
    Gf2Matrix b(rows, cols);
    int shift = cols_ - col0 - cols;
    for (int i = 0; i < rows; i++) {
        b.data_[i] = (data_[row0 + i] >> shift) & low_mask(cols);
    }
    return b;
}

Gf2Matrix Gf2Matrix::hstack(const Gf2Matrix &left, const Gf2Matrix &right) {
    if (left.rows_ != right.rows_) {
        throw Error(ErrorCode::DimensionMismatch, "hstack row counts differ");
    }
    Gf2Matrix m(left.rows_, left.cols_ + right.cols_);
    for (int i = 0; i < left.rows_; i++) {
        m.data_[i] = Gf2Vector::concat(left.row(i), right.row(i)).word();
    }
    return m;
}

Gf2Matrix Gf2Matrix::vstack(const Gf2Matrix &top, const Gf2Matrix &bottom) {
    if (top.cols_ != bottom.cols_) {
        throw Error(ErrorCode::DimensionMismatch, "vstack column counts differ");
    }
    Gf2Matrix m(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), m.data_.begin() + top.rows_);
    return m;
}

Gf2Matrix Gf2Matrix::blocks(const Gf2Matrix &a, const Gf2Matrix &b, const Gf2Matrix &c, const Gf2Matrix &d) {
    return vstack(hstack(a, b), hstack(c, d));
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix &other) const {
    if (cols_ != other.rows_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
    }
    Gf2Matrix p(rows_, other.cols_);
    for (int i = 0; i < rows_; i++) {
        uint64_t acc = 0;
        uint64_t w = data_[i];
        while (w) {
            int low = std::countr_zero(w);
            acc ^= other.data_[cols_ - 1 - low];
            w &= w - 1;
        }
        p.data_[i] = acc;
    }
    return p;
}

Gf2Vector Gf2Matrix::operator*(const Gf2Vector &v) const {
    if (cols_ != v.size()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector shapes");
    }
    Gf2Vector out(rows_);
    for (int i = 0; i < rows_; i++) {
        if (std::popcount(data_[i] & v.word()) & 1) {
            out.set(i, true);
        }
    }
    return out;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix sum shapes");
    }
    Gf2Matrix s(rows_, cols_);
    for (int i = 0; i < rows_; i++) {
        s.data_[i] = data_[i] ^ other.data_[i];
    }
    return s;
}

bool Gf2Matrix::is_symmetric() const {
    return is_square() && transpose() == *this;
}

bool Gf2Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint64_t w) { return w == 0; });
}

std::string Gf2Matrix::to_text() const {
    std::string out;
    for (int i = 0; i < rows_; i++) {
        out += row(i).str();
        out += '\n';
    }
    return out;
}

int quadratic_form(const Gf2Matrix &s, uint64_t v) {
    int total = 0;
    int n = s.rows();
    for (int i = 0; i < n; i++) {
        if ((v >> (n - 1 - i)) & 1) {
            total += std::popcount(s.row_word(i) & v);
        }
    }
    return total;
}

int rank(const Gf2Matrix &m) {
    std::vector<uint64_t> rows(m.rows());
    for (int i = 0; i < m.rows(); i++) {
        rows[i] = m.row_word(i);
    }
    return (int)rref(rows, m.cols()).size();
}

Gf2Matrix invert(const Gf2Matrix &m) {
    if (!m.is_square()) {
        throw Error(ErrorCode::Singular, "matrix is not square");
    }
    int n = m.rows();
    std::vector<uint64_t> left(n), right(n);
    for (int i = 0; i < n; i++) {
        left[i] = m.row_word(i);
        right[i] = bit_at(n, i);
    }
    for (int c = 0; c < n; c++) {
        uint64_t b = bit_at(n, c);
        int found = c;
        while (found < n && !(left[found] & b)) {
            found++;
        }
        if (found == n) {
            throw Error(ErrorCode::Singular, "matrix has rank < " + std::to_string(n));
        }
        std::swap(left[c], left[found]);
        std::swap(right[c], right[found]);
        for (int k = 0; k < n; k++) {
            if (k != c && (left[k] & b)) {
                left[k] ^= left[c];
                right[k] ^= right[c];
            }
        }
    }
    return Gf2Matrix::from_row_words(n, right);
}

bool is_invertible(const Gf2Matrix &m) {
    return m.is_square() && rank(m) == m.rows();
}

Gf2Matrix null_space(const Gf2Matrix &m) {
    std::vector<uint64_t> rows(m.rows());
    for (int i = 0; i < m.rows(); i++) {
        rows[i] = m.row_word(i);
    }
    int n = m.cols();
    std::vector<int> pivots = rref(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<Gf2Vector> basis;
    for (int f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        Gf2Vector x = Gf2Vector::unit(n, f);
        for (size_t k = 0; k < pivots.size(); k++) {
            if (rows[k] & bit_at(n, f)) {
                x.set(pivots[k], true);
            }
        }
        basis.push_back(x);
    }
    return Gf2Matrix::from_columns(n, basis);
}

std::vector<int> SchubertCellRep::nonpivots() const {
    std::vector<int> out;
    size_t j = 0;
    for (int i = 0; i < m; i++) {
        if (j < pivots.size() && pivots[j] == i) {
            j++;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

int free_bit_count(int m, std::span<const int> pivots) {
    int r = (int)pivots.size();
    int total = 0;
    for (int j = 0; j < r; j++) {
        total += (m - 1 - pivots[j]) - (r - 1 - j);
    }
    return total;
}

int SchubertCellRep::free_bit_count() const {
    return bssc::free_bit_count(m, pivots);
}

namespace {

template <typename Fn>
void for_each_free_position(int m, const std::vector<int> &pivots, Fn fn) {
    std::vector<bool> is_pivot(m, false);
    for (int p : pivots) {
        is_pivot[p] = true;
    }
    for (size_t j = 0; j < pivots.size(); j++) {
        for (int i = pivots[j] + 1; i < m; i++) {
            if (!is_pivot[i]) {
                fn(i, (int)j);
            }
        }
    }
}

}  // namespace

uint64_t SchubertCellRep::free_bits() const {
    uint64_t bits = 0;
    for_each_free_position(m, pivots, [&](int i, int j) { bits = (bits << 1) | (matrix.get(i, j) ? 1 : 0); });
    return bits;
}

SchubertCellRep SchubertCellRep::from_free_bits(int m, std::vector<int> pivots, uint64_t bits) {
    SchubertCellRep h;
    h.m = m;
    h.matrix = selection_matrix(m, pivots);
    int remaining = bssc::free_bit_count(m, pivots);
    for_each_free_position(m, pivots, [&](int i, int j) {
        remaining--;
        h.matrix.set(i, j, (bits >> remaining) & 1);
    });
    h.pivots = std::move(pivots);
    return h;
}

Gf2Matrix selection_matrix(int m, std::span<const int> indices) {
    Gf2Matrix s(m, (int)indices.size());
    for (size_t j = 0; j < indices.size(); j++) {
        s.set(indices[j], (int)j, true);
    }
    return s;
}

SchubertCellRep column_space(const Gf2Matrix &m) {
    std::vector<uint64_t> rows(m.cols());
    Gf2Matrix t = m.transpose();
    for (int i = 0; i < t.rows(); i++) {
        rows[i] = t.row_word(i);
    }
    std::vector<int> pivots = rref(rows, m.rows());
    rows.resize(pivots.size());
    SchubertCellRep h;
    h.m = m.rows();
    h.pivots = pivots;
    h.matrix = Gf2Matrix::from_row_words(m.rows(), rows).transpose();
    if (pivots.empty()) {
        h.matrix = Gf2Matrix(m.rows(), 0);
    }
    return h;
}

SchubertCellRep column_echelon(const Gf2Matrix &m) {
    SchubertCellRep h = column_space(m);
    if (h.r() != m.cols()) {
        throw Error(
            ErrorCode::RankDeficient,
            "matrix has " + std::to_string(m.cols()) + " columns but rank " + std::to_string(h.r()));
    }
    return h;
}

DualComplement dual_complement(const SchubertCellRep &h) {
    int m = h.m;
    std::vector<int> np = h.nonpivots();
    int k = (int)np.size();
    Gf2Matrix raw(m, k);
    for (int c = 0; c < k; c++) {
        raw.set(np[c], c, true);
        for (int j = 0; j < h.r(); j++) {
            if (h.matrix.get(np[c], j)) {
                raw.set(h.pivots[j], c, true);
            }
        }
    }
    SchubertCellRep rev;
    rev.m = m;
    rev.matrix = Gf2Matrix(m, k);
    for (int i = 0; i < m; i++) {
        for (int c = 0; c < k; c++) {
            rev.matrix.set(m - 1 - i, k - 1 - c, raw.get(i, c));
        }
    }
    for (int c = k - 1; c >= 0; c--) {
        rev.pivots.push_back(m - 1 - np[c]);
    }
    return DualComplement{raw, column_space(raw), rev};
}

Completion complete_to_invertible(const SchubertCellRep &h) {
    std::vector<int> np = h.nonpivots();
    Completion c;
    c.p = Gf2Matrix::hstack(h.matrix, selection_matrix(h.m, np));
    c.p_inv_t = Gf2Matrix::hstack(selection_matrix(h.m, h.pivots), dual_complement(h).raw);
    c.p_inv = c.p_inv_t.transpose();
    return c;
}

uint64_t gaussian_binomial(int m, int r) {
    if (r < 0 || r > m) {
        return 0;
    }
    unsigned __int128 g = 1;
    for (int k = 0; k < r; k++) {
        g = g * ((uint64_t{1} << (m - k)) - 1) / ((uint64_t{1} << (k + 1)) - 1);
    }
    return (uint64_t)g;
}

bool next_combination(std::vector<int> &combo, int n) {
    int r = (int)combo.size();
    for (int i = r - 1; i >= 0; i--) {
        if (combo[i] < n - r + i) {
            combo[i]++;
            for (int k = i + 1; k < r; k++) {
                combo[k] = combo[k - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

namespace {

std::vector<int> first_combination(int r) {
    std::vector<int> c(r);
    for (int i = 0; i < r; i++) {
        c[i] = i;
    }
    return c;
}

}  // namespace

void for_each_subspace(int m, int r, const std::function<void(const SchubertCellRep &)> &visit) {
    if (r < 0 || r > m) {
        return;
    }
    std::vector<int> pivots = first_combination(r);
    do {
        uint64_t count = uint64_t{1} << free_bit_count(m, pivots);
        for (uint64_t bits = 0; bits < count; bits++) {
            visit(SchubertCellRep::from_free_bits(m, pivots, bits));
        }
    } while (next_combination(pivots, m));
}

SchubertCellRep subspace_at(int m, int r, uint64_t index) {
    if (index >= gaussian_binomial(m, r)) {
        throw Error(ErrorCode::DimensionMismatch, "subspace index out of range");
    }
    std::vector<int> pivots = first_combination(r);
    while (true) {
        uint64_t count = uint64_t{1} << free_bit_count(m, pivots);
        if (index < count) {
            return SchubertCellRep::from_free_bits(m, pivots, index);
        }
        index -= count;
        next_combination(pivots, m);
    }
}

uint64_t subspace_index(const SchubertCellRep &h) {
    std::vector<int> pivots = first_combination(h.r());
    uint64_t offset = 0;
    while (pivots != h.pivots) {
        offset += uint64_t{1} << free_bit_count(h.m, pivots);
        next_combination(pivots, h.m);
    }
    return offset + h.free_bits();
}

}  // namespace bssc
