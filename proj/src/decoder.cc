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

#include "bssc/decoder.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "bssc/error.h"
#include "bssc/fwht.h"

namespace bssc {

namespace {

const cd kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int log2_length(size_t n) {
    if (n == 0 || !std::has_single_bit(n) || n > (size_t{1} << kMaxM)) {
        throw Error(ErrorCode::LengthMismatch, "signal length is not 2^m with m <= 12");
    }
    return std::countr_zero(n);
}

double energy(std::span<const cd> s) {
    double e = 0;
    for (const cd &x : s) {
        e += std::norm(x);
    }
    return e;
}

// u = P^{-1} a for every a, built from the columns of P^{-1}.
std::vector<uint64_t> preimage_table(const Gf2Matrix &p_inv) {
    int m = p_inv.rows();
    std::vector<uint64_t> cols(m);
    for (int j = 0; j < m; j++) {
        cols[j] = p_inv.column(j).word();
    }
    std::vector<uint64_t> out(size_t{1} << m);
    for (uint64_t a = 1; a < out.size(); a++) {
        int k = std::countr_zero(a);
        out[a] = out[a & (a - 1)] ^ cols[m - 1 - k];
    }
    return out;
}

std::vector<int> quadratic_table(const Gf2Matrix &sr) {
    std::vector<int> out(size_t{1} << sr.rows());
    for (uint64_t x = 0; x < out.size(); x++) {
        out[x] = quadratic_form(sr, x) & 3;
    }
    return out;
}

// Same amplitudes as bssc_vector, without the exact intermediate.
std::vector<cd> render(const BsscId &id) {
    int m = id.m, r = id.r;
    std::vector<uint64_t> u_of = preimage_table(complete_to_invertible(id.h).p_inv);
    std::vector<int> q = quadratic_table(id.sr);
    uint64_t low = (uint64_t{1} << (m - r)) - 1;
    uint64_t b = id.b.word();
    double scale = std::pow(2.0, -0.5 * r);
    std::vector<cd> out(size_t{1} << m);
    for (uint64_t a = 0; a < out.size(); a++) {
        uint64_t u = u_of[a];
        if (((u ^ b) & low) != 0) {
            continue;
        }
        int k = q[u >> (m - r)] + 2 * std::popcount(u & b);
        out[a] = kPowersOfI[k & 3] * scale;
    }
    return out;
}

std::optional<BsscId> decode_rank_with(
    const WeylDiagSpectrum &t, std::span<const cd> s, int r, const DecodeOptions &options) {
    try {
        SchubertCellRep h = pattern_from_dual(recover_subspace(t, r, options));
        if (h.r() != r) {
            return std::nullopt;
        }
        Gf2Matrix sr = recover_symmetric(s, h);
        Gf2Vector b = dechirp(s, h, sr);
        return BsscId{t.m, r, h, sr, b};
    } catch (const Error &) {
        return std::nullopt;
    }
}

std::vector<int> rank_list(int m, const DecodeOptions &options) {
    std::vector<int> out;
    if (options.ranks.empty()) {
        for (int r = 0; r <= m; r++) {
            out.push_back(r);
        }
        return out;
    }
    for (int r : options.ranks) {
        if (r < 0 || r > m) {
            throw Error(ErrorCode::ConfigError, "rank hypothesis out of range");
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Candidate {
    BsscId id;
    std::vector<cd> w;
    double residual = 0;
};

// One candidate per rank hypothesis, best residual first; ties go to the larger r.
std::vector<Candidate> rank_candidates(
    std::span<const cd> s, const DecodeOptions &options, const std::vector<BsscId> &exclude) {
    int m = log2_length(s.size());
    WeylDiagSpectrum t = weyl_diag(s);
    double eps = 1e-12 * std::sqrt(energy(s));
    std::vector<Candidate> out;
    for (int r : rank_list(m, options)) {
        std::optional<BsscId> id = decode_rank_with(t, s, r, options);
        if (!id || std::find(exclude.begin(), exclude.end(), *id) != exclude.end()) {
            continue;
        }
        std::vector<cd> w = render(*id);
        double res = projective_residual(s, w);
        out.push_back(Candidate{*id, std::move(w), res});
    }
    std::stable_sort(out.begin(), out.end(), [&](const Candidate &a, const Candidate &b) {
        if (std::abs(a.residual - b.residual) <= eps) {
            return a.id.r > b.id.r;
        }
        return a.residual < b.residual;
    });
    return out;
}

std::optional<Candidate> best_candidate(
    std::span<const cd> s, const DecodeOptions &options, const std::vector<BsscId> &exclude) {
    std::vector<Candidate> all = rank_candidates(s, options, exclude);
    if (all.empty()) {
        return std::nullopt;
    }
    return std::move(all.front());
}

MultiDecodeResult pursue(std::span<const cd> s, int L, const DecodeOptions &options, const Candidate *first) {
    MultiDecodeResult out;
    std::vector<std::vector<cd>> columns;
    std::vector<cd> residual(s.begin(), s.end());
    for (int l = 0; l < L; l++) {
        if (!(energy(residual) > 0)) {
            break;
        }
        std::optional<Candidate> pick;
        if (l == 0 && first) {
            pick = *first;
        } else {
            pick = best_candidate(residual, options, out.ids);
        }
        if (!pick) {
            break;
        }
        out.ids.push_back(pick->id);
        columns.push_back(std::move(pick->w));
        out.coefficients = least_squares(columns, s);
        residual.assign(s.begin(), s.end());
        for (size_t j = 0; j < columns.size(); j++) {
            for (size_t v = 0; v < residual.size(); v++) {
                residual[v] -= out.coefficients[j] * columns[j][v];
            }
        }
        out.residuals.push_back(std::sqrt(energy(residual)));
    }
    return out;
}

double final_residual(const MultiDecodeResult &r, std::span<const cd> s) {
    return r.residuals.empty() ? std::sqrt(energy(s)) : r.residuals.back();
}

}  // namespace

WeylDiagSpectrum weyl_diag(std::span<const cd> s) {
    WeylDiagSpectrum t;
    t.m = log2_length(s.size());
    t.values.resize(s.size());
    for (size_t v = 0; v < s.size(); v++) {
        t.values[v] = std::norm(s[v]);
    }
    fwht(t.values);
    return t;
}

std::vector<cd> weyl_offdiag(std::span<const cd> s, const Gf2Vector &x) {
    int m = log2_length(s.size());
    if (x.size() != m) {
        throw Error(ErrorCode::LengthMismatch, "shift has the wrong length");
    }
    uint64_t xw = x.word();
    std::vector<cd> out(s.size());
    for (uint64_t v = 0; v < s.size(); v++) {
        out[v] = std::conj(s[v ^ xw]) * s[v];
    }
    fwht(out);
    for (uint64_t y = 0; y < out.size(); y++) {
        out[y] *= kPowersOfI[std::popcount(xw & y) & 3];
    }
    return out;
}

SchubertCellRep recover_subspace(const WeylDiagSpectrum &t, int r, const DecodeOptions &options) {
    int m = t.m;
    if (r < 0 || r > m) {
        throw Error(ErrorCode::DimensionMismatch, "rank hypothesis out of range");
    }
    int need = m - r;
    std::vector<uint64_t> order(t.values.size() - 1);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](uint64_t a, uint64_t b) {
        return std::abs(t.values[a]) > std::abs(t.values[b]);
    });
    double floor = options.mode == DecodeMode::Noiseless ? 1e-9 * std::abs(t.values[0]) : -1.0;

    std::vector<uint64_t> kept, span{0};
    std::vector<char> in_span(t.values.size(), 0);
    in_span[0] = 1;
    auto try_fill = [&](bool check) {
        for (uint64_t y : order) {
            if ((int)kept.size() == need || std::abs(t.values[y]) <= floor) {
                return;
            }
            if (in_span[y]) {
                continue;
            }
            if (check) {
                double mean = 0;
                for (uint64_t k : span) {
                    mean += std::abs(t.values[y ^ k]);
                }
                if (mean / span.size() < 0.5 * std::abs(t.values[y])) {
                    continue;
                }
            }
            kept.push_back(y);
            size_t n = span.size();
            for (size_t i = 0; i < n; i++) {
                span.push_back(span[i] ^ y);
                in_span[span.back()] = 1;
            }
        }
    };
    if (need > 0) {
        try_fill(options.closure_check);
        if ((int)kept.size() < need && options.closure_check) {
            try_fill(false);
        }
    }
    if ((int)kept.size() < need) {
        throw Error(
            ErrorCode::InsufficientSupport,
            "found " + std::to_string(kept.size()) + " of " + std::to_string(need) + " independent spectrum peaks");
    }
    std::vector<Gf2Vector> cols;
    for (uint64_t k : kept) {
        cols.emplace_back(m, k);
    }
    return column_space(Gf2Matrix::from_columns(m, cols));
}

SchubertCellRep pattern_from_dual(const SchubertCellRep &dual) {
    return column_space(null_space(dual.matrix.transpose()));
}

Gf2Matrix recover_symmetric(std::span<const cd> s, const SchubertCellRep &h) {
    int m = log2_length(s.size());
    int r = h.r();
    Gf2Matrix ht = h.matrix.transpose();
    Gf2Matrix sr(r, r);
    std::vector<double> peak(r);
    for (int i = 0; i < r; i++) {
        std::vector<cd> o = weyl_offdiag(s, h.matrix.column(i));
        uint64_t best = 0;
        for (uint64_t y = 1; y < o.size(); y++) {
            if (std::norm(o[y]) > std::norm(o[best])) {
                best = y;
            }
        }
        peak[i] = std::norm(o[best]);
        Gf2Vector col = ht * Gf2Vector(m, best);
        for (int j = 0; j < r; j++) {
            sr.set(j, i, col[j]);
        }
    }
    for (int i = 0; i < r; i++) {
        for (int j = i + 1; j < r; j++) {
            // Column i gives S(j, i), column j gives S(i, j).
            bool bit = peak[i] >= peak[j] ? sr.get(j, i) : sr.get(i, j);
            sr.set(i, j, bit);
            sr.set(j, i, bit);
        }
    }
    return sr;
}

Gf2Vector dechirp(std::span<const cd> s, const SchubertCellRep &h, const Gf2Matrix &sr) {
    int m = log2_length(s.size());
    int r = h.r();
    if (h.m != m || sr.rows() != r) {
        throw Error(ErrorCode::DimensionMismatch, "pattern does not match the signal");
    }
    double top = 0;
    for (const cd &x : s) {
        top = std::max(top, std::norm(x));
    }
    if (!(top > 0)) {
        throw Error(ErrorCode::EmptySupport, "signal has no nonzero entry");
    }
    std::vector<uint64_t> u_of = preimage_table(complete_to_invertible(h).p_inv);
    std::vector<int> q = quadratic_table(sr);
    uint64_t low = (uint64_t{1} << (m - r)) - 1;
    size_t block = size_t{1} << r;
    std::vector<cd> z(s.size());
    for (uint64_t a = 0; a < s.size(); a++) {
        uint64_t u = u_of[a];
        uint64_t x = u >> (m - r);
        z[(u & low) * block + x] = s[a] * kPowersOfI[(4 - q[x]) & 3];
    }
    double best = -1;
    uint64_t best_word = 0;
    for (uint64_t c = 0; c <= low; c++) {
        std::span<cd> part(z.data() + c * block, block);
        fwht(part);
        for (uint64_t y = 0; y < block; y++) {
            double e = std::norm(part[y]);
            if (e > best) {
                best = e;
                best_word = (y << (m - r)) | c;
            }
        }
    }
    return Gf2Vector(m, best_word);
}

std::optional<BsscId> decode_rank(std::span<const cd> s, int r, const DecodeOptions &options) {
    return decode_rank_with(weyl_diag(s), s, r, options);
}

double projective_residual(std::span<const cd> s, std::span<const cd> w) {
    if (s.size() != w.size()) {
        throw Error(ErrorCode::LengthMismatch, "residual of different lengths");
    }
    cd dot = 0;
    for (size_t v = 0; v < s.size(); v++) {
        dot += std::conj(w[v]) * s[v];
    }
    double ww = energy(w);
    double left = energy(s) - (ww > 0 ? std::norm(dot) / ww : 0.0);
    return std::sqrt(std::max(0.0, left));
}

DecodeResult decode_single(std::span<const cd> s, const DecodeOptions &options) {
    int m = log2_length(s.size());
    double norm = std::sqrt(energy(s));
    if (!(norm > 0)) {
        throw Error(ErrorCode::EmptySupport, "signal has no nonzero entry");
    }
    DecodeResult result;
    if (options.mode == DecodeMode::Noiseless) {
        WeylDiagSpectrum t = weyl_diag(s);
        double floor = 1e-9 * std::abs(t.values[0]);
        uint64_t count = 0;
        for (double v : t.values) {
            count += std::abs(v) > floor;
        }
        if (!std::has_single_bit(count)) {
            throw Error(ErrorCode::InsufficientSupport, "diagonal spectrum support is not a power of two");
        }
        int r = m - std::countr_zero(count);
        SchubertCellRep h = pattern_from_dual(recover_subspace(t, r, options));
        Gf2Matrix sr = recover_symmetric(s, h);
        result.id = BsscId{m, r, h, sr, dechirp(s, h, sr)};
        result.residual = projective_residual(s, render(result.id));
    } else {
        std::optional<Candidate> best = best_candidate(s, options, {});
        if (!best) {
            throw Error(ErrorCode::InsufficientSupport, "no rank hypothesis produced a codeword");
        }
        result.id = best->id;
        result.residual = best->residual;
    }
    result.ok = result.residual <= 1e-6 * norm;
    return result;
}

std::vector<cd> least_squares(const std::vector<std::vector<cd>> &columns, std::span<const cd> s) {
    Eigen::Index n = (Eigen::Index)s.size(), k = (Eigen::Index)columns.size();
    Eigen::MatrixXcd a(n, k);
    for (Eigen::Index j = 0; j < k; j++) {
        if ((Eigen::Index)columns[j].size() != n) {
            throw Error(ErrorCode::LengthMismatch, "column length differs from the signal");
        }
        for (Eigen::Index i = 0; i < n; i++) {
            a(i, j) = columns[j][i];
        }
    }
    Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(s.data(), n);
    Eigen::MatrixXcd gram = a.adjoint() * a;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
    double lo = eig.eigenvalues().minCoeff(), hi = eig.eigenvalues().maxCoeff();
    Eigen::VectorXcd h;
    if (lo <= 0 || hi / lo > 1e12) {
        h = a.completeOrthogonalDecomposition().solve(rhs);
    } else {
        h = gram.ldlt().solve(a.adjoint() * rhs);
    }
    return std::vector<cd>(h.data(), h.data() + k);
}

MultiDecodeResult decode_multi(std::span<const cd> s, int L, const DecodeOptions &options) {
    if (L < 1) {
        throw Error(ErrorCode::ConfigError, "L must be at least 1");
    }
    log2_length(s.size());
    MultiDecodeResult best = pursue(s, L, options, nullptr);
    double tol = 1e-6 * std::sqrt(energy(s));
    if (options.mode != DecodeMode::Noiseless || !options.restarts || L == 1 || final_residual(best, s) <= tol) {
        return best;
    }
    // Exact input left unexplained: retry with the other first-round picks.
    std::vector<Candidate> firsts = rank_candidates(s, options, {});
    for (size_t i = 1; i < firsts.size(); i++) {
        MultiDecodeResult trial = pursue(s, L, options, &firsts[i]);
        if (final_residual(trial, s) < final_residual(best, s)) {
            best = std::move(trial);
        }
        if (final_residual(best, s) <= tol) {
            break;
        }
    }
    return best;
}

}  // namespace bssc
