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

#ifndef BSSC_DECODER_H
#define BSSC_DECODER_H

#include <optional>
#include <span>
#include <vector>

#include "bssc/codebook.h"

namespace bssc {

/// t[y] = s^dagger E(0, y) s, the Hadamard transform of |s(v)|^2.
struct WeylDiagSpectrum {
    int m = 0;
    std::vector<double> values;
};

WeylDiagSpectrum weyl_diag(std::span<const cd> s);

/// out[y] = s^dagger E(x, y) s = i^{x^T y} FWHT(conj(s(v + x)) s(v))[y].
std::vector<cd> weyl_offdiag(std::span<const cd> s, const Gf2Vector &x);

enum class DecodeMode { Noiseless, Noisy };

struct DecodeOptions {
    DecodeMode mode = DecodeMode::Noisy;
    /// Rank hypotheses to try. Empty means 0..m.
    std::vector<int> ranks;
    /// Reject greedy candidates whose span does not stay prominent.
    bool closure_check = false;
    /// Noiseless multi-user only: when OMP leaves a residual, rerun it from
    /// each other first-round candidate and keep the best.
    bool restarts = true;
};

/// Greedy build of the (m - r)-dim span of the largest |t[y]|, y != 0, returned
/// as its echelon representative. Noiseless mode only keeps |t[y]| > 1e-9 t[0]
/// and throws Error(InsufficientSupport) when that is not enough.
SchubertCellRep recover_subspace(const WeylDiagSpectrum &t, int r, const DecodeOptions &options = {});

/// The on-off pattern H = (span of recovered y)^perp.
SchubertCellRep pattern_from_dual(const SchubertCellRep &dual);

/// Column i of S_r is H^T y*, with y* the peak of weyl_offdiag(s, H f_i).
/// Off-diagonal disagreements take the bit with the larger peak.
Gf2Matrix recover_symmetric(std::span<const cd> s, const SchubertCellRep &h);

/// b maximizing the correlation with the b = 0 chirp over all cosets of H.
/// Throws Error(EmptySupport) for an all-zero input.
Gf2Vector dechirp(std::span<const cd> s, const SchubertCellRep &h, const Gf2Matrix &sr);

struct DecodeResult {
    BsscId id;
    /// ||s - <w, s> w||, scale free.
    double residual = 0;
    /// Residual at most 1e-6 ||s||.
    bool ok = false;
};

/// Runs the pipeline for one rank hypothesis. nullopt when a step fails.
std::optional<BsscId> decode_rank(std::span<const cd> s, int r, const DecodeOptions &options = {});

double projective_residual(std::span<const cd> s, std::span<const cd> w);

/// Noiseless: rank from the support size of weyl_diag, errors propagate.
/// Noisy: best projective residual over all rank hypotheses, ties to larger r.
DecodeResult decode_single(std::span<const cd> s, const DecodeOptions &options = {});

struct MultiDecodeResult {
    std::vector<BsscId> ids;
    std::vector<cd> coefficients;
    /// ||s - sum h_l w_l|| after each refit.
    std::vector<double> residuals;
};

/// Least-squares coefficients of s on the given columns. Falls back to a
/// pseudo-inverse when the Gram matrix is ill conditioned.
std::vector<cd> least_squares(const std::vector<std::vector<cd>> &columns, std::span<const cd> s);

/// Orthogonal matching pursuit over the codebook, L rounds. A candidate equal
/// to an already selected id is skipped in favour of the next rank.
MultiDecodeResult decode_multi(std::span<const cd> s, int L, const DecodeOptions &options = {});

}  // namespace bssc

#endif
