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

#ifndef BSSC_SIMULATOR_H
#define BSSC_SIMULATOR_H

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bssc/codebook.h"
#include "bssc/decoder.h"

namespace bssc {

enum class CodebookKind { Bssc, Bc, Random };

std::string kind_name(CodebookKind kind);
CodebookKind parse_kind(const std::string &text);

struct ExperimentConfig {
    int m = 6;
    int L = 1;
    uint64_t trials = 10000;
    /// Absent means noiseless.
    std::optional<double> snr_db;
    CodebookKind kind = CodebookKind::Bssc;
    uint64_t seed = 1;
    /// Worker threads; 0 uses every core.
    int parallelism = 1;
    /// Size of the Gaussian codebook for kind = Random.
    uint64_t random_size = 4096;
    bool closure_check = false;

    /// Throws Error(ConfigError) on out-of-range fields.
    void validate() const;
};

/// key=value lines; '#' starts a comment. Unknown keys are an error.
ExperimentConfig parse_config(const std::string &text);

uint64_t splitmix64(uint64_t x);

/// The generator for one trial, derived from (seed, trial) only.
std::mt19937_64 trial_rng(uint64_t seed, uint64_t trial);

/// Codewords of one trial. ids is filled for BSSC and BC, indices for Random.
struct Transmission {
    std::vector<BsscId> ids;
    std::vector<uint64_t> indices;
    std::vector<std::vector<cd>> vectors;
};

/// A unit-norm complex Gaussian codebook, regenerated from its seed.
class RandomCodebook {
   public:
    RandomCodebook(int m, uint64_t size, uint64_t seed);

    int m() const {
        return m_;
    }
    uint64_t size() const {
        return size_;
    }
    std::span<const cd> column(uint64_t index) const;

   private:
    int m_;
    uint64_t size_;
    std::vector<cd> data_;
};

/// L distinct codewords. Throws Error(ConfigError) if L exceeds the codebook.
Transmission sample_codewords(
    CodebookKind kind, int m, int L, std::mt19937_64 &rng, const RandomCodebook *random = nullptr);

/// sigma^2 = 1 / (N 10^{snr_db / 10}), the noise energy relative to a unit-norm codeword.
double noise_variance(int m, double snr_db);

/// s = sum h_l w_l + n. h ~ CN(0, 1) when not given; n = 0 without snr_db.
std::vector<cd> synthesize(
    const std::vector<std::vector<cd>> &codewords, const std::vector<cd> *h, std::optional<double> snr_db,
    std::mt19937_64 &rng);

/// Greedy pursuit with exhaustive correlation search over a Random codebook.
std::vector<uint64_t> decode_random(std::span<const cd> s, const RandomCodebook &book, int L);

struct TrialOutcome {
    int sent = 0;
    int hits = 0;
};

TrialOutcome run_trial(const ExperimentConfig &config, uint64_t trial);

struct Interval {
    double lo = 0;
    double hi = 0;
};

/// Wilson score interval at 95%.
Interval wilson(uint64_t errors, uint64_t n);

struct Summary {
    ExperimentConfig config;
    uint64_t users = 0;
    uint64_t errors = 0;
    double err_prob = 0;
    Interval ci;
    double seconds = 0;
};

Summary run(const ExperimentConfig &config);

/// Lines starting with '#' that describe the conventions behind the numbers.
std::vector<std::string> metadata_lines(const ExperimentConfig &config);
std::string summary_csv_header();
std::string summary_csv_row(const Summary &summary);

/// y,t for the diagonal spectrum |s^dagger E(0, y) s| of trial 0.
std::string spectrum_csv(const ExperimentConfig &config);

}  // namespace bssc

#endif
