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

#include "bssc/simulator.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "bssc/error.h"

using namespace bssc;

namespace {

ExperimentConfig small(int m, int L, uint64_t trials) {
    ExperimentConfig c;
    c.m = m;
    c.L = L;
    c.trials = trials;
    return c;
}

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::ParseError;
}

}  // namespace

TEST(config, parse) {
    ExperimentConfig c = parse_config(
        "# experiment\n"
        "m = 5\n"
        "L=3\n"
        "trials=200  # short\n"
        "\n"
        "snr_db=12.5\r\n"
        "kind=bc\n"
        "seed=99\n"
        "parallelism=2\n");
    ASSERT_EQ(c.m, 5);
    ASSERT_EQ(c.L, 3);
    ASSERT_EQ(c.trials, 200u);
    ASSERT_EQ(*c.snr_db, 12.5);
    ASSERT_EQ(c.kind, CodebookKind::Bc);
    ASSERT_EQ(c.seed, 99u);
    ASSERT_EQ(c.parallelism, 2);
    ASSERT_FALSE(parse_config("snr_db=none\n").snr_db.has_value());
}

TEST(config, rejects_bad_input) {
    ASSERT_EQ(code_of([] { parse_config("m=13"); }), ErrorCode::ConfigError);
    ASSERT_EQ(code_of([] { parse_config("m=0"); }), ErrorCode::ConfigError);
    ASSERT_EQ(code_of([] { parse_config("colour=red"); }), ErrorCode::ConfigError);
    ASSERT_EQ(code_of([] { parse_config("m"); }), ErrorCode::ConfigError);
    ASSERT_EQ(code_of([] { parse_config("m=4x"); }), ErrorCode::ConfigError);
    ASSERT_EQ(code_of([] { parse_config("trials=-3"); }), ErrorCode::ConfigError);
    ASSERT_EQ(code_of([] { parse_config("m=4\nm=5"); }), ErrorCode::ConfigError);
    ASSERT_EQ(code_of([] { parse_config("kind=RANDOM\nm=7"); }), ErrorCode::ConfigError);
    ASSERT_EQ(code_of([] { parse_config("kind=unknown"); }), ErrorCode::ConfigError);
    ASSERT_EQ(code_of([] { parse_config("m=1\nL=7"); }), ErrorCode::ConfigError);
    ASSERT_NO_THROW(parse_config("m=1\nL=6"));
    ASSERT_NO_THROW(parse_config("kind=RANDOM\nm=6"));
}

TEST(sample_codewords, bssc_rank_frequencies) {
    std::mt19937_64 rng(70);
    std::map<int, int> hits;
    int draws = 60000;
    for (int t = 0; t < draws; t++) {
        hits[sample_codewords(CodebookKind::Bssc, 2, 1, rng).ids[0].r]++;
    }
    int counts[3] = {4, 24, 32};
    for (int r = 0; r <= 2; r++) {
        double p = counts[r] / 60.0;
        ASSERT_LT(std::abs(hits[r] - draws * p), 3 * std::sqrt(draws * p * (1 - p))) << "r=" << r;
    }
}

TEST(sample_codewords, kinds_and_distinctness) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 50; t++) {
        Transmission tx = sample_codewords(CodebookKind::Bc, 4, 5, rng);
        std::set<uint64_t> serials;
        for (const BsscId &id : tx.ids) {
            ASSERT_TRUE(id.is_bc());
            serials.insert((uint64_t)serial_of(id));
        }
        ASSERT_EQ(serials.size(), 5u);
    }
    // All 60 codewords of m = 2 at once.
    Transmission all = sample_codewords(CodebookKind::Bssc, 2, 60, rng);
    ASSERT_EQ(all.ids.size(), 60u);
    ASSERT_EQ(code_of([&] { sample_codewords(CodebookKind::Bssc, 2, 61, rng); }), ErrorCode::ConfigError);
    ASSERT_EQ(code_of([&] { sample_codewords(CodebookKind::Bc, 1, 5, rng); }), ErrorCode::ConfigError);

    RandomCodebook book(3, 16, 5);
    Transmission r = sample_codewords(CodebookKind::Random, 3, 16, rng, &book);
    ASSERT_EQ(std::set<uint64_t>(r.indices.begin(), r.indices.end()).size(), 16u);
    for (const std::vector<cd> &w : r.vectors) {
        double e = 0;
        for (const cd &x : w) {
            e += std::norm(x);
        }
        ASSERT_NEAR(e, 1.0, 1e-12);
    }
}

TEST(synthesize, noiseless_single) {
    std::mt19937_64 rng(72);
    std::vector<cd> w = bssc_vector(sample_bssc(4, rng)).to_complex();
    std::vector<cd> one{1.0};
    ASSERT_EQ(synthesize({w}, &one, std::nullopt, rng), w);
    ASSERT_THROW(synthesize({w}, &one, std::nullopt, rng).at(16), std::out_of_range);
}

TEST(synthesize, noise_calibration) {
    std::mt19937_64 rng(73);
    int m = 10;
    double snr = 7;
    std::vector<cd> zero(size_t{1} << m);
    std::vector<cd> gain{0.0};
    double sum = 0;
    uint64_t samples = 0;
    std::vector<double> energies;
    while (samples < 1000000) {
        std::vector<cd> s = synthesize({zero}, &gain, snr, rng);
        double e = 0;
        for (const cd &x : s) {
            e += std::norm(x);
        }
        sum += e;
        samples += s.size();
        energies.push_back(e);
    }
    double sigma2 = noise_variance(m, snr);
    ASSERT_LT(std::abs(sum / samples - sigma2), 0.01 * sigma2);
    // E||n||^2 = 10^{-snr/10} within 3 sigma of the per-vector mean.
    double mean = 0, var = 0;
    for (double e : energies) {
        mean += e;
    }
    mean /= energies.size();
    for (double e : energies) {
        var += (e - mean) * (e - mean);
    }
    var /= energies.size() - 1;
    ASSERT_LT(std::abs(mean - std::pow(10.0, -snr / 10)), 3 * std::sqrt(var / energies.size()));
}

TEST(wilson, interval) {
    Interval a = wilson(0, 100);
    ASSERT_EQ(a.lo, 0.0);
    ASSERT_GT(a.hi, 0.0);
    Interval b = wilson(50, 100);
    ASSERT_NEAR(b.lo, 0.4038, 1e-4);
    ASSERT_NEAR(b.hi, 0.5962, 1e-4);
    Interval c = wilson(500, 1000);
    ASSERT_LT(c.hi - c.lo, b.hi - b.lo);
}

TEST(run, single_user_noiseless_exact) {
    for (int m = 1; m <= 6; m++) {
        Summary s = run(small(m, 1, 200));
        ASSERT_EQ(s.errors, 0u) << "m=" << m;
        ASSERT_EQ(s.users, 200u);
    }
}

TEST(run, deterministic_across_parallelism) {
    ExperimentConfig c = small(5, 2, 300);
    c.snr_db = 10;
    Summary a = run(c);
    c.parallelism = 3;
    Summary b = run(c);
    ASSERT_EQ(a.errors, b.errors);
    ASSERT_EQ(a.users, b.users);
    ASSERT_EQ(run_trial(c, 17).hits, run_trial(c, 17).hits);
}

TEST(run, random_codebook) {
    ExperimentConfig c = small(4, 1, 50);
    c.kind = CodebookKind::Random;
    c.random_size = 64;
    ASSERT_EQ(run(c).errors, 0u);
    c.L = 2;
    c.snr_db = 20;
    Summary s = run(c);
    ASSERT_LE(s.err_prob, 1.0);
}

TEST(run, csv_output) {
    Summary s = run(small(3, 1, 10));
    ASSERT_EQ(summary_csv_header(), "m,L,snr_db,kind,trials,err_prob,ci_lo,ci_hi,seconds");
    std::string row = summary_csv_row(s);
    ASSERT_EQ(row.substr(0, row.find(",0,0,")), "3,1,none,BSSC,10");
    for (const std::string &line : metadata_lines(s.config)) {
        ASSERT_EQ(line[0], '#');
    }
    std::string spectrum = spectrum_csv(small(3, 1, 1));
    ASSERT_EQ(spectrum.substr(0, 4), "y,t\n");
    ASSERT_EQ(std::count(spectrum.begin(), spectrum.end(), '\n'), 9);
}
