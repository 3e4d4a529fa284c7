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

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "bssc/error.h"

namespace bssc {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

template <typename T>
T parse_number(const std::string &key, const std::string &value) {
    try {
        size_t used = 0;
        T out;
        if constexpr (std::is_same_v<T, double>) {
            out = std::stod(value, &used);
        } else if constexpr (std::is_same_v<T, int>) {
            out = std::stoi(value, &used);
        } else {
            if (!value.empty() && value[0] == '-') {
                throw std::invalid_argument("negative");
            }
            out = std::stoull(value, &used);
        }
        if (used != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return out;
    } catch (const std::exception &) {
        throw Error(ErrorCode::ConfigError, "bad value for " + key + ": '" + value + "'");
    }
}

bool parse_bool(const std::string &key, const std::string &value) {
    if (value == "1" || value == "true" || value == "yes") {
        return true;
    }
    if (value == "0" || value == "false" || value == "no") {
        return false;
    }
    throw Error(ErrorCode::ConfigError, "bad value for " + key + ": '" + value + "'");
}

Serial kind_size(CodebookKind kind, int m, const RandomCodebook *random) {
    switch (kind) {
        case CodebookKind::Bssc:
            return codebook_size(m);
        case CodebookKind::Bc:
            return bc_count(m);
        case CodebookKind::Random:
            return random ? random->size() : 0;
    }
    return 0;
}

std::vector<cd> complex_gaussians(size_t n, double variance, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, std::sqrt(variance / 2));
    std::vector<cd> out(n);
    for (cd &x : out) {
        double re = g(rng);
        x = cd(re, g(rng));
    }
    return out;
}

}  // namespace

std::string kind_name(CodebookKind kind) {
    switch (kind) {
        case CodebookKind::Bssc:
            return "BSSC";
        case CodebookKind::Bc:
            return "BC";
        case CodebookKind::Random:
            return "RANDOM";
    }
    return "?";
}

CodebookKind parse_kind(const std::string &text) {
    std::string up = text;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return (char)std::toupper(c); });
    if (up == "BSSC") {
        return CodebookKind::Bssc;
    }
    if (up == "BC") {
        return CodebookKind::Bc;
    }
    if (up == "RANDOM") {
        return CodebookKind::Random;
    }
    throw Error(ErrorCode::ConfigError, "unknown codebook kind '" + text + "'");
}

void ExperimentConfig::validate() const {
    if (m < 1 || m > kMaxM) {
        throw Error(ErrorCode::ConfigError, "m must be in [1, 12]");
    }
    if (L < 1) {
        throw Error(ErrorCode::ConfigError, "L must be at least 1");
    }
    if (trials < 1) {
        throw Error(ErrorCode::ConfigError, "trials must be at least 1");
    }
    if (parallelism < 0) {
        throw Error(ErrorCode::ConfigError, "parallelism must be non-negative");
    }
    if (snr_db && !std::isfinite(*snr_db)) {
        throw Error(ErrorCode::ConfigError, "snr_db must be finite");
    }
    if (kind == CodebookKind::Random) {
        if (m > 6) {
            throw Error(ErrorCode::ConfigError, "exhaustive search over a random codebook is limited to m <= 6");
        }
        if (random_size < 1 || random_size > (uint64_t{1} << 20)) {
            throw Error(ErrorCode::ConfigError, "random_size must be in [1, 2^20]");
        }
        if ((uint64_t)L > random_size) {
            throw Error(ErrorCode::ConfigError, "L exceeds the codebook size");
        }
    } else if ((Serial)L > kind_size(kind, m, nullptr)) {
        throw Error(ErrorCode::ConfigError, "L exceeds the codebook size");
    }
}

ExperimentConfig parse_config(const std::string &text) {
    ExperimentConfig config;
    std::istringstream in(text);
    std::string line;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::ConfigError, "expected key=value, got '" + line + "'");
        }
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) {
            throw Error(ErrorCode::ConfigError, "duplicate key " + key);
        }
        if (key == "m") {
            config.m = parse_number<int>(key, value);
        } else if (key == "L") {
            config.L = parse_number<int>(key, value);
        } else if (key == "trials") {
            config.trials = parse_number<uint64_t>(key, value);
        } else if (key == "snr_db") {
            if (value == "none" || value.empty()) {
                config.snr_db.reset();
            } else {
                config.snr_db = parse_number<double>(key, value);
            }
        } else if (key == "kind") {
            config.kind = parse_kind(value);
        } else if (key == "seed") {
            config.seed = parse_number<uint64_t>(key, value);
        } else if (key == "parallelism") {
            config.parallelism = parse_number<int>(key, value);
        } else if (key == "random_size") {
            config.random_size = parse_number<uint64_t>(key, value);
        } else if (key == "closure_check") {
            config.closure_check = parse_bool(key, value);
        } else {
            throw Error(ErrorCode::ConfigError, "unknown key " + key);
        }
    }
    config.validate();
    return config;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(uint64_t seed, uint64_t trial) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(trial ^ 0x5bd1e995ULL)));
}

RandomCodebook::RandomCodebook(int m, uint64_t size, uint64_t seed) : m_(m), size_(size) {
    size_t n = size_t{1} << m;
    std::mt19937_64 rng(splitmix64(seed));
    data_ = complex_gaussians(n * size, 1.0, rng);
    for (uint64_t i = 0; i < size; i++) {
        double e = 0;
        for (size_t v = 0; v < n; v++) {
            e += std::norm(data_[i * n + v]);
        }
        double scale = 1 / std::sqrt(e);
        for (size_t v = 0; v < n; v++) {
            data_[i * n + v] *= scale;
        }
    }
}

std::span<const cd> RandomCodebook::column(uint64_t index) const {
    size_t n = size_t{1} << m_;
    return std::span<const cd>(data_.data() + index * n, n);
}

Transmission sample_codewords(CodebookKind kind, int m, int L, std::mt19937_64 &rng, const RandomCodebook *random) {
    if (kind == CodebookKind::Random && !random) {
        throw Error(ErrorCode::ConfigError, "random codebook missing");
    }
    if (L < 1 || (Serial)L > kind_size(kind, m, random)) {
        throw Error(ErrorCode::ConfigError, "cannot draw " + std::to_string(L) + " distinct codewords");
    }
    Transmission tx;
    std::set<Serial> used;
    while ((int)used.size() < L) {
        if (kind == CodebookKind::Random) {
            uint64_t index = std::uniform_int_distribution<uint64_t>(0, random->size() - 1)(rng);
            if (used.insert(index).second) {
                tx.indices.push_back(index);
                std::span<const cd> c = random->column(index);
                tx.vectors.emplace_back(c.begin(), c.end());
            }
            continue;
        }
        BsscId id = kind == CodebookKind::Bssc ? sample_bssc(m, rng) : sample_bc(m, rng);
        if (used.insert(serial_of(id)).second) {
            tx.vectors.push_back(bssc_vector(id).to_complex());
            tx.ids.push_back(std::move(id));
        }
    }
    return tx;
}

double noise_variance(int m, double snr_db) {
    return 1.0 / (double(uint64_t{1} << m) * std::pow(10.0, snr_db / 10));
}

std::vector<cd> synthesize(
    const std::vector<std::vector<cd>> &codewords, const std::vector<cd> *h, std::optional<double> snr_db,
    std::mt19937_64 &rng) {
    if (codewords.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "no codewords to transmit");
    }
    size_t n = codewords[0].size();
    if (n == 0 || !std::has_single_bit(n)) {
        throw Error(ErrorCode::LengthMismatch, "codeword length is not a power of two");
    }
    std::vector<cd> gains = h ? *h : complex_gaussians(codewords.size(), 1.0, rng);
    if (gains.size() != codewords.size()) {
        throw Error(ErrorCode::LengthMismatch, "one channel gain per codeword is required");
    }
    std::vector<cd> s(n);
    for (size_t l = 0; l < codewords.size(); l++) {
        if (codewords[l].size() != n) {
            throw Error(ErrorCode::LengthMismatch, "codewords of different lengths");
        }
        for (size_t v = 0; v < n; v++) {
            s[v] += gains[l] * codewords[l][v];
        }
    }
    if (snr_db) {
        std::vector<cd> noise = complex_gaussians(n, noise_variance(std::countr_zero(n), *snr_db), rng);
        for (size_t v = 0; v < n; v++) {
            s[v] += noise[v];
        }
    }
    return s;
}

std::vector<uint64_t> decode_random(std::span<const cd> s, const RandomCodebook &book, int L) {
    size_t n = s.size();
    if (n != (size_t{1} << book.m())) {
        throw Error(ErrorCode::LengthMismatch, "signal does not match the codebook");
    }
    std::vector<uint64_t> picked;
    std::vector<std::vector<cd>> columns;
    std::vector<cd> residual(s.begin(), s.end());
    for (int l = 0; l < L && (uint64_t)l < book.size(); l++) {
        double best = -1;
        uint64_t best_index = 0;
        for (uint64_t i = 0; i < book.size(); i++) {
            if (std::find(picked.begin(), picked.end(), i) != picked.end()) {
                continue;
            }
            std::span<const cd> c = book.column(i);
            cd dot = 0;
            for (size_t v = 0; v < n; v++) {
                dot += std::conj(c[v]) * residual[v];
            }
            if (std::norm(dot) > best) {
                best = std::norm(dot);
                best_index = i;
            }
        }
        picked.push_back(best_index);
        std::span<const cd> c = book.column(best_index);
        columns.emplace_back(c.begin(), c.end());
        std::vector<cd> h = least_squares(columns, s);
        residual.assign(s.begin(), s.end());
        for (size_t j = 0; j < columns.size(); j++) {
            for (size_t v = 0; v < n; v++) {
                residual[v] -= h[j] * columns[j][v];
            }
        }
    }
    return picked;
}

TrialOutcome run_trial(const ExperimentConfig &config, uint64_t trial) {
    std::mt19937_64 rng = trial_rng(config.seed, trial);
    std::optional<RandomCodebook> book;
    if (config.kind == CodebookKind::Random) {
        book.emplace(config.m, config.random_size, rng());
    }
    Transmission tx = sample_codewords(config.kind, config.m, config.L, rng, book ? &*book : nullptr);
    std::vector<cd> s = synthesize(tx.vectors, nullptr, config.snr_db, rng);

    TrialOutcome out;
    out.sent = config.L;
    if (config.kind == CodebookKind::Random) {
        std::vector<uint64_t> got = decode_random(s, *book, config.L);
        for (uint64_t index : tx.indices) {
            out.hits += std::find(got.begin(), got.end(), index) != got.end();
        }
        return out;
    }
    DecodeOptions options;
    options.mode = config.snr_db ? DecodeMode::Noisy : DecodeMode::Noiseless;
    options.closure_check = config.closure_check;
    if (config.kind == CodebookKind::Bc) {
        options.ranks = {config.m};
    }
    MultiDecodeResult res = decode_multi(s, config.L, options);
    for (const BsscId &id : tx.ids) {
        out.hits += std::find(res.ids.begin(), res.ids.end(), id) != res.ids.end();
    }
    return out;
}

Interval wilson(uint64_t errors, uint64_t n) {
    if (n == 0) {
        return {0, 1};
    }
    const double z = 1.959963984540054;
    double p = (double)errors / n, z2 = z * z, nn = (double)n;
    double denom = 1 + z2 / nn;
    double center = (p + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    Interval out{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (errors == 0) {
        out.lo = 0;
    }
    if (errors == n) {
        out.hi = 1;
    }
    return out;
}

Summary run(const ExperimentConfig &config) {
    config.validate();
    auto start = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes(config.trials);
    int workers = config.parallelism > 0 ? config.parallelism : (int)std::max(1u, std::thread::hardware_concurrency());
    workers = (int)std::min<uint64_t>(workers, config.trials);

    std::atomic<uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&]() {
        while (true) {
            uint64_t t = next.fetch_add(1);
            if (t >= config.trials) {
                return;
            }
            try {
                outcomes[t] = run_trial(config, t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_lock);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = config.trials;
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; i++) {
            pool.emplace_back(work);
        }
        for (std::thread &th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    Summary summary;
    summary.config = config;
    for (const TrialOutcome &o : outcomes) {
        summary.users += o.sent;
        summary.errors += o.sent - o.hits;
    }
    summary.err_prob = (double)summary.errors / summary.users;
    summary.ci = wilson(summary.errors, summary.users);
    summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

std::vector<std::string> metadata_lines(const ExperimentConfig &config) {
    std::vector<std::string> out;
    out.push_back("# snr_convention=unit-norm codeword energy over total noise energy; sigma^2 = 1/(N 10^(snr_db/10))");
    out.push_back("# channel=h_l ~ CN(0,1) i.i.d. per user and trial");
    out.push_back("# error_metric=fraction of sent codewords missing from the decoded set");
    out.push_back("# seed=" + std::to_string(config.seed));
    if (config.kind == CodebookKind::Random) {
        out.push_back(
            "# random_codebook=" + std::to_string(config.random_size) +
            " unit-norm complex Gaussian columns, resampled every trial");
    }
    return out;
}

std::string summary_csv_header() {
    return "m,L,snr_db,kind,trials,err_prob,ci_lo,ci_hi,seconds";
}

std::string summary_csv_row(const Summary &summary) {
    const ExperimentConfig &c = summary.config;
    std::ostringstream out;
    out.precision(10);
    out << c.m << ',' << c.L << ',';
    if (c.snr_db) {
        out << *c.snr_db;
    } else {
        out << "none";
    }
    out << ',' << kind_name(c.kind) << ',' << c.trials << ',' << summary.err_prob << ',' << summary.ci.lo << ','
        << summary.ci.hi << ',';
    out.precision(4);
    out << summary.seconds;
    return out.str();
}

std::string spectrum_csv(const ExperimentConfig &config) {
    config.validate();
    std::mt19937_64 rng = trial_rng(config.seed, 0);
    std::optional<RandomCodebook> book;
    if (config.kind == CodebookKind::Random) {
        book.emplace(config.m, config.random_size, rng());
    }
    Transmission tx = sample_codewords(config.kind, config.m, config.L, rng, book ? &*book : nullptr);
    std::vector<cd> s = synthesize(tx.vectors, nullptr, config.snr_db, rng);
    WeylDiagSpectrum t = weyl_diag(s);
    std::ostringstream out;
    out.precision(10);
    out << "y,t\n";
    for (size_t y = 0; y < t.values.size(); y++) {
        out << y << ',' << std::abs(t.values[y]) << '\n';
    }
    return out.str();
}

}  // namespace bssc
