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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bssc/codebook.h"
#include "bssc/decoder.h"
#include "bssc/error.h"
#include "bssc/fwht.h"
#include "bssc/simulator.h"
#include "bssc/symplectic.h"
#include "bssc/verify.h"

namespace {

constexpr int EXIT_VIOLATION = 1;
constexpr int EXIT_USAGE = 2;
constexpr int MAX_DUMP_M = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::ofstream open_out(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write " + path);
    }
    return out;
}

// Smallest k with some pair at |<w1, w2>|^2 = 2^{-k}, over distinct codewords.
int max_overlap_exponent(int m) {
    std::vector<bssc::ChirpVector> ws;
    bssc::for_each_codeword(m, [&](const bssc::BsscId &id) { ws.push_back(bssc::bssc_vector(id)); });
    int best = m + 1;
    for (size_t i = 0; i < ws.size(); i++) {
        for (size_t j = i + 1; j < ws.size(); j++) {
            bssc::ExactOverlap o = bssc::inner(ws[i], ws[j]);
            if (o.is_zero()) {
                continue;
            }
            for (int k = 0; k < best; k++) {
                if (o.norm_sq_equals(1, k)) {
                    best = k;
                    break;
                }
            }
        }
    }
    return best;
}

std::string distance_text(int k) {
    if (k == 1) {
        return "1/√2";
    }
    if (k == 0) {
        return "0";
    }
    return "sqrt(1-2^-" + std::to_string(k) + ")";
}

int run_codebook(int m, const std::string &dump, bool stats) {
    if (!dump.empty()) {
        if (m > MAX_DUMP_M) {
            throw UsageError("--dump supports m <= " + std::to_string(MAX_DUMP_M));
        }
        std::ofstream out = open_out(dump);
        out << bssc::csv_header() << "\n";
        bssc::for_each_codeword(m, [&](const bssc::BsscId &id) { out << bssc::csv_row(id) << "\n"; });
    }
    if (stats || dump.empty()) {
        std::cout << "m=" << m << "\n";
        for (int r = 0; r <= m; r++) {
            std::cout << "rank" << r << "=" << bssc::serial_to_string(bssc::rank_count(m, r)) << "\n";
        }
        std::cout << "total=" << bssc::serial_to_string(bssc::codebook_size(m)) << "\n";
        std::cout << "bc_total=" << bssc::serial_to_string(bssc::bc_count(m)) << "\n";
        if (stats && m <= 3) {
            std::cout << "min_distance=" << distance_text(max_overlap_exponent(m)) << "\n";
        }
    }
    return 0;
}

void print_matrix(const std::string &name, const bssc::Gf2Matrix &a) {
    std::cout << name << "=\n";
    std::string text = a.to_text();
    std::cout << text;
    if (!text.empty() && text.back() != '\n') {
        std::cout << "\n";
    }
}

int run_bruhat(const std::string &path) {
    bssc::Gf2Matrix f = bssc::Gf2Matrix::parse_text(read_file(path));
    bssc::BruhatDecomposition d = bssc::bruhat_decompose(f);
    std::cout << "r=" << d.r << "\n";
    print_matrix("P", d.p);
    print_matrix("S_r", d.sr);
    print_matrix("M", d.m);
    print_matrix("S", d.s);
    bool ok = d.recompose().matrix() == f;
    std::cout << "recompose=" << (ok ? "ok" : "mismatch") << "\n";
    return ok ? 0 : EXIT_VIOLATION;
}

std::vector<bssc::cd> read_signal(const std::string &path) {
    std::istringstream in(read_file(path));
    std::vector<bssc::cd> s;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        size_t comma = line.find(',');
        try {
            if (comma == std::string::npos) {
                s.emplace_back(std::stod(line), 0.0);
            } else {
                s.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
            }
        } catch (const std::logic_error &) {
            throw bssc::Error(bssc::ErrorCode::ParseError, path + ":" + std::to_string(line_no) + ": expected re,im");
        }
    }
    return s;
}

int run_decode(int m, int multi, const std::string &path, bool noiseless) {
    std::vector<bssc::cd> s = read_signal(path);
    if (s.size() != (size_t{1} << m)) {
        throw bssc::Error(
            bssc::ErrorCode::LengthMismatch,
            "expected " + std::to_string(size_t{1} << m) + " entries, got " + std::to_string(s.size()));
    }
    bssc::DecodeOptions options;
    options.mode = noiseless ? bssc::DecodeMode::Noiseless : bssc::DecodeMode::Noisy;
    std::cout << bssc::csv_header() << ",residual\n";
    std::cout.precision(12);
    if (multi <= 1) {
        bssc::DecodeResult result = bssc::decode_single(s, options);
        std::cout << bssc::csv_row(result.id) << "," << result.residual << "\n";
        return 0;
    }
    bssc::MultiDecodeResult result = bssc::decode_multi(s, multi, options);
    for (size_t l = 0; l < result.ids.size(); l++) {
        std::cout << bssc::csv_row(result.ids[l]) << "," << result.residuals[l] << "\n";
    }
    return 0;
}

int run_simulate(const std::string &config_path, const std::string &out_path, const std::string &spectrum_path) {
    bssc::ExperimentConfig config = bssc::parse_config(read_file(config_path));
    config.validate();
    bssc::Summary summary = bssc::run(config);
    std::ofstream out = open_out(out_path);
    for (const std::string &line : bssc::metadata_lines(config)) {
        out << line << "\n";
    }
    out << bssc::summary_csv_header() << "\n" << bssc::summary_csv_row(summary) << "\n";
    if (!spectrum_path.empty()) {
        open_out(spectrum_path) << bssc::spectrum_csv(config);
    }
    std::cout << bssc::summary_csv_header() << "\n" << bssc::summary_csv_row(summary) << "\n";
    return 0;
}

int run_verify(const std::string &level, const std::string &fault) {
    if (fault == "fwht") {
        bssc::set_fwht_fault(true);
    }
    bool all_ok = true;
    bssc::run_checks(level == "full" ? bssc::VerifyLevel::Full : bssc::VerifyLevel::Quick, [&](const bssc::CheckResult &c) {
        all_ok &= c.ok;
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.ok) {
            std::cout << ": " << c.detail;
        }
        std::cout << " (" << c.seconds << " s)" << std::endl;
    });
    bssc::set_fwht_fault(false);
    std::cout << "result=" << (all_ok ? "ok" : "violation") << "\n";
    return all_ok ? 0 : EXIT_VIOLATION;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Binary subspace chirp codebooks: construction, verification, decoding, simulation."};
    app.require_subcommand(1);

    int m = 0;
    std::string dump;
    bool stats = false;
    CLI::App *codebook = app.add_subcommand("codebook", "Enumerate or summarize the codebook.");
    codebook->add_option("--m", m, "Number of qubits")->required()->check(CLI::Range(1, 12));
    codebook->add_option("--dump", dump, "Write every codeword as CSV");
    codebook->add_flag("--stats", stats, "Print per-rank counts and the minimum distance (m <= 3)");

    std::string bruhat_in;
    CLI::App *bruhat = app.add_subcommand("bruhat", "Bruhat-decompose a symplectic matrix.");
    bruhat->add_option("--in", bruhat_in, "Text matrix, one row of 0/1 per line")->required();

    int decode_m = 0;
    int multi = 1;
    std::string decode_in;
    bool noiseless = false;
    CLI::App *decode = app.add_subcommand("decode", "Decode a received vector.");
    decode->add_option("--m", decode_m, "Number of qubits")->required()->check(CLI::Range(1, 12));
    decode->add_option("--multi", multi, "Number of superimposed codewords")->check(CLI::Range(1, 64));
    decode->add_option("--in", decode_in, "One re,im entry per line")->required();
    decode->add_flag("--noiseless", noiseless, "Assume an exact superposition");

    std::string config_path;
    std::string out_path;
    std::string spectrum_path;
    CLI::App *simulate = app.add_subcommand("simulate", "Run a Monte-Carlo experiment.");
    simulate->add_option("--config", config_path, "key=value experiment file")->required();
    simulate->add_option("--out", out_path, "Results CSV")->required();
    simulate->add_option("--emit-spectrum", spectrum_path, "Write the diagonal spectrum of trial 0");

    std::string level = "quick";
    std::string fault;
    CLI::App *verify = app.add_subcommand("verify", "Run the invariant checks.");
    verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--inject-fault", fault, "Deliberately break a kernel")->check(CLI::IsMember({"fwht"}));

    if (argc <= 1) {
        std::cerr << app.help();
        return EXIT_USAGE;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        if (*codebook) {
            return run_codebook(m, dump, stats);
        }
        if (*bruhat) {
            return run_bruhat(bruhat_in);
        }
        if (*decode) {
            return run_decode(decode_m, multi, decode_in, noiseless);
        }
        if (*simulate) {
            return run_simulate(config_path, out_path, spectrum_path);
        }
        if (*verify) {
            return run_verify(level, fault);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const bssc::Error &e) {
        std::cerr << "error: " << bssc::error_code_name(e.code()) << ": " << e.what() << "\n";
        return e.code() == bssc::ErrorCode::ConfigError ? EXIT_USAGE : EXIT_VIOLATION;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_VIOLATION;
    }
    return EXIT_USAGE;
}
