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

#include "bssc/verify.h"

#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "bssc/clifford.h"
#include "bssc/codebook.h"
#include "bssc/decoder.h"
#include "bssc/error.h"
#include "bssc/pauli.h"
#include "bssc/symplectic.h"

namespace bssc {

namespace {

using Check = std::function<std::string(VerifyLevel)>;

bool quick(VerifyLevel level) {
    return level == VerifyLevel::Quick;
}

int exhaustive_m(VerifyLevel level) {
    return quick(level) ? 2 : 3;
}

std::string describe(const BsscId &id) {
    return "m=" + std::to_string(id.m) + " serial=" + serial_to_string(serial_of(id));
}

std::vector<Gf2Matrix> enumerate_symplectic(int m) {
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

std::string check_gf2(VerifyLevel level) {
    std::mt19937_64 rng(1001);
    int trials = quick(level) ? 200 : 2000;
    for (int t = 0; t < trials; t++) {
        int m = 1 + t % 6;
        Gf2Matrix p = random_invertible(m, rng);
        if (p * invert(p) != Gf2Matrix::identity(m)) {
            return "P P^{-1} != I at m=" + std::to_string(m);
        }
    }
    return "";
}

std::string check_group_order(VerifyLevel) {
    for (int m = 1; m <= 2; m++) {
        std::vector<Gf2Matrix> group = enumerate_symplectic(m);
        if ((unsigned __int128)group.size() != symplectic_group_order(m)) {
            return "|Sp(" + std::to_string(2 * m) + ";2)| enumerates to " + std::to_string(group.size());
        }
    }
    std::set<std::string> reps;
    for (const Gf2Matrix &f : enumerate_symplectic(2)) {
        CosetRep rep = canonical_rep(SymplecticElement(f));
        reps.insert(coset_matrix(rep).matrix().to_text());
    }
    if (reps.size() != lagrangian_count(2)) {
        return "m=2 has " + std::to_string(reps.size()) + " canonical representatives";
    }
    return "";
}

std::string check_bruhat(VerifyLevel level) {
    std::mt19937_64 rng(1002);
    int per_m = quick(level) ? 50 : 1000;
    for (int m = 1; m <= 6; m++) {
        for (int t = 0; t < per_m; t++) {
            SymplecticElement f = random_symplectic(m, rng);
            BruhatDecomposition d = bruhat_decompose(f);
            if (d.recompose() != f || d.factors.recompose() != f) {
                return "recomposition differs at m=" + std::to_string(m);
            }
            SymplecticElement g = f * make_fd(random_invertible(m, rng)) * make_fu(random_symmetric(m, rng));
            if (!(canonical_rep(g).h == d.coset.h) || canonical_rep(g).sr != d.coset.sr) {
                return "canonical_rep differs within a coset at m=" + std::to_string(m);
            }
        }
    }
    return "";
}

std::string check_cardinality(VerifyLevel level) {
    int top = quick(level) ? 3 : 4;
    for (int m = 1; m <= top; m++) {
        std::vector<uint64_t> per_rank(m + 1);
        for_each_codeword(m, [&](const BsscId &id) { per_rank[id.r]++; });
        Serial total = 0;
        for (int r = 0; r <= m; r++) {
            if ((Serial)per_rank[r] != rank_count(m, r)) {
                return "rank " + std::to_string(r) + " count at m=" + std::to_string(m);
            }
            total += per_rank[r];
        }
        if (total != codebook_size(m)) {
            return "total at m=" + std::to_string(m);
        }
    }
    return "";
}

std::string check_distance(VerifyLevel level) {
    for (int m = 2; m <= exhaustive_m(level); m++) {
        std::vector<ChirpVector> ws;
        for_each_codeword(m, [&](const BsscId &id) { ws.push_back(bssc_vector(id)); });
        bool attained = false;
        for (size_t i = 0; i < ws.size(); i++) {
            for (size_t j = i + 1; j < ws.size(); j++) {
                ExactOverlap o = inner(ws[i], ws[j]);
                if (o.norm_sq_equals(1, 0)) {
                    return "two codewords coincide at m=" + std::to_string(m);
                }
                if (!o.is_zero() && o.norm_sq() > 0.5) {
                    return "overlap above 1/2 at m=" + std::to_string(m);
                }
                attained |= o.norm_sq_equals(1, 1);
            }
        }
        if (!attained) {
            return "distance 1/sqrt(2) never attained at m=" + std::to_string(m);
        }
    }
    return "";
}

std::string check_stabilizer(VerifyLevel level) {
    std::string failure;
    for (int m = 1; m <= exhaustive_m(level) && failure.empty(); m++) {
        for_each_codeword(m, [&](const BsscId &id) {
            if (!failure.empty()) {
                return;
            }
            ChirpVector w = bssc_vector(id);
            StabilizerGroup g = stabilizer_of(id);
            int diagonal = 0;
            for (const PauliElement &e : g.elements()) {
                if (apply_pauli(e, w) != w) {
                    failure = "group element does not fix " + describe(id);
                    return;
                }
                diagonal += e.a.is_zero();
            }
            if (diagonal != 1 << (m - id.r)) {
                failure = "diagonal count at " + describe(id);
            }
        });
    }
    return failure;
}

std::string check_construction(VerifyLevel level) {
    std::string failure;
    for (int m = 1; m <= exhaustive_m(level) && failure.empty(); m++) {
        for_each_codeword(m, [&](const BsscId &id) {
            if (failure.empty() && !bssc_vector(id).projectively_equal(clifford_column(id.coset(), id.b))) {
                failure = "bssc_vector and clifford_column differ at " + describe(id);
            }
        });
    }
    std::mt19937_64 rng(1003);
    int trials = quick(level) ? 100 : 1000;
    for (int t = 0; t < trials && failure.empty(); t++) {
        BsscId id = sample_bssc(4 + t % 3, rng);
        if (!bssc_vector(id).projectively_equal(clifford_column(id.coset(), id.b))) {
            failure = "bssc_vector and clifford_column differ at " + describe(id);
        }
    }
    return failure;
}

std::string check_semigroup(VerifyLevel level) {
    for (int m = 1; m <= exhaustive_m(level); m++) {
        std::vector<ChirpVector> ws;
        std::unordered_set<ChirpVector, ChirpVectorHash> book;
        for_each_codeword(m, [&](const BsscId &id) {
            ws.push_back(bssc_vector(id));
            book.insert(ws.back().canonical());
        });
        for (const ChirpVector &w : ws) {
            if (!book.count(conjugate(w).canonical())) {
                return "conjugate outside the codebook at m=" + std::to_string(m);
            }
        }
        for (size_t i = 0; i < ws.size(); i++) {
            for (size_t j = i; j < ws.size(); j++) {
                std::optional<ChirpVector> p = pointwise_mul(ws[i], ws[j]);
                if (p && !book.count(p->canonical())) {
                    return "product outside the codebook at m=" + std::to_string(m);
                }
            }
        }
    }
    return "";
}

std::string check_weyl(VerifyLevel level) {
    std::mt19937_64 rng(1004);
    std::normal_distribution<double> g;
    int trials = quick(level) ? 30 : 100;
    for (int t = 0; t < trials; t++) {
        int m = 1 + t % 3;
        std::vector<cd> s(size_t{1} << m);
        for (cd &x : s) {
            x = cd(g(rng), g(rng));
        }
        WeylDiagSpectrum diag = weyl_diag(s);
        for (uint64_t x = 0; x < s.size(); x++) {
            std::vector<cd> fast = weyl_offdiag(s, Gf2Vector(m, x));
            for (uint64_t y = 0; y < s.size(); y++) {
                std::vector<cd> e = apply_pauli(PauliElement(Gf2Vector(m, x), Gf2Vector(m, y)), s);
                cd naive = 0;
                for (size_t v = 0; v < s.size(); v++) {
                    naive += std::conj(s[v]) * e[v];
                }
                if (std::abs(fast[y] - naive) > 1e-10 || (x == 0 && std::abs(diag.values[y] - naive) > 1e-10)) {
                    std::ostringstream out;
                    out << "s^dagger E(" << x << "," << y << ") s differs from the naive sum at m=" << m;
                    return out.str();
                }
            }
        }
    }
    return "";
}

std::string check_decode(VerifyLevel level) {
    DecodeOptions options;
    options.mode = DecodeMode::Noiseless;
    std::string failure;
    int top = quick(level) ? 2 : 4;
    for (int m = 1; m <= top && failure.empty(); m++) {
        for_each_codeword(m, [&](const BsscId &id) {
            if (failure.empty() && !(decode_single(bssc_vector(id).to_complex(), options).id == id)) {
                failure = "noiseless decode missed " + describe(id);
            }
        });
    }
    std::mt19937_64 rng(1005);
    int trials = quick(level) ? 100 : 1000;
    for (int t = 0; t < trials && failure.empty(); t++) {
        BsscId id = sample_bssc(3 + t % 4, rng);
        if (!(decode_single(bssc_vector(id).to_complex(), options).id == id)) {
            failure = "noiseless decode missed " + describe(id);
        }
    }
    return failure;
}

const std::vector<std::pair<std::string, Check>> &checks() {
    static const std::vector<std::pair<std::string, Check>> list = {
        {"gf2 inverse", check_gf2},
        {"symplectic group order", check_group_order},
        {"bruhat roundtrip", check_bruhat},
        {"codebook cardinality", check_cardinality},
        {"minimum chordal distance", check_distance},
        {"stabilizer eigenvector law", check_stabilizer},
        {"construction cross-check", check_construction},
        {"semigroup closure", check_semigroup},
        {"weyl-transform oracle", check_weyl},
        {"noiseless decode roundtrip", check_decode},
    };
    return list;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto &[name, check] : checks()) {
        out.push_back(name);
    }
    return out;
}

std::vector<CheckResult> run_checks(VerifyLevel level, const std::function<void(const CheckResult &)> &report) {
    std::vector<CheckResult> out;
    for (const auto &[name, check] : checks()) {
        auto start = std::chrono::steady_clock::now();
        CheckResult result;
        result.name = name;
        try {
            result.detail = check(level);
            result.ok = result.detail.empty();
        } catch (const std::exception &e) {
            result.ok = false;
            result.detail = e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (report) {
            report(result);
        }
        out.push_back(result);
    }
    return out;
}

}  // namespace bssc
