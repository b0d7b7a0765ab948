// Copyright 2026 The akq Authors
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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "akq/adversary.hpp"
#include "akq/ake.hpp"
#include "akq/aki.hpp"
#include "akq/coherent.hpp"
#include "akq/detection.hpp"
#include "akq/qstate.hpp"
#include "test_util.hpp"

using namespace akq;
using akq_test::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << " [fail: " << what << "]";
        }
    }
};

struct Criterion {
    int id;
    const char *name;
    /// Wall-clock limit in seconds, or 0 when none is stated.
    double limit_s;
    std::function<void(Outcome &)> body;
};

void crit_min_error(Outcome &o) {
    for (int M : {4, 8, 16, 32}) {
        Ensemble e = circle_ensemble(M);
        double pc = correct_id_probability(e, square_root_measurement(e));
        o.detail << " M=" << M << " pc=" << pc;
        o.check(std::abs(pc - 2.0 / M) <= 1e-9, "pc != 2/M at M=" + std::to_string(M));
    }
}

void crit_acceptance(Outcome &o) {
    for (int M : {4, 8, 16, 32}) {
        DetectionReport r = analyze_ensemble(circle_ensemble(M));
        o.detail << " M=" << M << " pa=" << r.pa;
        o.check(r.certified_optimal, "measurement not certified at M=" + std::to_string(M));
        o.check(std::abs(r.pa - 0.75) <= 1e-9, "pa != 3/4 at M=" + std::to_string(M));
    }
    DetectionReport six = analyze_ensemble(six_state_ensemble());
    o.detail << " six-state pa=" << six.pa;
    o.check(six.certified_optimal, "six-state measurement not certified");
    o.check(std::abs(six.pa - 2.0 / 3) <= 1e-9, "six-state pa != 2/3");
}

void crit_zero_leakage(Outcome &o) {
    double worst = 0;
    for (int M = 4; M <= 32; M += 4) {
        std::vector<DensityOperator> up, down;
        for (int l = 0; l < M; l++) {
            up.push_back(modulate(circle_state(CircleIndex(l, M)), 0));
            down.push_back(modulate(circle_state(CircleIndex(l, M)), 1));
        }
        double d = max_abs_diff(ensemble_mixture(Ensemble::uniform(up)).matrix(),
                                ensemble_mixture(Ensemble::uniform(down)).matrix());
        worst = std::max(worst, d);
        o.check(d <= 1e-9, "mixtures differ at M=" + std::to_string(M));
    }
    o.detail << " max entry diff over M=4,8,..,32: " << worst;
}

void crit_opaque(Outcome &o) {
    for (int M : {4, 8, 16}) {
        auto [r0, r1] = two_copy_states(M);
        double pc = helstrom_binary(r0, r1, 0.5).pc;
        Estimate seq = sequential_strategy_pc(M, 100000, 4000 + M);
        double z = std::abs(seq.mean - pc) / seq.std_error;
        o.detail << " M=" << M << " helstrom=" << pc << " sequential=" << seq.mean << "+-" << seq.std_error;
        o.check(std::abs(pc - 0.75) <= 1e-9, "helstrom != 3/4 at M=" + std::to_string(M));
        o.check(z <= 3, "sequential off by > 3 SE at M=" + std::to_string(M));
    }
}

void crit_impersonation(Outcome &o) {
    SessionConfig cfg;
    cfg.k = 64;
    cfg.M = 8;
    cfg.eve_strategy = EveStrategy::impersonation;
    cfg.rng_seed = 5005;
    auto runs = run_ake_sessions(cfg, 1000);
    uint64_t wrong_q = 0, wrong_e = 0;
    size_t failed = 0;
    for (const auto &tr : runs) {
        wrong_q += tr.eve_report.wrong_block_qubits;
        wrong_e += tr.eve_report.wrong_block_errors;
        failed += tr.aborted || !tr.trial_check_passed;
    }
    double rate = double(wrong_e) / wrong_q;
    o.detail << " wrong-block error=" << rate << " (" << wrong_q << " qubits) trial failures=" << failed
             << "/1000";
    o.check(std::abs(rate - 0.5) <= 0.01, "wrong-block error outside 0.50 +- 0.01");
    o.check(failed >= 999, "trial encryption failed in fewer than 999 sessions");
}

void crit_key_accounting(Outcome &o) {
    int bad = 0;
    for (int k = 1; k <= 16; k++) {
        SessionConfig cfg;
        cfg.k = k;
        cfg.M = 8;
        cfg.cecc = Cecc::none;
        cfg.rng_seed = 600 + k;
        SessionTranscript tr = run_ake_session(cfg);
        bool ok = !tr.aborted && tr.trial_check_passed && tr.final_key_adam == tr.final_key_babe &&
                  tr.final_key_adam.size() == 4u * k && tr.order_bits_expended == 2u * k &&
                  tr.final_key_adam.size() - tr.order_bits_expended == 2u * k;
        SessionTranscript again = run_ake_session(cfg);
        ok = ok && again.final_key_adam == tr.final_key_adam;
        if (!ok) {
            bad++;
            o.check(false, "accounting wrong at k=" + std::to_string(k));
        }
    }
    o.detail << " k=1..16: key 4k, order bits 2k, net 2k; mismatches=" << bad;
}

void crit_translucent(Outcome &o) {
    const double pa = 0.75;
    double h = -pa * std::log2(pa) - (1 - pa) * std::log2(1 - pa);
    for (int k : {1, 2, 4, 8, 16}) {
        TranslucentAccounting t = translucent_accounting(k, pa);
        double expected = 6.0 * k * (1 - h);
        o.check(t.deterministic_bits == 2.0 * k, "deterministic bits != 2k at k=" + std::to_string(k));
        o.check(std::abs(t.shannon_bits - expected) <= 1e-12, "Shannon bits != 6k(1-h(pa))");
        if (k == 1) {
            o.detail << " k=1 deterministic=" << t.deterministic_bits << " shannon=" << t.shannon_bits
                     << " (= " << t.shannon_bits << "k"
                     << (t.shannon_bits < k ? ", below" : ", above") << " the quoted bound of k)";
        }
    }
}

void crit_aki(Outcome &o) {
    for (int m : {1, 2, 4, 8}) {
        Estimate honest = aki_honest(m, 4, 100000, 8000 + m);
        o.check(honest.mean == 1.0, "honest acceptance != 1 at m=" + std::to_string(m));
        Estimate imp = aki_impersonation(m, 4, 100000, 9000 + m);
        double predicted = std::pow(0.75, m);
        double z = std::abs(imp.mean - predicted) / imp.std_error;
        o.detail << " m=" << m << " Ps=" << imp.mean << " (" << predicted << ")";
        o.check(z <= 3, "impersonation off by > 3 SE at m=" + std::to_string(m));
    }
}

void crit_coherent(Outcome &o) {
    const uint64_t trials = 100000;
    const int M = 4096;
    double lo = 1, hi = 0;
    for (double a : {5.0, 10.0, 20.0}) {
        Estimate e = heterodyne_pa(a, M, trials, 10000 + static_cast<uint64_t>(a));
        lo = std::min(lo, e.mean);
        hi = std::max(hi, e.mean);
        o.detail << " het(" << a << ")=" << e.mean;
    }
    o.detail << " span=" << hi - lo;
    o.check(hi - lo < 0.02, "heterodyne span >= 0.02");

    for (double a : {5.0, 10.0, 20.0}) {
        PhaseDistribution dist(a, min_truncation(a));
        Estimate e = canonical_phase_pa(dist, M, trials, 11000 + static_cast<uint64_t>(a));
        o.detail << " can(" << a << ")=" << e.mean << "+-" << e.std_error;
        o.check(e.mean < 2.0 / 3 + 3 * e.std_error, "canonical pa not below 2/3 + 3 SE at alpha0=" + std::to_string(a));
    }

    double vmin = 1e300, vmax = 0;
    for (double a : {2.0, 4.0, 8.0, 16.0}) {
        PhaseDistribution dist(a, min_truncation(a));
        double scaled = dist.variance() * a * a;
        vmin = std::min(vmin, scaled);
        vmax = std::max(vmax, scaled);
        o.detail << " var*a^2(" << a << ")=" << scaled;
    }
    o.detail << " factor=" << vmax / vmin;
    o.check(vmax / vmin <= 1.2, "variance*alpha0^2 spread exceeds factor 1.2");
}

/// Best success over projective qubit tests, 100 x 100 sphere grid then a
/// 100 x 100 grid across the best coarse cell.
double exhaustive_projective(const DensityOperator &r0, const DensityOperator &r1, double p0) {
    auto pc_at = [&](double th, double ph) {
        CMatrix plus = sphere_state(th, ph).matrix();
        CMatrix minus = CMatrix::identity(2) - plus;
        return p0 * trace_product_real(plus, r0.matrix()) + (1 - p0) * trace_product_real(minus, r1.matrix());
    };
    double best = std::max(p0, 1 - p0), bt = 0, bp = 0;
    const int n = 100;
    for (int a = 0; a <= n; a++) {
        for (int b = 0; b < n; b++) {
            double th = kPi * a / n, ph = 2 * kPi * b / n, v = pc_at(th, ph);
            if (v > best) {
                best = v;
                bt = th;
                bp = ph;
            }
        }
    }
    double dt = kPi / n, dp = 2 * kPi / n;
    for (int a = 0; a <= n; a++) {
        for (int b = 0; b <= n; b++) {
            best = std::max(best, pc_at(bt - dt + 2 * dt * a / n, bp - dp + 2 * dp * b / n));
        }
    }
    return best;
}

void crit_brute_force(Outcome &o) {
    double worst = 0;
    for (int rep = 0; rep < 100; rep++) {
        DensityOperator r0 = rep % 2 ? akq_test::random_pure_qubit() : akq_test::random_mixed_qubit();
        DensityOperator r1 = akq_test::random_mixed_qubit();
        double p0 = uniform(0.05, 0.95);
        worst = std::max(worst, std::abs(helstrom_binary(r0, r1, p0).pc - exhaustive_projective(r0, r1, p0)));
    }
    o.detail << " max |helstrom - search|=" << worst;
    o.check(worst <= 1e-4, "helstrom disagrees with exhaustive search");

    int certified = 0, symmetric = 0;
    for (int M : {4, 8, 16, 32}) {
        Ensemble e = circle_ensemble(M);
        certified += certify_optimality(e, square_root_measurement(e));
        symmetric++;
    }
    Ensemble six = six_state_ensemble();
    certified += certify_optimality(six, square_root_measurement(six));
    symmetric++;
    o.detail << " SRM certified " << certified << "/" << symmetric;
    o.check(certified == symmetric, "SRM not certified on a symmetric ensemble");

    int rejected = 0;
    for (int rep = 0; rep < 100; rep++) {
        int M = 4 << (rep % 3);
        Ensemble e = circle_ensemble(M);
        Povm srm = square_root_measurement(e);
        double eps = uniform(0.01, 0.5);
        size_t shift = 1 + static_cast<size_t>(uniform(0, M - 1));
        std::vector<CMatrix> els;
        for (int k = 0; k < M; k++) {
            els.push_back(srm.element(k) * (1 - eps) + srm.element((k + shift) % M) * eps);
        }
        rejected += !certify_optimality(e, Povm(els));
    }
    o.detail << " perturbed rejected " << rejected << "/100";
    o.check(rejected == 100, "a perturbed measurement was certified");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "min-error identification", 1, crit_min_error},
        {2, "acceptance probability", 1, crit_acceptance},
        {3, "zero leakage with a copy", 0, crit_zero_leakage},
        {4, "two-copy opaque bound", 10, crit_opaque},
        {5, "impersonation", 60, crit_impersonation},
        {6, "key accounting", 0, crit_key_accounting},
        {7, "translucent accounting", 0, crit_translucent},
        {8, "AKI", 30, crit_aki},
        {9, "coherent amplitude independence", 120, crit_coherent},
        {10, "brute-force equivalence", 0, crit_brute_force},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception &e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            o.check(false, "runtime over " + std::to_string(c.limit_s) + " s");
        }
        failures += !o.pass;
        std::printf("%s criterion %d (%s) %.2fs:%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
