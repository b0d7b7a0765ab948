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

#include "akq/adversary.hpp"

#include <cmath>

#include "akq/detection.hpp"
#include "akq/errors.hpp"

namespace akq {

std::vector<double> impersonation_order_pmf(int k) {
    if (k < 1) {
        throw InvalidConfiguration("impersonation_order_pmf needs k >= 1");
    }
    std::vector<double> pmf(k + 1);
    for (int q = 0; q <= k; q++) {
        double log_choose = std::lgamma(k + 1.0) - std::lgamma(q + 1.0) - std::lgamma(k - q + 1.0);
        pmf[q] = std::exp(log_choose + q * std::log(0.25) + (k - q) * std::log(0.75));
    }
    return pmf;
}

std::pair<DensityOperator, DensityOperator> two_copy_states(int M) {
    require_circle_size(M);
    CMatrix rho[2] = {CMatrix(4), CMatrix(4)};
    for (int l = 0; l < M; l++) {
        DensityOperator first = circle_state(CircleIndex(l, M));
        for (int j = 0; j < 2; j++) {
            rho[j] += tensor(first, modulate(first, j)).matrix() * (1.0 / M);
        }
    }
    return {DensityOperator::unchecked(rho[0]), DensityOperator::unchecked(rho[1])};
}

double opaque_bound(int M) {
    auto [rho0, rho1] = two_copy_states(M);
    return helstrom_binary(rho0, rho1, 0.5).pc;
}

Estimate sequential_strategy_pc(int M, uint64_t trials, uint64_t seed, Exec exec) {
    require_circle_size(M);
    Povm srm = square_root_measurement(circle_ensemble(M));
    return monte_carlo(
        seed, trials,
        [M, srm](TrialStream &rng) {
            DensityOperator outgoing = circle_state(CircleIndex(static_cast<long long>(rng.below(M)), M));
            int bit = rng.bit();
            DensityOperator returning = modulate(outgoing, bit);
            DensityOperator estimate = circle_state(CircleIndex(static_cast<long long>(srm.sample(outgoing, rng)), M));
            Povm turn = Povm::unchecked({modulate(estimate, 0).matrix(), modulate(estimate, 1).matrix()});
            return static_cast<int>(turn.sample(returning, rng)) == bit ? 1.0 : 0.0;
        },
        exec);
}

double binary_entropy(double p) {
    if (p <= 0 || p >= 1) {
        return 0;
    }
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

TranslucentAccounting translucent_accounting(int k, double pa) {
    if (k < 1) {
        throw InvalidConfiguration("translucent_accounting needs k >= 1");
    }
    if (!(pa >= 0.5 && pa <= 1)) {
        throw InvalidConfiguration("translucent_accounting needs 0.5 <= pa <= 1");
    }
    double qubits = 8.0 * k;
    return {qubits / 4, qubits * 0.75 * (1 - binary_entropy(pa))};
}

FactorizationCheck joint_attack_factorization(int n_bits, int M, double tol) {
    if (n_bits != 1 && n_bits != 2) {
        throw InvalidConfiguration("joint_attack_factorization supports 1 or 2 bits");
    }
    auto [rho0, rho1] = two_copy_states(M);
    HelstromResult single = helstrom_binary(rho0, rho1, 0.5);

    FactorizationCheck c;
    c.single_bit_pc = single.pc;
    if (n_bits == 1) {
        c.joint_bit_sum_optimum = single.pc;
        c.product_bit_sum = single.pc;
        c.product_block_success = single.pc;
        c.factorizes = true;
        return c;
    }

    const DensityOperator *bit_state[2] = {&rho0, &rho1};
    DensityOperator mix = DensityOperator::unchecked((rho0.matrix() + rho1.matrix()) * cplx(0.5));

    // Any joint measurement's guess for bit 1 is a binary test on the 16-dim
    // space, so its success is capped by the Helstrom value there.
    c.joint_bit_sum_optimum = helstrom_binary(tensor(rho0, mix), tensor(rho1, mix), 0.5).pc +
                              helstrom_binary(tensor(mix, rho0), tensor(mix, rho1), 0.5).pc;

    for (int j1 = 0; j1 < 2; j1++) {
        for (int j2 = 0; j2 < 2; j2++) {
            CMatrix joint = kron(bit_state[j1]->matrix(), bit_state[j2]->matrix());
            for (int a = 0; a < 2; a++) {
                for (int b = 0; b < 2; b++) {
                    CMatrix outcome = kron(single.povm.element(a), single.povm.element(b));
                    double p = 0.25 * trace_product_real(outcome, joint);
                    c.product_bit_sum += p * ((a == j1) + (b == j2));
                    if (a == j1 && b == j2) {
                        c.product_block_success += p;
                    }
                }
            }
        }
    }
    c.factorizes = std::abs(c.joint_bit_sum_optimum - c.product_bit_sum) < tol &&
                   std::abs(c.product_bit_sum - 2 * single.pc) < tol &&
                   std::abs(c.product_block_success - single.pc * single.pc) < tol;
    return c;
}

bool joint_attack_factorization_check(int n_bits, int M) {
    return joint_attack_factorization(n_bits, M).factorizes;
}

AttackReport impersonation_report(int k) {
    AttackReport r;
    r.strategy = "impersonation";
    r.per_qubit_success = 0.25;
    r.order_guess_distribution = impersonation_order_pmf(k);
    return r;
}

AttackReport opaque_report(int M) {
    AttackReport r;
    r.strategy = "opaque";
    r.per_qubit_success = opaque_bound(M);
    return r;
}

AttackReport translucent_report(int k, double pa) {
    auto acc = translucent_accounting(k, pa);
    AttackReport r;
    r.strategy = "translucent";
    r.per_qubit_success = 0.25 + 0.75 * pa;
    r.deterministic_bits = acc.deterministic_bits;
    r.shannon_bits = acc.shannon_bits;
    r.order_guess_distribution = {0.75, 0.25};
    return r;
}

}  // namespace akq
