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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "akq/parallel.hpp"
#include "akq/qstate.hpp"

namespace akq {

struct AttackReport {
    std::string strategy;
    double per_qubit_success = 0;
    double deterministic_bits = 0;
    double shannon_bits = 0;
    std::vector<double> order_guess_distribution;
};

/// Binomial(k, 1/4): probability that order guessing gets exactly q of k
/// blocks right, q = 0..k.
std::vector<double> impersonation_order_pmf(int k);

/// Eve's two copies for data bit j: the uniform average of
/// rho(l) (x) modulate(rho(l), j), as 4x4 operators (first, second).
std::pair<DensityOperator, DensityOperator> two_copy_states(int M);

/// Helstrom success probability for telling the two-copy states apart at
/// equal priors.
double opaque_bound(int M);

/// Monte Carlo success of the two-step strategy: square-root measurement on
/// the outgoing copy, then a clockwise/counterclockwise test of the returned
/// copy relative to the estimate.
Estimate sequential_strategy_pc(int M, uint64_t trials, uint64_t seed, Exec exec = Exec::parallel);

double binary_entropy(double p);

struct TranslucentAccounting {
    double deterministic_bits = 0;
    double shannon_bits = 0;
};

/// Information granted to a tapping Eve over 8k qubits: a quarter of the bits
/// exactly (right order), the rest through a binary symmetric channel with
/// success `pa`, counted as 1 - h(pa) bits each. Requires 0.5 <= pa <= 1.
TranslucentAccounting translucent_accounting(int k, double pa);

struct FactorizationCheck {
    double single_bit_pc = 0;
    /// Upper bound on expected correct bits for any joint measurement,
    /// from the per-bit trace norms on the joint space.
    double joint_bit_sum_optimum = 0;
    /// Expected correct bits for the product of single-bit Helstrom tests,
    /// by enumeration of all hypotheses and outcomes.
    double product_bit_sum = 0;
    /// Probability the product measurement gets every bit right.
    double product_block_success = 0;
    bool factorizes = false;
};

/// n_bits is 1 or 2. Each bit is the two-copy problem of two_copy_states(M);
/// the two-bit instance works on 16x16 operators.
FactorizationCheck joint_attack_factorization(int n_bits, int M, double tol = 1e-6);
bool joint_attack_factorization_check(int n_bits, int M);

AttackReport impersonation_report(int k);
AttackReport opaque_report(int M);
AttackReport translucent_report(int k, double pa);

}  // namespace akq
