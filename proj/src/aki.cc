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

#include "akq/aki.hpp"

#include <numbers>

#include "akq/detection.hpp"
#include "akq/errors.hpp"

namespace akq {

namespace {

double grid_phase(uint64_t a, int M) {
    return 2 * std::numbers::pi * static_cast<double>(a) / M;
}

void require_aki_args(int m, int M) {
    if (m < 1) {
        throw InvalidConfiguration("AKI needs m >= 1 qubits");
    }
    require_circle_size(M);
}

}  // namespace

DensityOperator StoredKeyState::rotated(double phi_a) const {
    quantum_uses_++;
    return rotate_circle(circle_state_at(phi_b_), phi_a);
}

double StoredKeyState::read_phase_audited() const {
    classical_reads_++;
    return phi_b_;
}

AkiChallenge aki_challenge(const StoredKeyState &key, int M, TrialStream &rng) {
    require_circle_size(M);
    return aki_challenge_with(key, grid_phase(rng.below(M), M));
}

AkiChallenge aki_challenge_with(const StoredKeyState &key, double phi_a) {
    return {phi_a, key.rotated(phi_a)};
}

DensityOperator aki_respond(const DensityOperator &state, double phi_b) {
    return rotate_circle(state, -phi_b);
}

double aki_accept_probability(const DensityOperator &returned, double phi_a) {
    return overlap(returned, circle_state_at(phi_a));
}

bool aki_verify(const DensityOperator &returned, double phi_a, TrialStream &rng) {
    double p = aki_accept_probability(returned, phi_a);
    // Rotation round trips leave p within a few ulps of 1 for an exact match.
    if (p > 1 - 1e-12) {
        return true;
    }
    return rng.uniform() < p;
}

Estimate aki_impersonation(int m, int M, uint64_t trials, uint64_t seed, Exec exec) {
    require_aki_args(m, M);
    Povm srm = square_root_measurement(circle_ensemble(M));
    return monte_carlo(
        seed, trials,
        [m, M, srm](TrialStream &rng) {
            for (int q = 0; q < m; q++) {
                StoredKeyState key(grid_phase(rng.below(M), M));
                AkiChallenge ch = aki_challenge(key, M, rng);
                // Eve's copy of the public key, measured for a phase estimate.
                DensityOperator public_copy = key.rotated(0);
                double estimate = grid_phase(srm.sample(public_copy, rng), M);
                if (!aki_verify(aki_respond(ch.sent_state, estimate), ch.phi_a, rng)) {
                    return 0.0;
                }
            }
            return 1.0;
        },
        exec);
}

Estimate aki_honest(int m, int M, uint64_t trials, uint64_t seed, Exec exec) {
    require_aki_args(m, M);
    return monte_carlo(
        seed, trials,
        [m, M](TrialStream &rng) {
            for (int q = 0; q < m; q++) {
                double phi_b = grid_phase(rng.below(M), M);
                StoredKeyState key(phi_b);
                AkiChallenge ch = aki_challenge(key, M, rng);
                if (!aki_verify(aki_respond(ch.sent_state, phi_b), ch.phi_a, rng)) {
                    return 0.0;
                }
            }
            return 1.0;
        },
        exec);
}

Estimate aki_fixed_reference_attack(int M, uint64_t trials, uint64_t seed, Exec exec) {
    require_circle_size(M);
    return monte_carlo(
        seed, trials,
        [M](TrialStream &rng) {
            StoredKeyState key(grid_phase(rng.below(M), M));
            AkiChallenge ch = aki_challenge(key, M, rng);
            return aki_verify(circle_state_at(0), ch.phi_a, rng) ? 1.0 : 0.0;
        },
        exec);
}

}  // namespace akq
