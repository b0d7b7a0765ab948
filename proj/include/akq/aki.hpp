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

#include "akq/parallel.hpp"
#include "akq/qstate.hpp"
#include "akq/rng.hpp"

namespace akq {

/// Adam's quantum memory holding Babe's key state |phi_B>. The phase is
/// unknown to Adam: his code may only act on the stored state (rotate it and
/// send it), never read the phase. Every classical read is counted so tests
/// can audit that the verifier's path performs none.
class StoredKeyState {
   public:
    explicit StoredKeyState(double phi_b) : phi_b_(phi_b) {}

    /// The stored state rotated by phi_a, i.e. |phi_B + phi_A>.
    DensityOperator rotated(double phi_a) const;
    int quantum_uses() const { return quantum_uses_; }

    /// Classical read of the phase. Only the simulator's bookkeeping may call
    /// this; each call is recorded.
    double read_phase_audited() const;
    int classical_reads() const { return classical_reads_; }

   private:
    double phi_b_;
    mutable int quantum_uses_ = 0;
    mutable int classical_reads_ = 0;
};

/// What Adam keeps and sends for one challenge. Babe's phase stays inside
/// the StoredKeyState.
struct AkiChallenge {
    double phi_a = 0;
    DensityOperator sent_state = circle_state_at(0);
};

/// phi_A drawn uniformly from the M circle phases 2 pi a / M.
AkiChallenge aki_challenge(const StoredKeyState &key, int M, TrialStream &rng);
AkiChallenge aki_challenge_with(const StoredKeyState &key, double phi_a);

/// Babe removes her phase: rotate_circle(state, -phi_b).
DensityOperator aki_respond(const DensityOperator &state, double phi_b);

/// Probability that the returned state passes the projection onto |phi_A>.
double aki_accept_probability(const DensityOperator &returned, double phi_a);
/// Samples the two-outcome check {|phi_A><phi_A|, I - |phi_A><phi_A|}.
bool aki_verify(const DensityOperator &returned, double phi_a, TrialStream &rng);

/// Monte Carlo acceptance of an impersonator over m independent key qubits.
/// For each qubit Eve measures a copy of the public key state with the M-point
/// square-root measurement and returns the challenge rotated back by her
/// estimate. The identification succeeds only if all m checks pass.
Estimate aki_impersonation(int m, int M, uint64_t trials, uint64_t seed, Exec exec = Exec::parallel);

/// Honest Babe over m qubits.
Estimate aki_honest(int m, int M, uint64_t trials, uint64_t seed, Exec exec = Exec::parallel);

/// Eve ignores the challenge and returns the reference state |phi = 0>.
Estimate aki_fixed_reference_attack(int M, uint64_t trials, uint64_t seed, Exec exec = Exec::parallel);

}  // namespace akq
