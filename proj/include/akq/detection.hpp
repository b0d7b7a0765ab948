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
#include <vector>

#include "akq/linalg.hpp"
#include "akq/parallel.hpp"
#include "akq/qstate.hpp"
#include "akq/rng.hpp"

namespace akq {

/// Positive operator-valued measure: PSD elements summing to the identity.
class Povm {
   public:
    /// Validates: each element Hermitian and PSD within 1e-9, sum equal to
    /// the identity within 1e-8. Throws InvalidState otherwise.
    explicit Povm(std::vector<CMatrix> elements);
    static Povm unchecked(std::vector<CMatrix> elements);

    size_t size() const { return elements_.size(); }
    size_t dim() const { return elements_.front().dim(); }
    const CMatrix &element(size_t k) const { return elements_[k]; }
    const std::vector<CMatrix> &elements() const { return elements_; }

    /// tr(Pi_k rho) for each outcome k.
    std::vector<double> probabilities(const DensityOperator &rho) const;
    size_t sample(const DensityOperator &rho, TrialStream &rng) const;

   private:
    Povm() = default;
    std::vector<CMatrix> elements_;
};

/// Empty when the elements form a valid POVM.
std::string povm_violation(const std::vector<CMatrix> &elements);

struct DetectionReport {
    double pc = 0;
    double pa = 0;
    Povm povm;
    bool certified_optimal = false;
};

/// Square-root measurement S^{-1/2} p_i rho_i S^{-1/2}, S = sum p_i rho_i.
/// Eigenvalues of S below 1e-12 are treated as zero; the identity on the
/// kernel of S is shared equally between the elements so the result is
/// complete.
Povm square_root_measurement(const Ensemble &e);

/// sum_i p_i tr(Pi_i rho_i).
double correct_id_probability(const Ensemble &e, const Povm &m);

/// Probability that the state the measurer reports (rho_{l'} on outcome l')
/// passes a projective check against the true pure state:
///   sum_{l,l'} p_l tr(Pi_{l'} rho_l) tr(rho_l rho_{l'}).
double acceptance_probability(const Ensemble &e, const Povm &m);

struct HelstromResult {
    Povm povm;
    double pc = 0;
};

/// Optimal two-state discrimination. Element 0 projects onto the strictly
/// positive eigenspace of p0 rho0 - (1 - p0) rho1; zero eigenvalues go to
/// outcome 1.
HelstromResult helstrom_binary(const DensityOperator &rho0, const DensityOperator &rho1, double p0);

/// Checks the minimum-error optimality conditions: Upsilon = sum_j p_j rho_j
/// Pi_j is Hermitian and Upsilon - p_j rho_j is PSD for every j.
bool certify_optimality(const Ensemble &e, const Povm &m, double tol = 1e-7);

/// SRM, its P_c and P_a, and the optimality certificate.
DetectionReport analyze_ensemble(const Ensemble &e);

/// Pi_k = I / n for every outcome.
Povm guessing_povm(size_t outcomes, size_t dim);

/// SRM of the uniform M-point circle with every element rotated by `offset`
/// radians. offset = 0 is the SRM itself.
Povm rotated_circle_srm(int M, double offset);

struct RotationScan {
    double srm_pa = 0;
    double best_pa = 0;
    double best_offset = 0;
};

/// Evaluates the acceptance probability over the rotated-SRM family on a
/// grid of `steps` offsets covering [0, 2pi).
RotationScan scan_rotated_srm(int M, int steps = 10000);

/// Monte Carlo P_a for a measurer who picks a random orthogonal pair
/// {psi_k, psi_{k+M/2}} from the circle, measures it, and reports the outcome
/// state; Adam then checks the report against the true state.
Estimate random_basis_strategy(int M, uint64_t seed, uint64_t trials, Exec exec = Exec::parallel);

}  // namespace akq
