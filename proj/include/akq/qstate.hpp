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

#include <cstddef>
#include <numbers>
#include <vector>

#include "akq/linalg.hpp"

namespace akq {

/// Absolute tolerance for state invariants. Every quantity here is O(1).
inline constexpr double kStateTol = 1e-9;

struct BlochVector {
    double r1 = 0;
    double r2 = 0;
    double r3 = 0;

    double norm() const;
    double dot(const BlochVector &other) const { return r1 * other.r1 + r2 * other.r2 + r3 * other.r3; }
};

/// Hermitian, positive semidefinite, unit-trace matrix. Instances built
/// through the public factory are validated; the library's own algebra
/// (rotations, tensor products, mixtures) preserves the invariants and skips
/// the check.
class DensityOperator {
   public:
    /// Throws InvalidState if `m` is not a density operator within kStateTol.
    static DensityOperator from_matrix(CMatrix m);
    /// Caller guarantees the invariants.
    static DensityOperator unchecked(CMatrix m) { return DensityOperator(std::move(m)); }

    const CMatrix &matrix() const { return m_; }
    size_t dim() const { return m_.dim(); }
    /// Qubits only.
    BlochVector bloch() const;
    double purity() const;

   private:
    explicit DensityOperator(CMatrix m) : m_(std::move(m)) {}
    CMatrix m_;
};

/// Empty string when `m` satisfies every density-operator invariant,
/// otherwise a description of the first violation.
std::string density_violation(const CMatrix &m, double tol = kStateTol);

/// Point l of the M-point great circle through sigma_1 and sigma_3. The index
/// is kept modulo M, so l = M and l = 0 name the same state.
class CircleIndex {
   public:
    CircleIndex(long long ell, int M);

    int ell() const { return ell_; }
    int M() const { return M_; }
    double angle() const { return 2 * std::numbers::pi * ell_ / M_; }
    CircleIndex shifted(long long delta) const { return CircleIndex(ell_ + delta, M_); }

   private:
    int ell_;
    int M_;
};

/// Throws InvalidConfiguration unless M is a positive multiple of 4.
void require_circle_size(int M);

class Ensemble {
   public:
    Ensemble(std::vector<DensityOperator> states, std::vector<double> priors);
    static Ensemble uniform(std::vector<DensityOperator> states);

    size_t size() const { return states_.size(); }
    size_t dim() const { return states_.front().dim(); }
    const std::vector<DensityOperator> &states() const { return states_; }
    const std::vector<double> &priors() const { return priors_; }
    const DensityOperator &state(size_t k) const { return states_[k]; }
    double prior(size_t k) const { return priors_[k]; }

   private:
    std::vector<DensityOperator> states_;
    std::vector<double> priors_;
};

DensityOperator bloch_to_density(const BlochVector &r);
DensityOperator circle_state(const CircleIndex &idx);
/// Pure state at angle `angle` on the sigma_1/sigma_3 great circle.
DensityOperator circle_state_at(double angle);
/// Bloch vector (sin t cos p, cos t, sin t sin p).
DensityOperator sphere_state(double theta, double phi);

/// Unitary rotation about the r2 axis that advances the circle angle by
/// `angle`, so circle_state(l, M) goes to circle_state(l + angle*M/2pi, M).
CMatrix circle_rotation(double angle);
DensityOperator rotate_circle(const DensityOperator &state, double angle);

/// Re tr(rho sigma).
double overlap(const DensityOperator &rho, const DensityOperator &sigma);
DensityOperator tensor(const DensityOperator &a, const DensityOperator &b);
DensityOperator ensemble_mixture(const Ensemble &e);

/// Reduced state of one factor of a (dim_a * dim_b) bipartite operator.
/// `keep` is 0 for the first factor, 1 for the second.
DensityOperator partial_trace(const DensityOperator &rho, size_t dim_a, size_t dim_b, int keep);

/// Rotation Babe applies for data bit j: +pi/2 for 0 (counterclockwise),
/// -pi/2 for 1 (clockwise, decreasing l).
double modulation_angle(int bit);
DensityOperator modulate(const DensityOperator &state, int bit);
/// Circle-index offset produced by modulating bit j on an M-point circle.
int modulation_shift(int bit, int M);

/// Uniform ensemble over all M circle states.
Ensemble circle_ensemble(int M);
/// The +-sigma_1, +-sigma_2, +-sigma_3 eigenstates, uniform priors.
Ensemble six_state_ensemble();
/// N quasi-uniform points on the Bloch sphere (Fibonacci lattice), uniform
/// priors. N = 6 returns the octahedron, i.e. six_state_ensemble.
Ensemble sphere_grid_ensemble(int N);

}  // namespace akq
