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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "akq/parallel.hpp"
#include "akq/rng.hpp"

namespace akq {

/// |alpha0 e^{i theta}>, alpha0 > 0.
struct CoherentState {
    double alpha0 = 1;
    double theta = 0;

    CoherentState(double alpha0, double theta);
    std::complex<double> amplitude() const;
};

/// |<a|b>| = exp(-alpha0^2 (1 - cos(theta_a - theta_b))) for equal
/// amplitudes; throws InvalidConfiguration when they differ.
double coherent_overlap_mag(const CoherentState &a, const CoherentState &b);

/// |<a|b>|^2 between two equal-amplitude states separated by `dtheta`.
double coherent_acceptance(double alpha0, double dtheta);

/// Two-mode realization |alpha0 cos t>|alpha0 sin t>: the overlap magnitude
/// of two such states.
double two_mode_overlap_mag(double alpha0, double theta1, double theta2);

/// Heterodyne outcome: complex Gaussian centred on the amplitude, variance
/// 1/2 per quadrature. Any amplitude, including the vacuum.
std::complex<double> heterodyne_sample(std::complex<double> amplitude, TrialStream &rng);
std::complex<double> heterodyne_sample(const CoherentState &s, TrialStream &rng);

/// Index of the M-point phase grid nearest to `phase`.
int nearest_grid_index(double phase, int M);

/// Monte Carlo acceptance for an Eve who heterodynes, rounds the outcome phase
/// to the M-state grid and resends; the acceptance of a trial is the squared
/// overlap between the true and estimated states.
Estimate heterodyne_pa(double alpha0, int M, uint64_t trials, uint64_t seed, Exec exec = Exec::parallel);

/// Smallest allowed Fock cutoff, ceil(alpha0^2 + 6 alpha0 + 20).
size_t min_truncation(double alpha0);

/// Canonical phase distribution of a coherent state on the reference phase,
/// p(t) = (1/2pi) |sum_{n<=N} e^{int} e^{-a^2/2} a^n / sqrt(n!)|^2, tabulated at
/// the cell midpoints of a uniform partition of [-pi, pi) for moments and
/// inverse-CDF sampling.
class PhaseDistribution {
   public:
    static constexpr size_t kGridPoints = size_t{1} << 16;

    PhaseDistribution(double alpha0, size_t truncation, Exec exec = Exec::parallel);

    double alpha0() const { return alpha0_; }
    size_t truncation() const { return coeffs_.size() - 1; }

    /// Direct evaluation at any phase.
    double density(double theta) const;
    /// Integral of the tabulated density over one period.
    double normalization() const;
    double mean() const;
    /// Second central moment of the phase on [-pi, pi).
    double variance() const;
    /// Inverse-CDF sample with linear interpolation inside grid cells.
    double sample(TrialStream &rng) const;

    const std::vector<double> &grid_density() const { return density_; }

   private:
    double alpha0_;
    std::vector<double> coeffs_;
    std::vector<double> density_;
    std::vector<double> cdf_;
};

/// Throws InvalidConfiguration when `truncation` < min_truncation(alpha0).
PhaseDistribution canonical_phase_density(double alpha0, size_t truncation, Exec exec = Exec::parallel);

/// As heterodyne_pa, with the phase estimate drawn from the canonical phase
/// distribution.
Estimate canonical_phase_pa(double alpha0, int M, size_t truncation, uint64_t trials, uint64_t seed,
                            Exec exec = Exec::parallel);
Estimate canonical_phase_pa(const PhaseDistribution &dist, int M, uint64_t trials, uint64_t seed,
                            Exec exec = Exec::parallel);

}  // namespace akq
