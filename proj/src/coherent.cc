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

#include "akq/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "akq/errors.hpp"

namespace akq {

namespace {

constexpr double kPi = std::numbers::pi;

void require_grid(int M) {
    if (M < 4) {
        throw InvalidConfiguration("coherent phase grid needs M >= 4, got " + std::to_string(M));
    }
}

void require_amplitude(double alpha0) {
    if (!(alpha0 > 0)) {
        throw InvalidConfiguration("coherent amplitude alpha0 must be positive");
    }
}

double grid_spacing() {
    return 2 * kPi / PhaseDistribution::kGridPoints;
}

/// Midpoint of cell k of [-pi, pi).
double grid_phase(size_t k) {
    return -kPi + grid_spacing() * (static_cast<double>(k) + 0.5);
}

}  // namespace

CoherentState::CoherentState(double alpha0_, double theta_) : alpha0(alpha0_), theta(theta_) {
    require_amplitude(alpha0);
}

std::complex<double> CoherentState::amplitude() const {
    return std::polar(alpha0, theta);
}

double coherent_overlap_mag(const CoherentState &a, const CoherentState &b) {
    if (std::abs(a.alpha0 - b.alpha0) > 1e-12) {
        throw InvalidConfiguration("coherent_overlap_mag needs equal amplitudes");
    }
    return std::exp(-a.alpha0 * a.alpha0 * (1 - std::cos(a.theta - b.theta)));
}

double coherent_acceptance(double alpha0, double dtheta) {
    return std::exp(-2 * alpha0 * alpha0 * (1 - std::cos(dtheta)));
}

double two_mode_overlap_mag(double alpha0, double theta1, double theta2) {
    // Product of two single-mode overlaps with real amplitudes.
    double dc = std::cos(theta1) - std::cos(theta2);
    double ds = std::sin(theta1) - std::sin(theta2);
    return std::exp(-alpha0 * alpha0 * (dc * dc + ds * ds) / 2);
}

std::complex<double> heterodyne_sample(std::complex<double> amplitude, TrialStream &rng) {
    double x = rng.normal() * std::sqrt(0.5);
    double y = rng.normal() * std::sqrt(0.5);
    return amplitude + std::complex<double>(x, y);
}

std::complex<double> heterodyne_sample(const CoherentState &s, TrialStream &rng) {
    return heterodyne_sample(s.amplitude(), rng);
}

int nearest_grid_index(double phase, int M) {
    double steps = std::nearbyint(phase * M / (2 * kPi));
    long long idx = static_cast<long long>(steps) % M;
    return static_cast<int>(idx < 0 ? idx + M : idx);
}

Estimate heterodyne_pa(double alpha0, int M, uint64_t trials, uint64_t seed, Exec exec) {
    require_amplitude(alpha0);
    require_grid(M);
    return monte_carlo(
        seed, trials,
        [alpha0, M](TrialStream &rng) {
            int truth = static_cast<int>(rng.below(M));
            double theta = 2 * kPi * truth / M;
            auto beta = heterodyne_sample(std::polar(alpha0, theta), rng);
            int est = nearest_grid_index(std::arg(beta), M);
            return coherent_acceptance(alpha0, 2 * kPi * (est - truth) / M);
        },
        exec);
}

size_t min_truncation(double alpha0) {
    return static_cast<size_t>(std::ceil(alpha0 * alpha0 + 6 * alpha0 + 20));
}

PhaseDistribution::PhaseDistribution(double alpha0, size_t truncation, Exec exec) : alpha0_(alpha0) {
    require_amplitude(alpha0);
    if (truncation < min_truncation(alpha0)) {
        throw InvalidConfiguration("Fock truncation " + std::to_string(truncation) + " is below the minimum " +
                                   std::to_string(min_truncation(alpha0)) + " for alpha0 = " + std::to_string(alpha0));
    }
    coeffs_.resize(truncation + 1);
    double log_alpha = std::log(alpha0);
    for (size_t n = 0; n <= truncation; n++) {
        double log_c = -alpha0 * alpha0 / 2 + n * log_alpha - 0.5 * std::lgamma(n + 1.0);
        coeffs_[n] = std::exp(log_c);
    }

    density_.resize(kGridPoints);
    fill_indexed(density_, [this](size_t k) { return density(grid_phase(k)); }, exec);

    // Cumulative mass at the left edge of each cell, with the cell mass
    // midpoint density * spacing.
    cdf_.resize(kGridPoints + 1);
    cdf_[0] = 0;
    for (size_t k = 0; k < kGridPoints; k++) {
        cdf_[k + 1] = cdf_[k] + density_[k] * grid_spacing();
    }
}

double PhaseDistribution::density(double theta) const {
    std::complex<double> step = std::polar(1.0, theta);
    std::complex<double> phase = 1;
    std::complex<double> sum = 0;
    for (double c : coeffs_) {
        sum += c * phase;
        phase *= step;
    }
    return std::norm(sum) / (2 * kPi);
}

double PhaseDistribution::normalization() const {
    return cdf_.back();
}

double PhaseDistribution::mean() const {
    double m = 0;
    for (size_t k = 0; k < kGridPoints; k++) {
        m += grid_phase(k) * density_[k];
    }
    return m * grid_spacing();
}

double PhaseDistribution::variance() const {
    double mu = mean();
    double v = 0;
    for (size_t k = 0; k < kGridPoints; k++) {
        double d = grid_phase(k) - mu;
        v += d * d * density_[k];
    }
    return v * grid_spacing();
}

double PhaseDistribution::sample(TrialStream &rng) const {
    double u = rng.uniform() * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    size_t cell = static_cast<size_t>(std::clamp<ptrdiff_t>(it - cdf_.begin() - 1, 0, kGridPoints - 1));
    double mass = cdf_[cell + 1] - cdf_[cell];
    double frac = mass > 0 ? (u - cdf_[cell]) / mass : 0.5;
    return grid_phase(cell) + (frac - 0.5) * grid_spacing();
}

PhaseDistribution canonical_phase_density(double alpha0, size_t truncation, Exec exec) {
    return PhaseDistribution(alpha0, truncation, exec);
}

Estimate canonical_phase_pa(const PhaseDistribution &dist, int M, uint64_t trials, uint64_t seed, Exec exec) {
    require_grid(M);
    double alpha0 = dist.alpha0();
    return monte_carlo(
        seed, trials,
        [&dist, alpha0, M](TrialStream &rng) {
            int truth = static_cast<int>(rng.below(M));
            double estimate_phase = 2 * kPi * truth / M + dist.sample(rng);
            int est = nearest_grid_index(estimate_phase, M);
            return coherent_acceptance(alpha0, 2 * kPi * (est - truth) / M);
        },
        exec);
}

Estimate canonical_phase_pa(double alpha0, int M, size_t truncation, uint64_t trials, uint64_t seed, Exec exec) {
    return canonical_phase_pa(PhaseDistribution(alpha0, truncation, exec), M, trials, seed, exec);
}

}  // namespace akq
