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

#include <cmath>
#include <numbers>

#include "akq/errors.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace akq;
using akq_test::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

/// Poisson(alpha^2) mass above n, summed term by term in log space.
double poisson_tail(double alpha, size_t n) {
    double lambda = alpha * alpha;
    double tail = 0;
    for (size_t k = n + 1; k < n + 2000; k++) {
        tail += std::exp(-lambda + k * std::log(lambda) - std::lgamma(k + 1.0));
    }
    return tail;
}

}  // namespace

TEST(coherent_overlap_mag, examples) {
    EXPECT_NEAR(coherent_overlap_mag({2, 0.4}, {2, 0.4}), 1, 1e-15);
    EXPECT_NEAR(coherent_overlap_mag({1, 0}, {1, kPi}), std::exp(-2.0), 1e-15);
    EXPECT_NEAR(coherent_overlap_mag({1, 0}, {1, kPi}), 0.1353, 1e-4);
    EXPECT_NEAR(coherent_overlap_mag({3, 0}, {3, kPi}), std::exp(-18.0), 1e-20);
    EXPECT_NEAR(coherent_overlap_mag({3, 0}, {3, kPi}), 1.5e-8, 1e-9);
    EXPECT_THROW(coherent_overlap_mag({1, 0}, {2, 0}), InvalidConfiguration);
    EXPECT_THROW(CoherentState(0, 0), InvalidConfiguration);
    EXPECT_THROW(CoherentState(-1, 0), InvalidConfiguration);
}

TEST(coherent_overlap_mag, phase_covariance) {
    for (int rep = 0; rep < 1000; rep++) {
        double a = uniform(0.1, 5);
        double t1 = uniform(-10, 10), t2 = uniform(-10, 10), shift = uniform(-10, 10);
        double base = coherent_overlap_mag({a, t1}, {a, t2});
        EXPECT_NEAR(coherent_overlap_mag({a, t1 + shift}, {a, t2 + shift}), base, 1e-12);
        // Squared magnitude from the Fock expansion: exp(-|a1 - a2|^2).
        double d2 = std::norm(std::polar(a, t1) - std::polar(a, t2));
        EXPECT_NEAR(base, std::exp(-d2 / 2), 1e-12);
        EXPECT_NEAR(coherent_acceptance(a, t1 - t2), base * base, 1e-12);
    }
}

TEST(two_mode_overlap_mag, same_as_single_mode) {
    EXPECT_NEAR(two_mode_overlap_mag(1.5, 0.3, 0.3), 1, 1e-15);
    EXPECT_NEAR(two_mode_overlap_mag(1, 0, kPi), std::exp(-2.0), 1e-15);
    for (int rep = 0; rep < 100; rep++) {
        double a = uniform(0.1, 6);
        double t1 = uniform(-7, 7), t2 = uniform(-7, 7);
        EXPECT_NEAR(two_mode_overlap_mag(a, t1, t2), coherent_overlap_mag({a, t1}, {a, t2}), 1e-12);
    }
}

TEST(heterodyne_sample, gaussian_statistics) {
    const int n = 1000000;
    CoherentState s(2.5, 0.8);
    TrialStream rng(10, 0);
    std::complex<double> sum = 0;
    double sxx = 0, syy = 0;
    std::vector<std::complex<double>> draws(n);
    for (auto &d : draws) {
        d = heterodyne_sample(s, rng);
        sum += d;
    }
    std::complex<double> mean = sum / double(n);
    for (auto &d : draws) {
        sxx += std::pow(d.real() - mean.real(), 2);
        syy += std::pow(d.imag() - mean.imag(), 2);
    }
    double sigma = std::sqrt(0.5);
    EXPECT_NEAR(mean.real(), s.amplitude().real(), 3 * sigma / std::sqrt(n));
    EXPECT_NEAR(mean.imag(), s.amplitude().imag(), 3 * sigma / std::sqrt(n));
    EXPECT_NEAR(sxx / n, 0.5, 0.01);
    EXPECT_NEAR(syy / n, 0.5, 0.01);
}

TEST(heterodyne_sample, vacuum) {
    TrialStream rng(11, 0);
    const int n = 200000;
    std::complex<double> sum = 0;
    double r2 = 0;
    for (int k = 0; k < n; k++) {
        auto b = heterodyne_sample(std::complex<double>(0, 0), rng);
        sum += b;
        r2 += std::norm(b);
    }
    EXPECT_NEAR(std::abs(sum / double(n)), 0, 5 / std::sqrt(n));
    EXPECT_NEAR(r2 / n, 1, 0.01);
}

TEST(nearest_grid_index, rounding) {
    EXPECT_EQ(nearest_grid_index(0, 8), 0);
    EXPECT_EQ(nearest_grid_index(2 * kPi / 8 * 0.49, 8), 0);
    EXPECT_EQ(nearest_grid_index(2 * kPi / 8 * 0.51, 8), 1);
    EXPECT_EQ(nearest_grid_index(-2 * kPi / 8, 8), 7);
    EXPECT_EQ(nearest_grid_index(kPi, 4), 2);
    EXPECT_EQ(nearest_grid_index(-kPi * 0.99, 4), 2);
    EXPECT_EQ(nearest_grid_index(2 * kPi, 16), 0);
}

TEST(heterodyne_pa, amplitude_independence) {
    Estimate a = heterodyne_pa(5, 4096, 100000, 1);
    Estimate b = heterodyne_pa(20, 4096, 100000, 2);
    EXPECT_LT(std::abs(a.mean - b.mean), 0.02);
    EXPECT_GT(a.std_error, 0);
}

TEST(heterodyne_pa, large_separation_limit) {
    EXPECT_GT(heterodyne_pa(10, 4, 100000, 3).mean, 0.999);
    EXPECT_THROW(heterodyne_pa(10, 4, 0, 3), InvalidConfiguration);
    EXPECT_THROW(heterodyne_pa(10, 2, 10, 3), InvalidConfiguration);
}

TEST(heterodyne_pa, large_grid_value) {
    // Phase error ~ N(0, 1/(2 a^2)) and acceptance ~ exp(-a^2 d^2) average to
    // 1/sqrt(2) for large a and M.
    Estimate e = heterodyne_pa(20, 4096, 100000, 4);
    EXPECT_NEAR(e.mean, 1 / std::sqrt(2.0), 4 * e.std_error + 0.002);
}

TEST(heterodyne_pa, non_increasing_in_grid_size) {
    for (double alpha : {5.0, 10.0, 20.0}) {
        Estimate prev = heterodyne_pa(alpha, 4, 100000, 5);
        for (int M : {64, 1024, 4096}) {
            Estimate cur = heterodyne_pa(alpha, M, 100000, 5);
            double slack = 3 * std::hypot(prev.std_error, cur.std_error);
            EXPECT_LE(cur.mean, prev.mean + slack) << "alpha0=" << alpha << " M=" << M;
            prev = cur;
        }
    }
}

TEST(phase_distribution, truncation_rule) {
    EXPECT_EQ(min_truncation(2), static_cast<size_t>(std::ceil(4 + 12 + 20.0)));
    EXPECT_THROW(canonical_phase_density(5, min_truncation(5) - 1), InvalidConfiguration);
    for (double a : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        EXPECT_LT(poisson_tail(a, min_truncation(a)), 1e-10) << a;
    }
}

TEST(phase_distribution, normalized_and_centred) {
    for (double a : {2.0, 4.0, 8.0, 16.0}) {
        PhaseDistribution d = canonical_phase_density(a, min_truncation(a));
        EXPECT_NEAR(d.normalization(), 1, 1e-6) << a;
        EXPECT_NEAR(d.mean(), 0, 1e-9);
        double peak = d.density(0);
        for (double t : {0.01, 0.1, 0.5, 1.0, 3.0, -0.2}) {
            EXPECT_LT(d.density(t), peak);
            EXPECT_NEAR(d.density(t), d.density(-t), 1e-12 * peak);
        }
    }
}

TEST(phase_distribution, direct_density_matches_fock_sum) {
    // Fock amplitudes built by recurrence, independent of the log-space path.
    double a = 3;
    size_t n = min_truncation(a);
    PhaseDistribution d(a, n);
    for (double t : {0.0, 0.3, -1.1, 2.5}) {
        std::complex<double> sum = 0;
        double c = std::exp(-a * a / 2);
        for (size_t k = 0; k <= n; k++) {
            if (k > 0) {
                c *= a / std::sqrt(double(k));
            }
            sum += c * std::polar(1.0, k * t);
        }
        EXPECT_NEAR(d.density(t), std::norm(sum) / (2 * kPi), 1e-12);
    }
}

TEST(phase_distribution, variance_ratios) {
    std::vector<double> var;
    for (double a : {2.0, 4.0, 8.0}) {
        var.push_back(canonical_phase_density(a, min_truncation(a)).variance());
    }
    EXPECT_NEAR(var[0] / var[1], 4, 0.4);
    EXPECT_NEAR(var[1] / var[2], 4, 0.4);
}

TEST(phase_distribution, large_amplitude_variance) {
    // The phase of a bright coherent state has variance close to 1/(4 a^2).
    for (double a : {8.0, 16.0}) {
        double v = canonical_phase_density(a, min_truncation(a)).variance();
        EXPECT_NEAR(v * a * a, 0.25, 0.01) << a;
    }
}

TEST(phase_distribution, sampling_matches_moments) {
    PhaseDistribution d(4, min_truncation(4));
    TrialStream rng(7, 7);
    const int n = 200000;
    double s = 0, s2 = 0;
    for (int k = 0; k < n; k++) {
        double x = d.sample(rng);
        ASSERT_GE(x, -kPi);
        ASSERT_LE(x, kPi);
        s += x;
        s2 += x * x;
    }
    EXPECT_NEAR(s / n, 0, 5 * std::sqrt(d.variance() / n));
    EXPECT_NEAR(s2 / n, d.variance(), 0.05 * d.variance());
}

TEST(canonical_phase_pa, sharper_than_heterodyne) {
    for (double a : {5.0, 10.0}) {
        Estimate c = canonical_phase_pa(a, 4096, min_truncation(a), 100000, 8);
        Estimate h = heterodyne_pa(a, 4096, 100000, 8);
        EXPECT_GT(c.mean, h.mean + 3 * std::hypot(c.std_error, h.std_error));
    }
}

TEST(canonical_phase_pa, small_grid_limit) {
    EXPECT_GT(canonical_phase_pa(10, 4, min_truncation(10), 100000, 9).mean, 0.999);
    EXPECT_THROW(canonical_phase_pa(10, 4, 5, 100, 9), InvalidConfiguration);
}

TEST(canonical_phase_pa, large_grid_value) {
    // Phase error ~ N(0, 1/(4 a^2)) gives 1/sqrt(1.5) for large a and M.
    Estimate e = canonical_phase_pa(16, 4096, min_truncation(16), 100000, 10);
    EXPECT_NEAR(e.mean, 1 / std::sqrt(1.5), 4 * e.std_error + 0.002);
}
