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

#include "akq/detection.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "akq/errors.hpp"

namespace akq {

namespace {

constexpr double kElementTol = 1e-9;
constexpr double kCompletenessTol = 1e-8;
constexpr double kZeroEigen = 1e-12;

void require_matching(const Ensemble &e, const Povm &m) {
    if (e.size() != m.size()) {
        throw DimensionMismatch("ensemble has " + std::to_string(e.size()) + " states but POVM has " +
                                std::to_string(m.size()) + " elements");
    }
    if (e.dim() != m.dim()) {
        throw DimensionMismatch("ensemble and POVM act on different dimensions");
    }
}

CMatrix hermitian_part(const CMatrix &a) {
    return (a + a.adjoint()) * cplx(0.5);
}

}  // namespace

std::string povm_violation(const std::vector<CMatrix> &elements) {
    if (elements.empty()) {
        return "no elements";
    }
    size_t dim = elements.front().dim();
    CMatrix sum(dim);
    for (size_t k = 0; k < elements.size(); k++) {
        const auto &el = elements[k];
        if (el.dim() != dim) {
            return "element " + std::to_string(k) + " has a different dimension";
        }
        if (el.hermiticity_error() > kElementTol) {
            return "element " + std::to_string(k) + " is not Hermitian";
        }
        if (double low = eigh(el).values.front(); low < -kElementTol) {
            std::stringstream ss;
            ss << "element " << k << " has negative eigenvalue " << low;
            return ss.str();
        }
        sum += el;
    }
    if (double d = max_abs_diff(sum, CMatrix::identity(dim)); d > kCompletenessTol) {
        std::stringstream ss;
        ss << "elements sum to identity only within " << d;
        return ss.str();
    }
    return {};
}

Povm::Povm(std::vector<CMatrix> elements) : elements_(std::move(elements)) {
    if (auto why = povm_violation(elements_); !why.empty()) {
        throw InvalidState("invalid POVM: " + why);
    }
}

Povm Povm::unchecked(std::vector<CMatrix> elements) {
    Povm m;
    m.elements_ = std::move(elements);
    return m;
}

std::vector<double> Povm::probabilities(const DensityOperator &rho) const {
    if (rho.dim() != dim()) {
        throw DimensionMismatch("POVM and state act on different dimensions");
    }
    std::vector<double> p(size());
    for (size_t k = 0; k < size(); k++) {
        p[k] = trace_product_real(elements_[k], rho.matrix());
    }
    return p;
}

size_t Povm::sample(const DensityOperator &rho, TrialStream &rng) const {
    auto p = probabilities(rho);
    double u = rng.uniform();
    double acc = 0;
    for (size_t k = 0; k + 1 < p.size(); k++) {
        acc += p[k];
        if (u < acc) {
            return k;
        }
    }
    return p.size() - 1;
}

Povm square_root_measurement(const Ensemble &e) {
    CMatrix s = ensemble_mixture(e).matrix();
    HermitianEigen eig = eigh(s);
    if (eig.values.back() < kZeroEigen) {
        throw InvalidState("square-root measurement of an ensemble whose mixture has rank 0");
    }
    size_t dim = s.dim();
    std::vector<double> inv_sqrt(dim);
    std::vector<double> kernel(dim);
    size_t rank = 0;
    for (size_t k = 0; k < dim; k++) {
        if (eig.values[k] > kZeroEigen) {
            inv_sqrt[k] = 1 / std::sqrt(eig.values[k]);
            rank++;
        } else {
            kernel[k] = 1;
        }
    }
    HermitianEigen s_inv_sqrt{inv_sqrt, eig.vectors};
    CMatrix t = s_inv_sqrt.reconstruct();

    std::vector<CMatrix> elements;
    elements.reserve(e.size());
    for (size_t i = 0; i < e.size(); i++) {
        elements.push_back(t * e.state(i).matrix() * t * e.prior(i));
    }
    if (rank < dim) {
        CMatrix share = HermitianEigen{kernel, eig.vectors}.reconstruct() * (1.0 / e.size());
        for (auto &el : elements) {
            el += share;
        }
    }
    return Povm::unchecked(std::move(elements));
}

double correct_id_probability(const Ensemble &e, const Povm &m) {
    require_matching(e, m);
    double pc = 0;
    for (size_t i = 0; i < e.size(); i++) {
        pc += e.prior(i) * trace_product_real(m.element(i), e.state(i).matrix());
    }
    return pc;
}

double acceptance_probability(const Ensemble &e, const Povm &m) {
    require_matching(e, m);
    double pa = 0;
    for (size_t l = 0; l < e.size(); l++) {
        const auto &rho = e.state(l).matrix();
        for (size_t lp = 0; lp < e.size(); lp++) {
            double p_est = trace_product_real(m.element(lp), rho);
            pa += e.prior(l) * p_est * trace_product_real(rho, e.state(lp).matrix());
        }
    }
    return pa;
}

HelstromResult helstrom_binary(const DensityOperator &rho0, const DensityOperator &rho1, double p0) {
    if (rho0.dim() != rho1.dim()) {
        throw DimensionMismatch("helstrom_binary needs states of equal dimension");
    }
    if (!(p0 >= 0 && p0 <= 1)) {
        throw InvalidConfiguration("helstrom_binary prior must lie in [0, 1]");
    }
    CMatrix gamma = rho0.matrix() * cplx(p0) - rho1.matrix() * cplx(1 - p0);
    HermitianEigen eig = eigh(gamma);
    size_t dim = gamma.dim();
    std::vector<double> positive(dim);
    for (size_t k = 0; k < dim; k++) {
        positive[k] = eig.values[k] > kZeroEigen ? 1 : 0;
    }
    CMatrix pi0 = HermitianEigen{positive, eig.vectors}.reconstruct();
    CMatrix pi1 = CMatrix::identity(dim) - pi0;
    double pc = p0 * trace_product_real(pi0, rho0.matrix()) + (1 - p0) * trace_product_real(pi1, rho1.matrix());
    return {Povm::unchecked({pi0, pi1}), pc};
}

bool certify_optimality(const Ensemble &e, const Povm &m, double tol) {
    require_matching(e, m);
    CMatrix upsilon(e.dim());
    for (size_t j = 0; j < e.size(); j++) {
        upsilon += e.state(j).matrix() * m.element(j) * e.prior(j);
    }
    if (upsilon.hermiticity_error() > tol) {
        return false;
    }
    CMatrix herm = hermitian_part(upsilon);
    for (size_t j = 0; j < e.size(); j++) {
        CMatrix gap = herm - e.state(j).matrix() * e.prior(j);
        if (eigh(gap).values.front() < -tol) {
            return false;
        }
    }
    return true;
}

DetectionReport analyze_ensemble(const Ensemble &e) {
    Povm srm = square_root_measurement(e);
    DetectionReport r{correct_id_probability(e, srm), acceptance_probability(e, srm), srm, false};
    r.certified_optimal = certify_optimality(e, r.povm);
    return r;
}

Povm guessing_povm(size_t outcomes, size_t dim) {
    if (outcomes == 0) {
        throw InvalidConfiguration("guessing POVM needs at least one outcome");
    }
    return Povm::unchecked(std::vector<CMatrix>(outcomes, CMatrix::identity(dim) * (1.0 / outcomes)));
}

Povm rotated_circle_srm(int M, double offset) {
    require_circle_size(M);
    std::vector<CMatrix> elements;
    elements.reserve(M);
    for (int l = 0; l < M; l++) {
        double angle = 2 * std::numbers::pi * l / M + offset;
        elements.push_back(circle_state_at(angle).matrix() * (2.0 / M));
    }
    return Povm::unchecked(std::move(elements));
}

RotationScan scan_rotated_srm(int M, int steps) {
    if (steps < 1) {
        throw InvalidConfiguration("scan_rotated_srm needs steps >= 1");
    }
    Ensemble e = circle_ensemble(M);
    RotationScan scan;
    scan.srm_pa = acceptance_probability(e, square_root_measurement(e));
    scan.best_pa = -1;
    for (int s = 0; s < steps; s++) {
        double offset = 2 * std::numbers::pi * s / steps;
        double pa = acceptance_probability(e, rotated_circle_srm(M, offset));
        if (pa > scan.best_pa) {
            scan.best_pa = pa;
            scan.best_offset = offset;
        }
    }
    return scan;
}

Estimate random_basis_strategy(int M, uint64_t seed, uint64_t trials, Exec exec) {
    require_circle_size(M);
    return monte_carlo(
        seed, trials,
        [M](TrialStream &rng) {
            CircleIndex truth(static_cast<long long>(rng.below(M)), M);
            CircleIndex basis(static_cast<long long>(rng.below(M)), M);
            DensityOperator sent = circle_state(truth);
            bool first = rng.bernoulli(overlap(sent, circle_state(basis)));
            CircleIndex reported = first ? basis : basis.shifted(M / 2);
            return rng.bernoulli(overlap(sent, circle_state(reported))) ? 1.0 : 0.0;
        },
        exec);
}

}  // namespace akq
