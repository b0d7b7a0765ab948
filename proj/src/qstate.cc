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

#include "akq/qstate.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "akq/errors.hpp"

namespace akq {

namespace {

constexpr double kPi = std::numbers::pi;

const CMatrix &pauli(int k) {
    static const CMatrix s1{{0, 1}, {1, 0}};
    static const CMatrix s2{{0, cplx(0, -1)}, {cplx(0, 1), 0}};
    static const CMatrix s3{{1, 0}, {0, -1}};
    switch (k) {
        case 1:
            return s1;
        case 2:
            return s2;
        default:
            return s3;
    }
}

CMatrix bloch_matrix(const BlochVector &r) {
    return CMatrix{{0.5 * (1 + r.r3), 0.5 * cplx(r.r1, -r.r2)}, {0.5 * cplx(r.r1, r.r2), 0.5 * (1 - r.r3)}};
}

}  // namespace

double BlochVector::norm() const {
    return std::sqrt(dot(*this));
}

std::string density_violation(const CMatrix &m, double tol) {
    std::stringstream ss;
    if (m.dim() == 0) {
        return "empty matrix";
    }
    if (double h = m.hermiticity_error(); h > tol) {
        ss << "not Hermitian (max deviation " << h << ")";
        return ss.str();
    }
    if (cplx t = m.trace(); std::abs(t - 1.0) > tol) {
        ss << "trace " << t << " != 1";
        return ss.str();
    }
    auto e = eigh(m);
    if (e.values.front() < -tol) {
        ss << "negative eigenvalue " << e.values.front();
        return ss.str();
    }
    return {};
}

DensityOperator DensityOperator::from_matrix(CMatrix m) {
    if (auto why = density_violation(m); !why.empty()) {
        throw InvalidState("not a density operator: " + why);
    }
    return DensityOperator(std::move(m));
}

BlochVector DensityOperator::bloch() const {
    if (dim() != 2) {
        throw DimensionMismatch("Bloch vector is only defined for qubits");
    }
    return {trace_product_real(m_, pauli(1)), trace_product_real(m_, pauli(2)), trace_product_real(m_, pauli(3))};
}

double DensityOperator::purity() const {
    return trace_product_real(m_, m_);
}

void require_circle_size(int M) {
    if (M <= 0 || M % 4 != 0) {
        throw InvalidConfiguration("circle size M must be a positive multiple of 4, got " + std::to_string(M));
    }
}

CircleIndex::CircleIndex(long long ell, int M) : ell_(0), M_(M) {
    require_circle_size(M);
    long long r = ell % M;
    ell_ = static_cast<int>(r < 0 ? r + M : r);
}

Ensemble::Ensemble(std::vector<DensityOperator> states, std::vector<double> priors)
    : states_(std::move(states)), priors_(std::move(priors)) {
    if (states_.empty()) {
        throw InvalidConfiguration("ensemble needs at least one state");
    }
    if (states_.size() != priors_.size()) {
        throw DimensionMismatch("ensemble has different numbers of states and priors");
    }
    double total = 0;
    for (size_t k = 0; k < states_.size(); k++) {
        if (states_[k].dim() != states_[0].dim()) {
            throw DimensionMismatch("ensemble states differ in dimension");
        }
        if (priors_[k] < 0) {
            throw InvalidConfiguration("negative prior probability");
        }
        total += priors_[k];
    }
    if (std::abs(total - 1) > kStateTol) {
        throw InvalidConfiguration("priors sum to " + std::to_string(total) + ", not 1");
    }
}

Ensemble Ensemble::uniform(std::vector<DensityOperator> states) {
    std::vector<double> priors(states.size(), states.empty() ? 0.0 : 1.0 / states.size());
    return Ensemble(std::move(states), std::move(priors));
}

DensityOperator bloch_to_density(const BlochVector &r) {
    if (r.norm() > 1 + kStateTol) {
        std::stringstream ss;
        ss << "Bloch vector (" << r.r1 << ", " << r.r2 << ", " << r.r3 << ") has norm " << r.norm() << " > 1";
        throw InvalidBlochVector(ss.str());
    }
    return DensityOperator::unchecked(bloch_matrix(r));
}

DensityOperator circle_state_at(double angle) {
    return DensityOperator::unchecked(bloch_matrix({std::cos(angle), 0, std::sin(angle)}));
}

DensityOperator circle_state(const CircleIndex &idx) {
    return circle_state_at(idx.angle());
}

DensityOperator sphere_state(double theta, double phi) {
    return DensityOperator::unchecked(
        bloch_matrix({std::sin(theta) * std::cos(phi), std::cos(theta), std::sin(theta) * std::sin(phi)}));
}

CMatrix circle_rotation(double angle) {
    // exp(+i angle sigma_2 / 2); real in this basis.
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    return CMatrix{{c, s}, {-s, c}};
}

DensityOperator rotate_circle(const DensityOperator &state, double angle) {
    if (state.dim() != 2) {
        throw DimensionMismatch("rotate_circle acts on qubits");
    }
    CMatrix u = circle_rotation(angle);
    return DensityOperator::unchecked(u * state.matrix() * u.adjoint());
}

double overlap(const DensityOperator &rho, const DensityOperator &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw DimensionMismatch("overlap of states with different dimensions");
    }
    return trace_product_real(rho.matrix(), sigma.matrix());
}

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b) {
    return DensityOperator::unchecked(kron(a.matrix(), b.matrix()));
}

DensityOperator ensemble_mixture(const Ensemble &e) {
    CMatrix sum(e.dim());
    for (size_t k = 0; k < e.size(); k++) {
        sum += e.state(k).matrix() * e.prior(k);
    }
    return DensityOperator::unchecked(std::move(sum));
}

DensityOperator partial_trace(const DensityOperator &rho, size_t dim_a, size_t dim_b, int keep) {
    if (rho.dim() != dim_a * dim_b) {
        throw DimensionMismatch("partial_trace factor dimensions do not match the state");
    }
    size_t out_dim = keep == 0 ? dim_a : dim_b;
    CMatrix out(out_dim);
    const CMatrix &m = rho.matrix();
    for (size_t a1 = 0; a1 < dim_a; a1++) {
        for (size_t a2 = 0; a2 < dim_a; a2++) {
            for (size_t b1 = 0; b1 < dim_b; b1++) {
                for (size_t b2 = 0; b2 < dim_b; b2++) {
                    cplx v = m(a1 * dim_b + b1, a2 * dim_b + b2);
                    if (keep == 0 && b1 == b2) {
                        out(a1, a2) += v;
                    } else if (keep == 1 && a1 == a2) {
                        out(b1, b2) += v;
                    }
                }
            }
        }
    }
    return DensityOperator::unchecked(std::move(out));
}

double modulation_angle(int bit) {
    return bit ? -kPi / 2 : kPi / 2;
}

DensityOperator modulate(const DensityOperator &state, int bit) {
    return rotate_circle(state, modulation_angle(bit));
}

int modulation_shift(int bit, int M) {
    return bit ? -M / 4 : M / 4;
}

Ensemble circle_ensemble(int M) {
    require_circle_size(M);
    std::vector<DensityOperator> states;
    states.reserve(M);
    for (int ell = 0; ell < M; ell++) {
        states.push_back(circle_state(CircleIndex(ell, M)));
    }
    return Ensemble::uniform(std::move(states));
}

Ensemble six_state_ensemble() {
    std::vector<DensityOperator> states;
    for (BlochVector r : {BlochVector{1, 0, 0}, BlochVector{-1, 0, 0}, BlochVector{0, 1, 0}, BlochVector{0, -1, 0},
                          BlochVector{0, 0, 1}, BlochVector{0, 0, -1}}) {
        states.push_back(bloch_to_density(r));
    }
    return Ensemble::uniform(std::move(states));
}

Ensemble sphere_grid_ensemble(int N) {
    if (N < 2) {
        throw InvalidConfiguration("sphere grid needs at least 2 points");
    }
    if (N == 6) {
        return six_state_ensemble();
    }
    std::vector<DensityOperator> states;
    states.reserve(N);
    double golden = kPi * (3 - std::sqrt(5.0));
    for (int k = 0; k < N; k++) {
        double z = 1 - (2.0 * k + 1) / N;
        double rho = std::sqrt(std::max(0.0, 1 - z * z));
        double az = golden * k;
        states.push_back(bloch_to_density({rho * std::cos(az), rho * std::sin(az), z}));
    }
    return Ensemble::uniform(std::move(states));
}

}  // namespace akq
