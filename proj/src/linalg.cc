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

#include "akq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "akq/errors.hpp"

namespace akq {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : dim_(rows.size()), data_() {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DimensionMismatch("CMatrix literal must be square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(size_t dim) {
    CMatrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

CMatrix CMatrix::diag(const std::vector<double> &values) {
    CMatrix m(values.size());
    for (size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

CMatrix CMatrix::outer(const std::vector<cplx> &v) {
    CMatrix m(v.size());
    for (size_t r = 0; r < v.size(); r++) {
        for (size_t c = 0; c < v.size(); c++) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

cplx CMatrix::trace() const {
    cplx t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double CMatrix::hermiticity_error() const {
    double worst = 0;
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = r; c < dim_; c++) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

std::vector<cplx> CMatrix::column(size_t c) const {
    std::vector<cplx> out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    if (other.dim_ != dim_) {
        throw DimensionMismatch("matrix sum of different dimensions");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    if (other.dim_ != dim_) {
        throw DimensionMismatch("matrix difference of different dimensions");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(cplx s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matrix product of different dimensions");
    }
    size_t n = a.dim();
    CMatrix m(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t k = 0; k < n; k++) {
            cplx ark = a(r, k);
            if (ark == cplx{}) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                m(r, c) += ark * b(k, c);
            }
        }
    }
    return m;
}

std::string CMatrix::str() const {
    std::stringstream ss;
    ss << "[";
    for (size_t r = 0; r < dim_; r++) {
        ss << (r ? ",\n [" : "[");
        for (size_t c = 0; c < dim_; c++) {
            ss << (c ? ", " : "") << (*this)(r, c);
        }
        ss << "]";
    }
    ss << "]";
    return ss.str();
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    size_t na = a.dim();
    size_t nb = b.dim();
    CMatrix m(na * nb);
    for (size_t r1 = 0; r1 < na; r1++) {
        for (size_t c1 = 0; c1 < na; c1++) {
            cplx s = a(r1, c1);
            for (size_t r2 = 0; r2 < nb; r2++) {
                for (size_t c2 = 0; c2 < nb; c2++) {
                    m(r1 * nb + r2, c1 * nb + c2) = s * b(r2, c2);
                }
            }
        }
    }
    return m;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("max_abs_diff of different dimensions");
    }
    double worst = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

double trace_product_real(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("trace product of different dimensions");
    }
    cplx t = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t k = 0; k < a.dim(); k++) {
            t += a(r, k) * b(k, r);
        }
    }
    return t.real();
}

CMatrix HermitianEigen::reconstruct() const {
    size_t n = values.size();
    CMatrix m(n);
    for (size_t k = 0; k < n; k++) {
        for (size_t r = 0; r < n; r++) {
            cplx vr = vectors(r, k) * values[k];
            for (size_t c = 0; c < n; c++) {
                m(r, c) += vr * std::conj(vectors(c, k));
            }
        }
    }
    return m;
}

namespace {

void sort_ascending(HermitianEigen &e) {
    size_t n = e.values.size();
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return e.values[a] < e.values[b]; });
    HermitianEigen sorted{std::vector<double>(n), CMatrix(n)};
    for (size_t k = 0; k < n; k++) {
        sorted.values[k] = e.values[idx[k]];
        for (size_t r = 0; r < n; r++) {
            sorted.vectors(r, k) = e.vectors(r, idx[k]);
        }
    }
    e = std::move(sorted);
}

}  // namespace

HermitianEigen eigh_2x2(const CMatrix &h) {
    if (h.dim() != 2) {
        throw DimensionMismatch("eigh_2x2 needs a 2x2 matrix");
    }
    double a = h(0, 0).real();
    double d = h(1, 1).real();
    cplx b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));
    double mean = 0.5 * (a + d);
    double half_gap = 0.5 * (a - d);
    double radius = std::hypot(half_gap, std::abs(b));

    HermitianEigen e{{mean - radius, mean + radius}, CMatrix(2)};
    // h - mean I = radius [[cos 2t, sin 2t e^{ip}], [sin 2t e^{-ip}, -cos 2t]].
    double t = 0.5 * std::atan2(std::abs(b), half_gap);
    cplx phase = std::abs(b) > 0 ? b / std::abs(b) : cplx(1);
    double ct = std::cos(t), st = std::sin(t);
    e.vectors(0, 0) = -phase * st;
    e.vectors(1, 0) = ct;
    e.vectors(0, 1) = ct;
    e.vectors(1, 1) = std::conj(phase) * st;
    return e;
}

HermitianEigen eigh_jacobi(const CMatrix &h, double tol) {
    size_t n = h.dim();
    CMatrix a = h;
    CMatrix v = CMatrix::identity(n);
    double scale = std::max(1.0, h.frobenius_norm());

    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0;
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                if (r != c) {
                    off += std::norm(a(r, c));
                }
            }
        }
        if (std::sqrt(off) < tol * scale) {
            break;
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                cplx apq = a(p, q);
                double mag = std::abs(apq);
                if (mag < 1e-300) {
                    continue;
                }
                // Phase-rotate (p,q) to a real entry, then an ordinary real
                // Jacobi rotation annihilates it.
                cplx phase_conj = std::conj(apq) / mag;
                double theta = (a(q, q).real() - a(p, p).real()) / (2 * mag);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double cs = 1 / std::sqrt(t * t + 1);
                double sn = t * cs;
                cplx jpp = cs, jpq = sn, jqp = -sn * phase_conj, jqq = cs * phase_conj;

                for (size_t k = 0; k < n; k++) {
                    cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                    cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
                for (size_t k = 0; k < n; k++) {
                    cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    HermitianEigen e{std::vector<double>(n), std::move(v)};
    for (size_t k = 0; k < n; k++) {
        e.values[k] = a(k, k).real();
    }
    sort_ascending(e);
    return e;
}

HermitianEigen eigh(const CMatrix &h) {
    if (h.dim() == 2) {
        return eigh_2x2(h);
    }
    return eigh_jacobi(h);
}

CMatrix hermitian_function(const CMatrix &h, const std::function<double(double)> &f) {
    HermitianEigen e = eigh(h);
    for (auto &lam : e.values) {
        lam = f(lam);
    }
    return e.reconstruct();
}

}  // namespace akq
