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
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace akq {

using cplx = std::complex<double>;

/// Small dense square complex matrix, row-major. Dimensions in this library
/// never exceed 16, so everything is plain O(n^3) loops.
class CMatrix {
   public:
    CMatrix() = default;
    explicit CMatrix(size_t dim) : dim_(dim), data_(dim * dim) {}
    CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMatrix identity(size_t dim);
    static CMatrix diag(const std::vector<double> &values);
    /// |v><v| for a column vector v.
    static CMatrix outer(const std::vector<cplx> &v);

    size_t dim() const { return dim_; }
    cplx &operator()(size_t r, size_t c) { return data_[r * dim_ + c]; }
    const cplx &operator()(size_t r, size_t c) const { return data_[r * dim_ + c]; }

    CMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    /// Largest |a_rc - conj(a_cr)|.
    double hermiticity_error() const;
    std::vector<cplx> column(size_t c) const;

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(cplx s);

    friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);

    std::string str() const;

   private:
    size_t dim_ = 0;
    std::vector<cplx> data_;
};

/// Kronecker product a (x) b.
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Largest entrywise |a - b|.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// Re tr(a b) without forming the product.
double trace_product_real(const CMatrix &a, const CMatrix &b);

/// Eigenvalues ascending; `vectors` holds the matching orthonormal
/// eigenvectors as columns, so H = V diag(values) V^dagger.
struct HermitianEigen {
    std::vector<double> values;
    CMatrix vectors;

    CMatrix reconstruct() const;
};

HermitianEigen eigh_2x2(const CMatrix &h);
HermitianEigen eigh_jacobi(const CMatrix &h, double tol = 1e-12);
/// 2x2 goes through the closed form, everything else through Jacobi.
HermitianEigen eigh(const CMatrix &h);

/// f(H) = V f(Lambda) V^dagger for Hermitian H.
CMatrix hermitian_function(const CMatrix &h, const std::function<double(double)> &f);

}  // namespace akq
