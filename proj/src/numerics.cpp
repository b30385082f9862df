// SPDX-License-Identifier: Apache-2.0
//
// fdmimo - full-duplex large-scale MIMO self-interference cancellation simulator
// Copyright (C) 2026 The fdmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "fdmimo/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fdmimo/errors.hpp"

namespace fdmimo {

ComplexMatrix sample_complex_gaussian(Eigen::Index rows, Eigen::Index cols, double variance, RngStream& rng)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("sample_complex_gaussian: negative dimension");
    if (!(variance >= 0.0) || !std::isfinite(variance))
        throw std::invalid_argument("sample_complex_gaussian: variance must be finite and >= 0, got " +
                                    std::to_string(variance));

    ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
    if (variance == 0.0)
        return out;

    const double sd = std::sqrt(variance / 2.0);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) {
            const double re = rng.standard_normal();
            const double im = rng.standard_normal();
            out(r, c) = Complex(sd * re, sd * im);
        }
    return out;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& a)
{
    if (a.rows() != a.cols() || a.rows() == 0)
        throw std::invalid_argument("hermitian_sqrt: input must be a non-empty square matrix");
    if (!a.allFinite())
        throw NumericalError("hermitian_sqrt: input has non-finite entries");

    const double scale = a.norm();
    if (scale == 0.0)
        return ComplexMatrix::Zero(a.rows(), a.cols());
    if ((a - a.adjoint()).norm() > 1e-10 * scale)
        throw std::invalid_argument("hermitian_sqrt: input is not Hermitian");

    const ComplexMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
    if (es.info() != Eigen::Success)
        throw NumericalError("hermitian_sqrt: eigen-decomposition did not converge");

    RealVector lambda = es.eigenvalues();
    const double lmax = lambda.maxCoeff();
    const double lmin = lambda.minCoeff();
    if (lmin < -1e-8 * std::max(lmax, 0.0))
        throw NumericalError("hermitian_sqrt: matrix is indefinite (smallest eigenvalue " + std::to_string(lmin) +
                             ", largest " + std::to_string(lmax) + ")");

    lambda = lambda.cwiseMax(0.0).cwiseSqrt();
    const ComplexMatrix& v = es.eigenvectors();
    return v * lambda.cast<Complex>().asDiagonal() * v.adjoint();
}

namespace {

// A^H (A A^H)^-1 via A^H P = Q R. With R_r the leading r x r block,
// A A^H = P R_r^H R_r P^T and the pseudo-inverse reduces to Q_thin R_r^-H P^T.
ComplexMatrix right_pinv_impl(const ComplexMatrix& a, const char* op, const char* gram)
{
    const Eigen::Index r = a.rows();
    const Eigen::Index c = a.cols();
    if (r == 0 || c == 0)
        throw std::invalid_argument(std::string(op) + ": empty matrix");
    if (!a.allFinite())
        throw NumericalError(std::string(op) + ": input has non-finite entries");
    if (r > c)
        throw SingularMatrixError(std::string(op) + ": Gram matrix " + gram + " is rank deficient (" +
                                  std::to_string(r) + "x" + std::to_string(c) + " input)");

    Eigen::ColPivHouseholderQR<ComplexMatrix> qr(a.adjoint());
    const ComplexMatrix& packed = qr.matrixQR();

    // Column pivoting makes |R_ii| non-increasing, so the ratio of the end
    // points is a rank-revealing estimate of cond(R); cond(Gram) = cond(R)^2.
    const double rmax = std::abs(packed(0, 0));
    const double rmin = std::abs(packed(r - 1, r - 1));
    const double cond = rmin > 0.0 ? (rmax / rmin) * (rmax / rmin) : INFINITY;
    if (!(cond < kMaxGramCondition))
        throw SingularMatrixError(std::string(op) + ": Gram matrix " + gram +
                                  " is singular or ill-conditioned (condition estimate " + std::to_string(cond) + ")");

    const ComplexMatrix rinv_h = packed.topLeftCorner(r, r)
                                     .triangularView<Eigen::Upper>()
                                     .adjoint()
                                     .solve(ComplexMatrix::Identity(r, r));

    ComplexMatrix out = ComplexMatrix::Zero(c, r);
    out.topRows(r) = rinv_h * qr.colsPermutation().transpose();
    out.applyOnTheLeft(qr.householderQ());
    return out;
}

} // namespace

ComplexMatrix right_pseudo_inverse(const ComplexMatrix& a)
{
    return right_pinv_impl(a, "right_pseudo_inverse", "A*A^H");
}

ComplexMatrix left_pseudo_inverse(const ComplexMatrix& a)
{
    return right_pinv_impl(a.adjoint(), "left_pseudo_inverse", "A^H*A").adjoint();
}

double bessel_j0(double x)
{
    // J0 is even; the standard library only accepts non-negative arguments.
    return std::cyl_bessel_j(0.0, std::abs(x));
}

double relative_frobenius_error(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("relative_frobenius_error: shape mismatch");
    const double diff = (a - b).norm();
    const double ref = b.norm();
    return ref > 0.0 ? diff / ref : diff;
}

} // namespace fdmimo
