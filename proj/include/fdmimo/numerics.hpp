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
#pragma once

#include <Eigen/Dense>

#include <complex>

#include "fdmimo/rng.hpp"

namespace fdmimo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Circularly-symmetric complex Gaussian matrix, zero mean, per-entry
/// variance `variance` (real and imaginary parts each variance/2). Entries
/// are drawn in row-major order so the draw sequence does not depend on
/// the storage layout.
ComplexMatrix sample_complex_gaussian(Eigen::Index rows, Eigen::Index cols, double variance, RngStream& rng);

/// Principal square root S of a Hermitian PSD matrix (S*S = a, S Hermitian).
/// Eigenvalues in [-1e-8*lambda_max, 0) are treated as round-off and clamped.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& a);

/// A^H (A A^H)^-1 for a full-row-rank A, via column-pivoted QR of A^H.
/// Throws SingularMatrixError when the Gram matrix A A^H has an estimated
/// condition number of 1e12 or more.
ComplexMatrix right_pseudo_inverse(const ComplexMatrix& a);

/// (A^H A)^-1 A^H for a full-column-rank A.
ComplexMatrix left_pseudo_inverse(const ComplexMatrix& a);

/// Zero-order Bessel function of the first kind.
double bessel_j0(double x);

/// ||a - b||_F / ||b||_F (or ||a||_F when b is zero).
double relative_frobenius_error(const ComplexMatrix& a, const ComplexMatrix& b);

inline constexpr double kMaxGramCondition = 1e12;

} // namespace fdmimo
