// SPDX-License-Identifier: Apache-2.0
//
// fama-lab: fluid-antenna multiple access SIR statistics and Monte-Carlo toolkit
// Copyright (C) 2026 The fama-lab Authors
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

#ifndef FAMA_LINALG_HPP
#define FAMA_LINALG_HPP

#include <Eigen/Dense>

#include <complex>

namespace fama {

using ComplexVector = Eigen::VectorXcd;
// Column-major, rows = BS antennas M, cols = users U.
using ComplexMatrix = Eigen::MatrixXcd;

// x^H y (conjugate-linear in x).
std::complex<double> hermitian_inner(const ComplexVector &x, const ComplexVector &y);

// Default relative conditioning floor for the Gram solve.
inline constexpr double kGramTolerance = 1e-12;

// W = H (H^H H)^{-1} via Cholesky of the Gram matrix, so that H^H W = I.
// Throws SingularGramError when cond(H^H H) > 1 / tolerance.
ComplexMatrix solve_gram(const ComplexMatrix &H, double tolerance = kGramTolerance);

} // namespace fama

#endif
