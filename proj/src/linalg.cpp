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

#include "fama/linalg.hpp"

#include "fama/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace fama {

std::complex<double> hermitian_inner(const ComplexVector &x, const ComplexVector &y)
{
    if (x.size() != y.size())
        throw DomainError("hermitian_inner: length mismatch (" + std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + ")");
    return x.dot(y);
}

ComplexMatrix solve_gram(const ComplexMatrix &H, double tolerance)
{
    if (H.cols() < 1 || H.rows() < H.cols())
        throw DomainError("solve_gram requires rows >= cols >= 1");
    if (!(tolerance > 0.0))
        throw DomainError("solve_gram tolerance must be positive");

    const Eigen::MatrixXcd gram = H.adjoint() * H;

    // Gram is Hermitian PSD; its eigenvalues give the exact 2-norm condition.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
    const double lmin = eig.eigenvalues().minCoeff();
    const double lmax = eig.eigenvalues().maxCoeff();
    const double condition = lmin > 0.0 ? lmax / lmin : std::numeric_limits<double>::infinity();
    if (!(condition * tolerance <= 1.0))
        throw SingularGramError("Gram matrix is singular to working tolerance", condition);

    Eigen::LLT<Eigen::MatrixXcd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw SingularGramError("Cholesky factorization of the Gram matrix failed", condition);
    return H * llt.solve(Eigen::MatrixXcd::Identity(H.cols(), H.cols()));
}

} // namespace fama
