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

#include "fama/precoding.hpp"

#include "fama/error.hpp"

#include <cmath>
#include <string>

namespace fama {

namespace {

void normalize_columns(ComplexMatrix &w)
{
    for (Eigen::Index u = 0; u < w.cols(); ++u) {
        const double norm = w.col(u).norm();
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw DomainError("precoder column " + std::to_string(u) + " has zero or non-finite norm");
        w.col(u) /= norm;
    }
}

} // namespace

PrecoderSet mrt_precoders(const ComplexMatrix &H1)
{
    if (H1.cols() < 1 || H1.rows() < 1)
        throw DomainError("mrt_precoders requires a non-empty channel matrix");
    PrecoderSet set{H1, Scheme::MRT};
    normalize_columns(set.vectors);
    return set;
}

PrecoderSet zf_precoders(const ComplexMatrix &H1, double tolerance)
{
    if (H1.rows() < H1.cols())
        throw DomainError("zf_precoders requires M >= U");
    PrecoderSet set{solve_gram(H1, tolerance), Scheme::ZF};
    normalize_columns(set.vectors);
    return set;
}

PrecoderSet make_precoders(Scheme scheme, const ComplexMatrix &H1, double tolerance)
{
    return scheme == Scheme::MRT ? mrt_precoders(H1) : zf_precoders(H1, tolerance);
}

} // namespace fama
