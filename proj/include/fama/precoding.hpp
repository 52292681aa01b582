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

#ifndef FAMA_PRECODING_HPP
#define FAMA_PRECODING_HPP

#include "fama/channel.hpp"
#include "fama/linalg.hpp"

namespace fama {

// U unit-norm beamformers (columns of an M x U matrix).
struct PrecoderSet {
    ComplexMatrix vectors;
    Scheme scheme = Scheme::MRT;

    int users() const noexcept { return static_cast<int>(vectors.cols()); }
};

// w_u = h_{u,1} / ||h_{u,1}||.
PrecoderSet mrt_precoders(const ComplexMatrix &H1);

// Columns of H1 (H1^H H1)^{-1}, each normalized to unit norm.
PrecoderSet zf_precoders(const ComplexMatrix &H1, double tolerance = kGramTolerance);

PrecoderSet make_precoders(Scheme scheme, const ComplexMatrix &H1, double tolerance = kGramTolerance);

} // namespace fama

#endif
