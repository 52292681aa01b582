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

#include "fama/parallel.hpp"

#include "fama/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace fama {

std::size_t default_worker_count()
{
    std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("FAMA_LAB_WORKERS")) {
        std::size_t cap = 0;
        const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), cap);
        if (ec == std::errc() && *ptr == '\0' && cap > 0)
            return cap;
    }
    return hw;
}

std::vector<Chunk> make_chunks(std::uint64_t total, std::uint64_t chunk_size)
{
    if (chunk_size == 0)
        throw DomainError("chunk size must be positive");
    std::vector<Chunk> chunks;
    chunks.reserve(static_cast<std::size_t>((total + chunk_size - 1) / chunk_size));
    for (std::uint64_t first = 0, index = 0; first < total; first += chunk_size, ++index)
        chunks.push_back({index, first, std::min(chunk_size, total - first)});
    return chunks;
}

} // namespace fama
