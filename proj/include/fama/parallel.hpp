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

#ifndef FAMA_PARALLEL_HPP
#define FAMA_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fama {

// Worker count: FAMA_LAB_WORKERS when set to a positive integer, otherwise
// the hardware thread count. run_chunks never starts more workers than
// there are chunks.
std::size_t default_worker_count();

// A contiguous block of realizations processed with its own RngStream.
struct Chunk {
    std::uint64_t index = 0;
    std::uint64_t first = 0;
    std::uint64_t count = 0;
};

std::vector<Chunk> make_chunks(std::uint64_t total, std::uint64_t chunk_size);

// Evaluate fn(chunk) for every chunk on up to `workers` threads and return
// the results in chunk order. Chunk boundaries depend only on (total,
// chunk_size), never on the worker count.
template <typename Result, typename Fn>
std::vector<Result> run_chunks(std::uint64_t total, std::uint64_t chunk_size, std::size_t workers, Fn &&fn)
{
    const auto chunks = make_chunks(total, chunk_size);
    std::vector<Result> results(chunks.size());
    if (chunks.empty())
        return results;
    workers = std::clamp<std::size_t>(workers == 0 ? default_worker_count() : workers, 1, chunks.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= chunks.size())
                return;
            try {
                results[i] = fn(chunks[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(chunks.size());
                return;
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace fama

#endif
