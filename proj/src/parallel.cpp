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
#include "fdmimo/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fdmimo {

unsigned default_thread_count()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body)
{
    if (count == 0)
        return;
    if (threads == 0)
        threads = default_thread_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    const std::size_t chunk = std::max<std::size_t>(1, count / (static_cast<std::size_t>(threads) * 8));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!stop.load(std::memory_order_relaxed)) {
            const std::size_t begin = next.fetch_add(chunk);
            if (begin >= count)
                return;
            const std::size_t end = std::min(count, begin + chunk);
            try {
                for (std::size_t i = begin; i < end; ++i)
                    body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                stop = true;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace fdmimo
