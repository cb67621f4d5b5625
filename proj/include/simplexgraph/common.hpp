/**************************************************************************
 * common.hpp
 *
 * Copyright 2026 The simplexgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace simplexgraph {

/// Thrown when an exhaustive scan would visit more objects than the active budget allows.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown for parameter combinations outside what an operation supports.
class unsupported_parameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Budget for exhaustive scans. SIMPLEXGRAPH_BUDGET overrides the default.
inline std::uint64_t default_budget()
{
    if (const char* env = std::getenv("SIMPLEXGRAPH_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            // fall through to the compiled-in default
        }
    }
    return kDefaultBudget;
}

inline void require_budget(std::uint64_t needed, std::uint64_t budget, const std::string& what)
{
    if (needed > budget)
        throw budget_exceeded(what + ": " + std::to_string(needed) + " objects exceed budget " +
                              std::to_string(budget));
}

namespace detail {
inline std::atomic<unsigned>& thread_cap()
{
    static std::atomic<unsigned> cap{0};
    return cap;
}
} // namespace detail

/// Caps worker parallelism; 0 restores the default (hardware concurrency).
inline void set_max_threads(unsigned n) { detail::thread_cap() = n; }

inline unsigned max_threads()
{
    unsigned cap = detail::thread_cap();
    if (cap == 0)
        cap = std::max(1u, std::thread::hardware_concurrency());
    return cap;
}

/// Runs fn(i) for i in [0, count) over contiguous blocks, one block per worker.
/// fn must only touch state owned by index i.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(max_threads(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t block = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t lo = w * block;
                const std::size_t hi = std::min(count, lo + block);
                for (std::size_t i = lo; i < hi; ++i)
                    fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace simplexgraph
