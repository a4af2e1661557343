#pragma once

// Deterministic fork/join helpers. Work items are identified by index, so
// any reduction that breaks ties by index gives the same answer for every
// worker count.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace booth {

/// Worker count: hardware concurrency capped by BOOTH_GFT_THREADS.
inline std::size_t default_workers()
{
    std::size_t n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BOOTH_GFT_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) {
                n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
            }
        } catch (const std::exception&) {
            // unparsable value: ignore the cap
        }
    }
    return n;
}

/// Calls body(begin, end, worker) on contiguous chunks of [0, count).
template <typename Body>
void parallel_chunks(std::size_t count, std::size_t workers, Body&& body)
{
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        body(std::size_t{0}, count, std::size_t{0});
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, w);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

/// max + argmax of value(i) over [0, count); ties go to the smaller index.
struct arg_max {
    double value = -1.0;
    std::size_t index = 0;
};

template <typename Value>
arg_max parallel_arg_max(std::size_t count, std::size_t workers, Value&& value)
{
    std::vector<arg_max> partial(std::max<std::size_t>(workers, 1), arg_max{-1.0, count});
    parallel_chunks(count, workers, [&](std::size_t begin, std::size_t end, std::size_t w) {
        arg_max best{-1.0, begin};
        bool first = true;
        for (std::size_t i = begin; i < end; ++i) {
            const double v = value(i);
            if (first || v > best.value) {
                best = {v, i};
                first = false;
            }
        }
        partial[w] = first ? arg_max{-1.0, count} : best;
    });
    arg_max best{-1.0, count};
    for (const auto& p : partial) {
        if (p.index >= count) {
            continue;
        }
        if (best.index >= count || p.value > best.value || (p.value == best.value && p.index < best.index)) {
            best = p;
        }
    }
    return best;
}

} // namespace booth
