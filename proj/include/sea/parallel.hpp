#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sea {

/// 0 means "one per hardware thread".
inline unsigned resolve_threads(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous shards, runs `fn(begin, end)` on each and
/// returns the results in shard order, so merging them is independent of
/// scheduling.
template <class R, class F>
std::vector<R> map_shards(std::size_t count, unsigned threads, F&& fn)
{
    const std::size_t shards = std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), count));
    std::vector<R> results(shards);
    std::vector<std::exception_ptr> errors(shards);
    const auto bounds = [&](std::size_t s) { return s * count / shards; };

    if (shards == 1) {
        results[0] = fn(std::size_t{0}, count);
        return results;
    }

    {
        std::vector<std::jthread> workers;
        workers.reserve(shards);
        for (std::size_t s = 0; s < shards; ++s)
            workers.emplace_back([&, s] {
                try {
                    results[s] = fn(bounds(s), bounds(s + 1));
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

} // namespace sea
