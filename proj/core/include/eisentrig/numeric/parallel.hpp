#ifndef EISENTRIG_NUMERIC_PARALLEL_HPP
#define EISENTRIG_NUMERIC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace eisentrig::numeric
{

// Applies fn to every item, possibly on several threads, and returns the
// results in input order. If fn throws, one of the exceptions is rethrown
// after all workers finish.
template <class T, class Fn>
auto parallel_map(std::span<const T> items, Fn fn) -> std::vector<std::invoke_result_t<Fn &, const T &>>
{
    using R = std::invoke_result_t<Fn &, const T &>;
    const std::size_t n = items.size();
    const std::size_t workers = std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), n);
    std::vector<std::optional<R>> slots(n);
    if (workers <= 1) {
        std::vector<R> out;
        out.reserve(n);
        for (const T &item : items) {
            out.push_back(fn(item));
        }
        return out;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                slots[i].emplace(fn(items[i]));
            }
        }));
    }
    std::exception_ptr first;
    for (auto &f : futures) {
        try {
            f.get();
        } catch (...) {
            if (!first) {
                first = std::current_exception();
            }
        }
    }
    if (first) {
        std::rethrow_exception(first);
    }
    std::vector<R> out;
    out.reserve(n);
    for (auto &slot : slots) {
        out.push_back(std::move(*slot));
    }
    return out;
}

} // namespace eisentrig::numeric

#endif
