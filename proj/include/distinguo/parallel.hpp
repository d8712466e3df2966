#pragma once

#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include <omp.h>

namespace distinguo {

/// Reference implementation: applies fn to every item in order on the calling thread.
template <class T, class F>
auto serial_map(std::span<const T> items, F &&fn) -> std::vector<std::invoke_result_t<F &, const T &>>
{
    std::vector<std::invoke_result_t<F &, const T &>> results;
    results.reserve(items.size());
    for (const auto &item : items)
        results.push_back(fn(item));
    return results;
}

/// OpenMP version of serial_map. Results come back in input order whatever the thread count; the first exception
/// (by item index) is rethrown after the loop.
template <class T, class F>
auto parallel_map(std::span<const T> items, F &&fn, int jobs = 0) -> std::vector<std::invoke_result_t<F &, const T &>>
{
    using R = std::invoke_result_t<F &, const T &>;
    std::vector<std::optional<R>> slots(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    const auto count = static_cast<long>(items.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < count; ++i) {
        try {
            slots[i].emplace(fn(items[i]));
        }
        catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<R> results;
    results.reserve(items.size());
    for (auto &slot : slots)
        results.push_back(std::move(*slot));
    return results;
}

/// jobs == 1 selects the serial reference path.
template <class T, class F>
auto map_items(std::span<const T> items, F &&fn, int jobs) -> std::vector<std::invoke_result_t<F &, const T &>>
{
    if (jobs == 1)
        return serial_map(items, fn);
    return parallel_map(items, fn, jobs);
}

}  // namespace distinguo
