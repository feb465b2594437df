#ifndef RANKAUDIT_PARALLEL_HPP
#define RANKAUDIT_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace rankaudit {

/**
 * Applies `fn` to every index in [0, count) on a small worker pool and
 * returns the results in index order. Workers pull indices from a shared
 * counter, so scheduling is free-form, but the output slot of task i is
 * always i: callers see a deterministic result regardless of thread timing.
 * If any task throws, the exception of the lowest failing index is rethrown.
 */
template <typename Fn>
auto parallel_map(std::size_t count, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using Result = decltype(fn(std::size_t{0}));

    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr> errors(count);

    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers =
        std::min<std::size_t>(count, hw == 0 ? 1 : hw);

    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i] = fn(i);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto work = [&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= count) return;
                try {
                    slots[i] = fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        for (const auto& err : errors) {
            if (err) std::rethrow_exception(err);
        }
    }

    std::vector<Result> results;
    results.reserve(count);
    for (auto& slot : slots) results.push_back(std::move(*slot));
    return results;
}

} // namespace rankaudit

#endif // RANKAUDIT_PARALLEL_HPP
