#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace itensor {

/// Worker count: hardware concurrency, capped by ITENSOR_THREADS when set.
unsigned worker_count();

/// Calls fn(i) for every i in [0, count), spread over worker_count() threads.
/// Calls made from inside a worker run inline on that worker.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

/// Smallest i in [0, count) with pred(i) true, or nullopt. Workers may skip
/// indices above the best hit found so far, so the answer is the same as a
/// sequential scan regardless of scheduling.
std::optional<std::size_t> find_first(std::size_t count, const std::function<bool(std::size_t)>& pred);

}  // namespace itensor
