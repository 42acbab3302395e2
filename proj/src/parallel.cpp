#include "itensor/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace itensor {

namespace {

constexpr std::size_t kChunk = 64;

// Set on pool threads; nested parallel calls then run inline.
thread_local bool in_region = false;

struct RegionGuard {
  bool saved = in_region;
  RegionGuard() { in_region = true; }
  ~RegionGuard() { in_region = saved; }
};

// Runs body(worker) on `workers` threads (the calling thread is worker 0)
// and rethrows the first exception raised.
void run_workers(unsigned workers, const std::function<void(unsigned)>& body) {
  if (workers <= 1 || in_region) {
    body(0);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  auto guarded = [&](unsigned w) {
    RegionGuard region;
    try {
      body(w);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(guarded, w);
  guarded(0);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ITENSOR_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // Unparseable values are ignored.
    }
  }
  return n;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), chunks));
  std::atomic<std::size_t> next{0};
  run_workers(workers, [&](unsigned) {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
      const std::size_t end = std::min(count, (c + 1) * kChunk);
      for (std::size_t i = c * kChunk; i < end; ++i) fn(i);
    }
  });
}

std::optional<std::size_t> find_first(std::size_t count, const std::function<bool(std::size_t)>& pred) {
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), chunks));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  run_workers(workers, [&](unsigned) {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
      const std::size_t begin = c * kChunk;
      if (begin >= best.load()) break;
      const std::size_t end = std::min(count, begin + kChunk);
      for (std::size_t i = begin; i < end && i < best.load(); ++i) {
        if (pred(i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  });
  const std::size_t b = best.load();
  if (b == count) return std::nullopt;
  return b;
}

}  // namespace itensor
