#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace evenpath {

inline constexpr const char* threads_env_var = "EVENPATH_THREADS";

/// EVENPATH_THREADS if set to a positive integer, else the hardware concurrency.
inline int default_threads() {
  if (const char* env = std::getenv(threads_env_var)) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for every shard index i in [0, shards) on `threads` workers.
/// Callers write into per-shard slots and merge in index order afterwards, so
/// results never depend on the worker count. The first exception is rethrown.
template <class Fn>
void run_shards(std::size_t shards, int threads, Fn&& fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(std::max<std::size_t>(shards, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= shards) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(shards);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace evenpath
