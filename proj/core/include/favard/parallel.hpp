#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace favard {

/// Worker count: FAVARD_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Evaluates fn(0..count-1) on up to worker_count() threads. Results are
/// stored by index, so the output never depends on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<R> out(count);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Pairwise (tree) summation in a fixed order.
double pairwise_sum(std::span<const double> values);

}  // namespace favard
