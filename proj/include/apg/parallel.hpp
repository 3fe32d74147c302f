#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace apg {

inline unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

/// Evaluates f(state, i) for i in [0, n) on worker threads and returns the
/// results in index order. Each worker builds its own state with
/// make_state(), so solvers and their memo tables are never shared.
template <class R, class MakeState, class F>
std::vector<R> parallel_map(std::size_t n, MakeState make_state, F f, unsigned threads = 0) {
  std::vector<R> out(n);
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    auto state = make_state();
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = f(state, i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace apg
