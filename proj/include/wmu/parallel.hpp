#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace wmu {

// 0 means "use the hardware concurrency".
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, rows) into contiguous chunks, runs fn(begin, end, state) on each
// chunk (possibly concurrently) and returns the per-chunk states in chunk
// order, so callers can merge deterministically.
template <class State, class Fn>
std::vector<State> parallel_chunks(std::size_t rows, int threads, Fn fn) {
  const std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(rows, static_cast<std::size_t>(resolve_threads(threads))));
  std::vector<State> states(workers);
  if (rows == 0) return states;
  const std::size_t step = (rows + workers - 1) / workers;
  if (workers == 1) {
    fn(std::size_t{0}, rows, states[0]);
    return states;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(rows, w * step);
    const std::size_t end = std::min(rows, begin + step);
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end, states[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return states;
}

}  // namespace wmu
