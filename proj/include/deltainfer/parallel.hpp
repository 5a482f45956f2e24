#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace deltainfer::detail {

/// Run fn(i) for i in [0, count) on up to `threads` workers. Each index owns
/// its output slot, so results do not depend on the thread count.
inline void run_indexed(std::size_t count, unsigned threads,
                        const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace deltainfer::detail
