#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace matineq::detail {

/// out[i] = f(i) for i in [0, n), spread over worker threads. The result is
/// independent of the worker count.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, unsigned workers, F f) {
  std::vector<T> out(n);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) out[i] = f(i);
  };
  unsigned w = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
  w = static_cast<unsigned>(std::min<std::size_t>(w, n));
  if (w <= 1) {
    run();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < w; ++i) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace matineq::detail
