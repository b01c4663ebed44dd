#ifndef SAMPNET_PARALLEL_HPP
#define SAMPNET_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace sampnet {

// Number of workers: SAMPNET_WORKERS env var if set, else hardware
// concurrency. Always >= 1.
std::size_t worker_count();

// Runs fn(i) for i in [0, n) on worker threads. Results must be written
// by index so that merged output is independent of scheduling. The first
// exception thrown by any fn is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace sampnet

#endif  // SAMPNET_PARALLEL_HPP
