#include "dezaforge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace dezaforge {

namespace {
std::atomic<unsigned> g_max_threads{1};
}

void set_max_threads(unsigned n) { g_max_threads = std::max(1u, n); }

unsigned max_threads() { return g_max_threads; }

void parallel_rows(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(max_threads(), std::max<std::size_t>(1, n / 64));
  if (workers <= 1) {
    body(0, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  for (std::size_t begin = chunk; begin < n; begin += chunk)
    pool.emplace_back([&body, begin, end = std::min(n, begin + chunk)] { body(begin, end); });
  body(0, std::min(n, chunk));
}

}  // namespace dezaforge
