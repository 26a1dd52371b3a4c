#pragma once

#include <cstddef>
#include <functional>

namespace dezaforge {

/// Process-wide cap on worker threads for row-partitioned scans. Defaults
/// to 1; results never depend on the value.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Calls body(begin, end) on disjoint contiguous slices covering [0, n).
void parallel_rows(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace dezaforge
