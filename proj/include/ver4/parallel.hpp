// Chunked parallel loops with deterministic result order.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ver4 {

/// Worker count: VER4_THREADS if set and positive, otherwise the hardware
/// concurrency (at least one).
inline unsigned threadCount() {
  if (const char* env = std::getenv("VER4_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(chunkIndex, begin, end) over [0, n) split into contiguous
/// chunks. Each chunk writes only to its own slot, so callers merge the
/// per-chunk results in chunk order and get the same output regardless of
/// scheduling.
template <typename Body>
std::size_t parallelChunks(std::size_t n, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(threadCount(), std::max<std::size_t>(n, 1));
  const std::size_t chunks = workers;
  if (workers <= 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    pool.emplace_back([&, c, begin, end] {
      try {
        body(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return chunks;
}

/// Number of chunks parallelChunks will use for n items.
inline std::size_t chunkCount(std::size_t n) {
  return std::min<std::size_t>(threadCount(), std::max<std::size_t>(n, 1));
}

}  // namespace ver4
