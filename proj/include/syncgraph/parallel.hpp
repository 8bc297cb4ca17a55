#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace syncgraph {

/// Worker count used when the caller passes 0.
inline unsigned default_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(block) for every block in [0, blocks) on up to `threads`
/// workers. Blocks are claimed dynamically; callers that need deterministic
/// output write into per-block slots and reduce them in block order.
template <typename Body>
void parallel_for_blocks(std::size_t blocks, unsigned threads, Body&& body) {
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, blocks));
  if (threads <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) body(b);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t b = next++; b < blocks; b = next++) body(b);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = blocks;
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace syncgraph
