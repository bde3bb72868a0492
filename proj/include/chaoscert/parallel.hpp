#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace chaoscert {

/// Caps the number of threads used by parallel_for. 0 selects hardware concurrency.
void set_worker_count(unsigned n);
unsigned worker_count();

/// Splits [0, n) into contiguous blocks and runs body(begin, end) on each, one
/// thread per block. Blocks write disjoint outputs, so results do not depend on
/// the worker count. The exception of the lowest-indexed failing block is rethrown.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t min_block = 1) {
  if (n == 0) return;
  const std::size_t blocks =
      std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), n / std::max<std::size_t>(min_block, 1)));
  if (blocks == 1) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(blocks);
  std::vector<std::thread> threads;
  threads.reserve(blocks - 1);
  auto run = [&](std::size_t b) {
    const std::size_t begin = n * b / blocks;
    const std::size_t end = n * (b + 1) / blocks;
    try {
      body(begin, end);
    } catch (...) {
      errors[b] = std::current_exception();
    }
  };
  for (std::size_t b = 1; b < blocks; ++b) threads.emplace_back(run, b);
  run(0);
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace chaoscert
