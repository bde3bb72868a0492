#include "chaoscert/parallel.hpp"

#include <atomic>

namespace chaoscert {

namespace {

unsigned hardware() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

std::atomic<unsigned>& workers() {
  static std::atomic<unsigned> n{hardware()};
  return n;
}

}  // namespace

void set_worker_count(unsigned n) { workers().store(n == 0 ? hardware() : n); }

unsigned worker_count() { return workers().load(); }

}  // namespace chaoscert
