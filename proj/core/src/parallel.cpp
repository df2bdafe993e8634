#include "kleinian/parallel.hpp"

#include <algorithm>

namespace kleinian {
namespace {
std::atomic<int> requested{0};
}

void set_thread_count(int n) { requested = std::max(n, 0); }

int thread_count() {
  const int n = requested.load();
  if (n > 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace kleinian
