#include "macp/parallel.hpp"

namespace macp {

namespace {
std::atomic<unsigned> g_threads{0};
}

unsigned default_threads() {
  const unsigned cap = g_threads.load();
  if (cap != 0) return cap;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_default_threads(unsigned threads) { g_threads = threads; }

}  // namespace macp
