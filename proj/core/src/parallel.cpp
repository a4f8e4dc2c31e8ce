#include "enls/parallel.hpp"

#include <atomic>
#include <mutex>

namespace enls {

namespace {
std::atomic<unsigned> g_worker_threads{0};
}

void set_worker_threads(unsigned count) { g_worker_threads.store(count); }

unsigned worker_threads() {
  const unsigned requested = g_worker_threads.load();
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_block(std::size_t num_blocks, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_threads(), num_blocks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < num_blocks; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < num_blocks; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace enls
