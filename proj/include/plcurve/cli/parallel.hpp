#ifndef PLCURVE_CLI_PARALLEL_HPP
#define PLCURVE_CLI_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace plcurve::cli {

/// Applies f to 0..count-1 on up to `jobs` threads. Results come back in index
/// order whatever the scheduling; the lowest-index exception is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, std::size_t jobs, F f) {
  std::vector<T> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

inline std::size_t default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace plcurve::cli

#endif  // PLCURVE_CLI_PARALLEL_HPP
