#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace skewcat {

// Thrown when a computation would exceed the configured resource guards
// (dense tensor sizes, saturation set sizes). Maps to CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Worker cap for embarrassingly parallel sweeps. Reads SKEWCAT_THREADS once;
// results of parallel loops are merged in index order, so the thread count
// never changes any output.
int thread_count();

// Runs fn(i) for i in [0, count) on up to thread_count() workers. fn must be
// safe to call concurrently for distinct i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace skewcat
