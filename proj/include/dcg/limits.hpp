#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace dcg {

/// Size caps for the expensive operations. Every operation that can blow up
/// checks its cap and throws `Errc::CapExceeded` rather than running away.
struct Limits {
  std::size_t associativity = 512;  ///< full O(n^3) check for untrusted tables
  std::size_t realize = 10000;      ///< largest group built from a spec
  std::size_t cohomology = 64;      ///< largest group for cocycle computations
  std::size_t automorphism = 64;
  std::size_t isomorphism = 64;
  std::size_t subgroups = 64;
  std::size_t extension = 1024;     ///< largest total group of an explicit extension
  std::size_t oracle = 12;          ///< largest base group for the brute-force DCom oracle
  std::size_t graph_isomorphism = 128;
  std::size_t isoclinism = 64;
  unsigned threads = 1;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace dcg
