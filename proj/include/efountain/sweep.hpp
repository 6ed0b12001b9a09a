//
// efountain - finite E-Fountain semigroups, their categories and algebras
//
// Exhaustive sweeps over index ranges, optionally split across threads.
// Every sweep reports the smallest failing index, so the result does not
// depend on the number of workers.

#ifndef EFOUNTAIN_SWEEP_HPP_
#define EFOUNTAIN_SWEEP_HPP_

#include <algorithm>  // for min
#include <atomic>     // for atomic
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <thread>     // for thread
#include <vector>     // for vector

namespace efountain {

  namespace detail {
    inline std::atomic<size_t>& jobs_setting() {
      static std::atomic<size_t> jobs{1};
      return jobs;
    }
  }  // namespace detail

  //! Caps the number of worker threads used by exhaustive sweeps.
  inline void set_jobs(size_t n) {
    detail::jobs_setting() = (n == 0 ? 1 : n);
  }

  inline size_t jobs() {
    return detail::jobs_setting();
  }

  //! Returns the smallest i in [0, n) with fails(i), or nullopt.
  template <typename TPredicate>
  std::optional<size_t> first_failure(size_t n, TPredicate&& fails) {
    size_t const workers = std::min(jobs(), std::max<size_t>(n / 64, 1));
    if (workers <= 1) {
      for (size_t i = 0; i < n; ++i) {
        if (fails(i)) {
          return i;
        }
      }
      return std::nullopt;
    }
    // Each worker scans a contiguous chunk; chunks are ordered, so the
    // minimum over workers is the global first failure.
    std::atomic<size_t>      best{n};
    std::vector<std::thread> pool;
    size_t const             chunk = (n + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        size_t const lo = w * chunk, hi = std::min(n, lo + chunk);
        for (size_t i = lo; i < hi && i < best.load(); ++i) {
          if (fails(i)) {
            size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    if (best.load() == n) {
      return std::nullopt;
    }
    return best.load();
  }

}  // namespace efountain

#endif  // EFOUNTAIN_SWEEP_HPP_
