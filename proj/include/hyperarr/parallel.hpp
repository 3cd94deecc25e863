#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hyperarr {

// Splits [0, total) into at most `threads` contiguous slices and runs
// fn(slice_index, begin, end) for each. Slice boundaries depend only on
// (total, threads); callers merge per-slice results in slice order, so
// nothing about scheduling can leak into output. The first exception thrown
// by any slice is rethrown after all workers join.
template <class Fn>
void parallel_slices(std::size_t total, int threads, Fn fn) {
  const std::size_t want = static_cast<std::size_t>(std::max(1, threads));
  const std::size_t slices = std::max<std::size_t>(1, std::min(want, total));
  if (slices == 1) {
    fn(std::size_t{0}, std::size_t{0}, total);
    return;
  }
  const std::size_t chunk = total / slices;
  const std::size_t extra = total % slices;
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(slices);
  std::size_t begin = 0;
  for (std::size_t s = 0; s < slices; ++s) {
    const std::size_t len = chunk + (s < extra ? 1 : 0);
    const std::size_t end = begin + len;
    workers.emplace_back([&, s, begin, end] {
      try {
        fn(s, begin, end);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
    begin = end;
  }
  for (std::thread& w : workers) w.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hyperarr
