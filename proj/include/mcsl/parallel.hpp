#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <iterator>
#include <thread>
#include <type_traits>
#include <vector>

namespace mcsl {

/// Evaluates fn(0..count-1) on up to `jobs` threads and returns the results in
/// index order, so the output never depends on scheduling. The first
/// exception thrown by any task is rethrown.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  // vector<bool> packs bits, so concurrent writes to it would race.
  using Slot = std::conditional_t<std::is_same_v<R, bool>, unsigned char, R>;
  std::vector<Slot> out(count);
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return std::vector<R>(std::make_move_iterator(out.begin()), std::make_move_iterator(out.end()));
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return std::vector<R>(std::make_move_iterator(out.begin()), std::make_move_iterator(out.end()));
}

}  // namespace mcsl
