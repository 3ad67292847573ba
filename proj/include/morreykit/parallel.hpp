#pragma once

#include <algorithm>
#include <thread>
#include <vector>

#include "morreykit/intervals.hpp"

namespace morreykit {

/// Thread count from MORREYKIT_THREADS when requested == 0, else requested.
unsigned resolve_threads(unsigned requested);

// Splits [begin, end] into contiguous chunks, runs body(lo, hi) -> Partial on
// each and folds the partials in chunk order. Callers pass a merge whose
// result does not depend on grouping, so output is identical for any count.
template <class Partial, class Body, class Merge>
Partial parallel_reduce(Index begin, Index end, unsigned threads, Partial init, Body body,
                        Merge merge) {
  if (begin > end) return init;
  const Index n = end - begin + 1;
  const Index chunks = std::clamp<Index>(static_cast<Index>(threads), 1, n);
  if (chunks == 1) return merge(std::move(init), body(begin, end));

  std::vector<Partial> partials(static_cast<std::size_t>(chunks), init);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  for (Index c = 0; c < chunks; ++c) {
    const Index lo = begin + n * c / chunks;
    const Index hi = begin + n * (c + 1) / chunks - 1;
    pool.emplace_back([&, c, lo, hi] { partials[static_cast<std::size_t>(c)] = body(lo, hi); });
  }
  for (auto& t : pool) t.join();
  Partial acc = std::move(init);
  for (auto& part : partials) acc = merge(std::move(acc), std::move(part));
  return acc;
}

}  // namespace morreykit
