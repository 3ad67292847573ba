#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace morreykit {

using Index = std::int64_t;

// Floor division for signed operands (rounds toward negative infinity).
constexpr Index floor_div(Index a, Index b) {
  Index q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// A finite run of consecutive integers {lo, ..., hi}.
struct IndexInterval {
  Index lo = 0;
  Index hi = 0;

  IndexInterval() = default;
  IndexInterval(Index lo, Index hi);

  Index size() const { return hi - lo + 1; }
  bool contains(Index k) const { return lo <= k && k <= hi; }
  bool contains(const IndexInterval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool intersects(const IndexInterval& other) const { return lo <= other.hi && other.lo <= hi; }

  friend bool operator==(const IndexInterval&, const IndexInterval&) = default;
  std::string to_string() const;
};

/// Smallest interval containing both arguments.
IndexInterval span_of(const IndexInterval& a, const IndexInterval& b);

/// S_{m,N} = {k : |k - m| <= N}.
struct SymmetricInterval {
  Index center = 0;
  Index radius = 0;

  SymmetricInterval() = default;
  SymmetricInterval(Index center, Index radius);

  Index size() const { return 2 * radius + 1; }
  Index lo() const { return center - radius; }
  Index hi() const { return center + radius; }
  bool contains(Index k) const { return lo() <= k && k <= hi(); }
  IndexInterval as_interval() const { return {lo(), hi()}; }

  friend bool operator==(const SymmetricInterval&, const SymmetricInterval&) = default;
};

/// I_{N,j} = {(j-1)2^N + 1, ..., j 2^N}.
struct DyadicInterval {
  int level = 0;
  Index pos = 0;

  DyadicInterval() = default;
  DyadicInterval(int level, Index pos);

  Index size() const { return Index{1} << level; }
  Index lo() const { return (pos - 1) * size() + 1; }
  Index hi() const { return pos * size(); }
  IndexInterval as_interval() const { return {lo(), hi()}; }

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
  friend auto operator<=>(const DyadicInterval&, const DyadicInterval&) = default;
};

inline constexpr int kMaxDyadicLevel = 60;

std::vector<Index> interval_members(const SymmetricInterval& s);

/// lambda S_{m,N} = S_{m, lambda N}. Requires lambda >= 1.
SymmetricInterval dilate(const SymmetricInterval& s, Index lambda);

DyadicInterval dyadic_parent(const DyadicInterval& d);

/// Left and right halves. Level-0 intervals have none (DomainError).
std::pair<DyadicInterval, DyadicInterval> dyadic_children(const DyadicInterval& d);

/// The unique level-N dyadic interval containing k.
DyadicInterval dyadic_containing(Index k, int level);

// Proof-side dilations of a dyadic interval I = I_{N,j}:
//   nLI      = {(j-n)2^N + 1, ..., j 2^N}
//   nRI      = {(j-1)2^N + 1, ..., (j+n-1)2^N}
//   (2n-1)I  = {(j-n)2^N + 1, ..., (j+n-1)2^N}
IndexInterval left_dilate(const DyadicInterval& d, Index n);
IndexInterval right_dilate(const DyadicInterval& d, Index n);
IndexInterval centered_dilate(const DyadicInterval& d, Index n);

}  // namespace morreykit
