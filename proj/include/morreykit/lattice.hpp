#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "morreykit/intervals.hpp"
#include "morreykit/weight.hpp"

namespace morreykit {

/// Finite-support real sequence x = {x(k)} stored as sorted (index, value) pairs.
class LatticeSequence {
 public:
  struct Entry {
    Index index;
    double value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  LatticeSequence() = default;
  // Indices must be strictly increasing and values finite. Zero values are dropped.
  explicit LatticeSequence(std::vector<Entry> entries);

  static LatticeSequence delta(Index k, double value = 1.0);
  static LatticeSequence indicator(const IndexInterval& j, double value = 1.0);
  static LatticeSequence from_dense(Index lo, std::span<const double> values);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Both support bounds are 0 for the empty sequence.
  Index support_lo() const { return empty() ? 0 : entries_.front().index; }
  Index support_hi() const { return empty() ? 0 : entries_.back().index; }
  std::optional<IndexInterval> hull() const;

  double operator()(Index k) const;
  double sup_abs() const;

  LatticeSequence scaled(double c) const;
  LatticeSequence restricted(const IndexInterval& j) const;
  LatticeSequence abs() const;
  friend LatticeSequence operator+(const LatticeSequence& a, const LatticeSequence& b);

  /// Entries whose index lies in j, as a contiguous view.
  std::span<const Entry> entries_in(const IndexInterval& j) const;

  friend bool operator==(const LatticeSequence&, const LatticeSequence&) = default;

 private:
  std::vector<Entry> entries_;
};

enum class PrefixTransform {
  Abs,             // |x(k)|
  AbsPowWeighted,  // |x(k)|^p w(k)
  Weight,          // w(k)
};

inline constexpr std::size_t kDefaultMaxPrefixPoints = std::size_t{1} << 26;

/// Cumulative sums of a derived sequence over a window; O(1) range sums.
class PrefixTable {
 public:
  PrefixTable(const IndexInterval& window, std::span<const double> terms,
              std::size_t max_points = kDefaultMaxPrefixPoints);

  const IndexInterval& window() const { return window_; }
  const std::vector<double>& cumulative() const { return cumulative_; }

  // Sum over j; j must lie inside the window (DomainError otherwise).
  double range_sum(const IndexInterval& j) const;
  // Sum over j clipped to the window; empty intersection gives 0.
  double clipped_sum(Index lo, Index hi) const;
  double total() const { return cumulative_.back(); }

 private:
  IndexInterval window_;
  std::vector<double> cumulative_;
};

PrefixTable build_prefix(const LatticeSequence& x, PrefixTransform transform, const Weight& w,
                         const IndexInterval& window, double p = 1.0,
                         std::size_t max_points = kDefaultMaxPrefixPoints);

}  // namespace morreykit
