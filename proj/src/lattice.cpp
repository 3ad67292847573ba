#include "morreykit/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "morreykit/errors.hpp"

namespace morreykit {

LatticeSequence::LatticeSequence(std::vector<Entry> entries) {
  entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    if (i > 0 && e.index <= entries[i - 1].index) {
      throw PreconditionError("sequence indices must be strictly increasing (at index " +
                              std::to_string(e.index) + ")");
    }
    if (!std::isfinite(e.value)) {
      throw DomainError("sequence value at index " + std::to_string(e.index) + " is not finite");
    }
    if (e.value != 0.0) entries_.push_back(e);
  }
}

LatticeSequence LatticeSequence::delta(Index k, double value) {
  return LatticeSequence({{k, value}});
}

LatticeSequence LatticeSequence::indicator(const IndexInterval& j, double value) {
  std::vector<Entry> e;
  e.reserve(static_cast<std::size_t>(j.size()));
  for (Index k = j.lo; k <= j.hi; ++k) e.push_back({k, value});
  return LatticeSequence(std::move(e));
}

LatticeSequence LatticeSequence::from_dense(Index lo, std::span<const double> values) {
  std::vector<Entry> e;
  e.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) e.push_back({lo + static_cast<Index>(i), values[i]});
  return LatticeSequence(std::move(e));
}

std::optional<IndexInterval> LatticeSequence::hull() const {
  if (empty()) return std::nullopt;
  return IndexInterval{support_lo(), support_hi()};
}

double LatticeSequence::operator()(Index k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const Entry& e, Index key) { return e.index < key; });
  return (it != entries_.end() && it->index == k) ? it->value : 0.0;
}

double LatticeSequence::sup_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e.value));
  return m;
}

LatticeSequence LatticeSequence::scaled(double c) const {
  std::vector<Entry> e = entries_;
  for (auto& x : e) x.value *= c;
  return LatticeSequence(std::move(e));
}

LatticeSequence LatticeSequence::restricted(const IndexInterval& j) const {
  auto view = entries_in(j);
  return LatticeSequence(std::vector<Entry>(view.begin(), view.end()));
}

LatticeSequence LatticeSequence::abs() const {
  std::vector<Entry> e = entries_;
  for (auto& x : e) x.value = std::abs(x.value);
  return LatticeSequence(std::move(e));
}

LatticeSequence operator+(const LatticeSequence& a, const LatticeSequence& b) {
  std::vector<LatticeSequence::Entry> out;
  out.reserve(a.size() + b.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->index < j->index)) {
      out.push_back(*i++);
    } else if (i == a.entries_.end() || j->index < i->index) {
      out.push_back(*j++);
    } else {
      out.push_back({i->index, i->value + j->value});
      ++i;
      ++j;
    }
  }
  return LatticeSequence(std::move(out));
}

std::span<const LatticeSequence::Entry> LatticeSequence::entries_in(const IndexInterval& j) const {
  auto cmp = [](const Entry& e, Index key) { return e.index < key; };
  auto first = std::lower_bound(entries_.begin(), entries_.end(), j.lo, cmp);
  auto last = std::lower_bound(first, entries_.end(), j.hi + 1, cmp);
  return {first, last};
}

PrefixTable::PrefixTable(const IndexInterval& window, std::span<const double> terms,
                         std::size_t max_points)
    : window_(window) {
  if (static_cast<std::size_t>(window.size()) > max_points) {
    throw ResourceError("prefix window " + window.to_string() + " exceeds the limit of " +
                        std::to_string(max_points) + " points");
  }
  if (terms.size() != static_cast<std::size_t>(window.size())) {
    throw PreconditionError("prefix terms must match the window size");
  }
  cumulative_.resize(terms.size() + 1);
  cumulative_[0] = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) cumulative_[i + 1] = cumulative_[i] + terms[i];
}

double PrefixTable::range_sum(const IndexInterval& j) const {
  if (!window_.contains(j)) {
    throw DomainError("range " + j.to_string() + " lies outside prefix window " +
                      window_.to_string());
  }
  return cumulative_[static_cast<std::size_t>(j.hi - window_.lo + 1)] -
         cumulative_[static_cast<std::size_t>(j.lo - window_.lo)];
}

double PrefixTable::clipped_sum(Index lo, Index hi) const {
  lo = std::max(lo, window_.lo);
  hi = std::min(hi, window_.hi);
  if (lo > hi) return 0.0;
  return cumulative_[static_cast<std::size_t>(hi - window_.lo + 1)] -
         cumulative_[static_cast<std::size_t>(lo - window_.lo)];
}

PrefixTable build_prefix(const LatticeSequence& x, PrefixTransform transform, const Weight& w,
                         const IndexInterval& window, double p, std::size_t max_points) {
  if (static_cast<std::size_t>(window.size()) > max_points) {
    throw ResourceError("prefix window " + window.to_string() + " exceeds the limit of " +
                        std::to_string(max_points) + " points");
  }
  if (transform == PrefixTransform::AbsPowWeighted && !(p >= 1.0)) {
    throw PreconditionError("abs_pow transform requires p >= 1");
  }
  std::vector<double> terms(static_cast<std::size_t>(window.size()), 0.0);
  if (transform == PrefixTransform::Weight) {
    w.fill(window, terms);
  } else {
    for (const auto& e : x.entries_in(window)) {
      const double a = std::abs(e.value);
      const auto i = static_cast<std::size_t>(e.index - window.lo);
      terms[i] = transform == PrefixTransform::Abs ? a : std::pow(a, p) * w(e.index);
    }
  }
  return PrefixTable(window, terms, max_points);
}

}  // namespace morreykit
