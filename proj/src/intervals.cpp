#include "morreykit/intervals.hpp"

#include <algorithm>

#include "morreykit/errors.hpp"

namespace morreykit {

IndexInterval::IndexInterval(Index lo, Index hi) : lo(lo), hi(hi) {
  if (lo > hi) {
    throw PreconditionError("interval requires lo <= hi, got [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }
}

std::string IndexInterval::to_string() const {
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

IndexInterval span_of(const IndexInterval& a, const IndexInterval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

SymmetricInterval::SymmetricInterval(Index center, Index radius) : center(center), radius(radius) {
  if (radius < 0) throw PreconditionError("symmetric interval radius must be nonnegative");
}

DyadicInterval::DyadicInterval(int level, Index pos) : level(level), pos(pos) {
  if (level < 0 || level > kMaxDyadicLevel) {
    throw PreconditionError("dyadic level out of range: " + std::to_string(level));
  }
}

std::vector<Index> interval_members(const SymmetricInterval& s) {
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (Index k = s.lo(); k <= s.hi(); ++k) out.push_back(k);
  return out;
}

SymmetricInterval dilate(const SymmetricInterval& s, Index lambda) {
  if (lambda < 1) throw PreconditionError("dilation factor must be >= 1");
  return {s.center, lambda * s.radius};
}

DyadicInterval dyadic_parent(const DyadicInterval& d) {
  return {d.level + 1, floor_div(d.pos + 1, 2)};
}

std::pair<DyadicInterval, DyadicInterval> dyadic_children(const DyadicInterval& d) {
  if (d.level == 0) throw DomainError("level-0 dyadic interval has no children");
  return {DyadicInterval{d.level - 1, 2 * d.pos - 1}, DyadicInterval{d.level - 1, 2 * d.pos}};
}

DyadicInterval dyadic_containing(Index k, int level) {
  const Index len = Index{1} << level;
  return {level, floor_div(k - 1, len) + 1};
}

IndexInterval left_dilate(const DyadicInterval& d, Index n) {
  if (n < 2) throw PreconditionError("dilation order must be >= 2");
  return {(d.pos - n) * d.size() + 1, d.hi()};
}

IndexInterval right_dilate(const DyadicInterval& d, Index n) {
  if (n < 2) throw PreconditionError("dilation order must be >= 2");
  return {d.lo(), (d.pos + n - 1) * d.size()};
}

IndexInterval centered_dilate(const DyadicInterval& d, Index n) {
  if (n < 2) throw PreconditionError("dilation order must be >= 2");
  return {(d.pos - n) * d.size() + 1, (d.pos + n - 1) * d.size()};
}

}  // namespace morreykit
