#pragma once

#include <vector>

#include "morreykit/intervals.hpp"
#include "morreykit/lattice.hpp"
#include "morreykit/weight.hpp"

namespace morreykit {

/// Values of a maximal operator on an evaluation window, with the smallest
/// radius attaining the supremum at each point.
struct MaximalProfile {
  IndexInterval window;
  std::vector<double> values;
  std::vector<Index> radii;

  double at(Index m) const { return values[static_cast<std::size_t>(m - window.lo)]; }
  Index radius_at(Index m) const { return radii[static_cast<std::size_t>(m - window.lo)]; }
  double max_value() const;
  LatticeSequence to_sequence() const;
};

// Radius beyond which S_{m,N} covers the whole support hull.
inline Index covering_radius(const IndexInterval& hull, Index m) {
  const Index a = m > hull.lo ? m - hull.lo : hull.lo - m;
  const Index b = m > hull.hi ? m - hull.hi : hull.hi - m;
  return a > b ? a : b;
}

/// (Mx)(m) = sup_N |S_{m,N}|^{-1} sum_{S_{m,N}} |x| for m in the window.
MaximalProfile hl_maximal(const LatticeSequence& x, const IndexInterval& eval_window,
                          unsigned threads = 1);

/// (M_w x)(m) = sup_N w(S_{m,N})^{-1} sum_{S_{m,N}} |x| w.
/// A tabulated weight must cover every S_{m,N} up to the covering radius.
MaximalProfile weighted_maximal(const LatticeSequence& x, const Weight& w,
                                const IndexInterval& eval_window, unsigned threads = 1);

}  // namespace morreykit
