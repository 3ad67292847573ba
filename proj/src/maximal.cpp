#include "morreykit/maximal.hpp"

#include <algorithm>

#include "morreykit/errors.hpp"
#include "morreykit/parallel.hpp"

namespace morreykit {
namespace {

Index distance_to(const IndexInterval& hull, Index m) {
  if (m < hull.lo) return hull.lo - m;
  if (m > hull.hi) return m - hull.hi;
  return 0;
}

// Shared driver: denominator(m, N) is the mass of S_{m,N}. Radii below the
// distance to the hull give zero averages and radii past the covering radius
// only grow the denominator, so the search stops there.
template <class Denominator>
MaximalProfile scan_maximal(const LatticeSequence& x, const PrefixTable& numerator,
                            const IndexInterval& eval_window, unsigned threads,
                            Denominator denominator) {
  MaximalProfile out;
  out.window = eval_window;
  const auto n = static_cast<std::size_t>(eval_window.size());
  out.values.assign(n, 0.0);
  out.radii.assign(n, 0);
  if (x.empty()) return out;
  const IndexInterval hull = *x.hull();

  parallel_reduce(
      eval_window.lo, eval_window.hi, resolve_threads(threads), 0,
      [&](Index lo, Index hi) {
        for (Index m = lo; m <= hi; ++m) {
          double best = -1.0;
          Index arg = 0;
          for (Index r = distance_to(hull, m), cap = covering_radius(hull, m); r <= cap; ++r) {
            const double avg = numerator.clipped_sum(m - r, m + r) / denominator(m, r);
            if (avg > best) {
              best = avg;
              arg = r;
            }
          }
          const auto i = static_cast<std::size_t>(m - eval_window.lo);
          out.values[i] = best;
          out.radii[i] = arg;
        }
        return 0;
      },
      [](int, int) { return 0; });
  return out;
}

}  // namespace

double MaximalProfile::max_value() const {
  double best = 0.0;
  for (double v : values) best = std::max(best, v);
  return best;
}

LatticeSequence MaximalProfile::to_sequence() const {
  std::vector<LatticeSequence::Entry> entries;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) entries.push_back({window.lo + static_cast<Index>(i), values[i]});
  }
  return LatticeSequence(std::move(entries));
}

MaximalProfile hl_maximal(const LatticeSequence& x, const IndexInterval& eval_window,
                          unsigned threads) {
  if (x.empty()) return scan_maximal(x, PrefixTable({0, 0}, std::vector<double>{0.0}),
                                     eval_window, threads, [](Index, Index) { return 1.0; });
  const PrefixTable num = build_prefix(x, PrefixTransform::Abs, Weight::one(), *x.hull());
  return scan_maximal(x, num, eval_window, threads,
                      [](Index, Index r) { return static_cast<double>(2 * r + 1); });
}

MaximalProfile weighted_maximal(const LatticeSequence& x, const Weight& w,
                                const IndexInterval& eval_window, unsigned threads) {
  if (x.empty()) return hl_maximal(x, eval_window, threads);
  const IndexInterval hull = *x.hull();
  Index rlo = hull.lo;
  Index rhi = hull.hi;
  for (Index m : {eval_window.lo, eval_window.hi}) {
    // m -/+ N_cov(m) is monotone in m, so the window ends bound the region.
    const Index cap = covering_radius(hull, m);
    rlo = std::min(rlo, m - cap);
    rhi = std::max(rhi, m + cap);
  }
  const IndexInterval region{rlo, rhi};
  if (!w.defined_on(region)) {
    throw DomainError("weighted maximal function on " + eval_window.to_string() +
                      " needs the weight on " + region.to_string() + ", but " + w.describe() +
                      " does not cover it");
  }
  const PrefixTable num = build_prefix(x, PrefixTransform::AbsPowWeighted, w, hull, 1.0);
  const PrefixTable den = build_prefix(x, PrefixTransform::Weight, w, region);
  return scan_maximal(x, num, eval_window, threads,
                      [&](Index m, Index r) { return den.clipped_sum(m - r, m + r); });
}

}  // namespace morreykit
