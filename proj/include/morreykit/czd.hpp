#pragma once

#include <vector>

#include <json.hpp>

#include "morreykit/intervals.hpp"
#include "morreykit/lattice.hpp"
#include "morreykit/report.hpp"
#include "morreykit/weight.hpp"

namespace morreykit {

inline constexpr int kDefaultCzLevelCap = 40;

struct CzInterval {
  DyadicInterval interval;
  double weight_mass = 0.0;        // w(I)
  double weighted_abs_mass = 0.0;  // sum_I |x| w
  double parent_weight_mass = 0.0;

  double average() const { return weighted_abs_mass / weight_mass; }
};

struct CzSelection {
  double threshold = 0.0;
  int top_level = 0;
  std::vector<CzInterval> intervals;  // sorted by lo

  bool covers(Index k) const;
};

/// Maximal dyadic intervals whose w-average of |x| exceeds t.
///
/// The top level is the smallest level at which every dyadic interval meeting
/// the support has average <= t. Averages at a level are w-weighted means of
/// the averages of its children, so every coarser level passes too and the
/// descent from there selects exactly the maximal intervals.
CzSelection cz_decompose(const LatticeSequence& x, const Weight& w, double t,
                         int level_cap = kDefaultCzLevelCap);

/// Checks the strict lower bound, the parent-ratio upper bound, maximality
/// and |x| <= t off the union. lhs is the largest avg_I / t (the empirical
/// constant), rhs the largest w(parent) / w(I).
VerificationReport cz_verify(const LatticeSequence& x, const Weight& w,
                             const CzSelection& selection);

/// Every interval selected at t1 lies inside one selected at t2 < t1.
VerificationReport cz_nesting_check(const LatticeSequence& x, const Weight& w, double t1,
                                    double t2, int level_cap = kDefaultCzLevelCap);

nlohmann::json selection_to_json(const CzSelection& selection);

}  // namespace morreykit
