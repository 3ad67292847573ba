#include "morreykit/czd.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "morreykit/errors.hpp"

namespace morreykit {
namespace {

double abs_weighted_mass(const LatticeSequence& x, const Weight& w, const IndexInterval& j) {
  double s = 0.0;
  for (const auto& e : x.entries_in(j)) s += std::abs(e.value) * w(e.index);
  return s;
}

struct Cell {
  double mass = 0.0;
  double weight = 0.0;
  double average() const { return mass / weight; }
};

Cell measure(const LatticeSequence& x, const Weight& w, const DyadicInterval& d) {
  const IndexInterval j = d.as_interval();
  return {abs_weighted_mass(x, w, j), weight_mass(w, j)};
}

// Level-N dyadic intervals meeting the support, in order.
std::vector<DyadicInterval> touching(const LatticeSequence& x, int level) {
  std::vector<DyadicInterval> out;
  for (const auto& e : x.entries()) {
    const DyadicInterval d = dyadic_containing(e.index, level);
    if (out.empty() || out.back() != d) out.push_back(d);
  }
  return out;
}

void descend(const LatticeSequence& x, const Weight& w, double t, const DyadicInterval& d,
             double weight, std::vector<CzInterval>& out) {
  if (d.level == 0) return;
  const auto [left, right] = dyadic_children(d);
  for (const DyadicInterval& child : {left, right}) {
    const Cell c = measure(x, w, child);
    if (c.mass == 0.0) continue;
    if (c.average() > t) {
      out.push_back({child, c.weight, c.mass, weight});
    } else {
      descend(x, w, t, child, c.weight, out);
    }
  }
}

}  // namespace

bool CzSelection::covers(Index k) const {
  auto it = std::upper_bound(intervals.begin(), intervals.end(), k,
                             [](Index key, const CzInterval& c) { return key < c.interval.lo(); });
  if (it == intervals.begin()) return false;
  return std::prev(it)->interval.as_interval().contains(k);
}

CzSelection cz_decompose(const LatticeSequence& x, const Weight& w, double t, int level_cap) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("threshold t must be positive and finite");
  if (x.empty()) throw PreconditionError("decomposition needs a sequence that is not identically zero");
  level_cap = std::min(level_cap, kMaxDyadicLevel);

  CzSelection sel;
  sel.threshold = t;
  for (int level = 0; level <= level_cap; ++level) {
    const auto cells = touching(x, level);
    std::vector<double> weights;
    bool admissible = true;
    for (const auto& d : cells) {
      const Cell c = measure(x, w, d);
      if (c.average() > t) {
        admissible = false;
        break;
      }
      weights.push_back(c.weight);
    }
    if (!admissible) continue;
    sel.top_level = level;
    for (std::size_t i = 0; i < cells.size(); ++i) descend(x, w, t, cells[i], weights[i], sel.intervals);
    std::sort(sel.intervals.begin(), sel.intervals.end(),
              [](const CzInterval& a, const CzInterval& b) { return a.interval.lo() < b.interval.lo(); });
    return sel;
  }
  throw NoStoppingLevel("no dyadic level up to " + std::to_string(level_cap) +
                        " has all averages <= t; the weight may be summable or t below the "
                        "global average");
}

VerificationReport cz_verify(const LatticeSequence& x, const Weight& w,
                             const CzSelection& selection) {
  const double t = selection.threshold;
  VerificationReport r;
  r.check_id = "cz_properties";
  r.params = {{"t", t}, {"weight", w.describe()}, {"top_level", selection.top_level},
              {"intervals", selection.intervals.size()}};
  r.constant = 0.0;
  r.lhs = 0.0;
  r.rhs = 0.0;
  bool ok = true;
  auto violations = nlohmann::json::array();

  for (std::size_t i = 0; i < selection.intervals.size(); ++i) {
    const CzInterval& c = selection.intervals[i];
    const DyadicInterval& d = c.interval;
    const Cell cell = measure(x, w, d);
    const Cell parent = measure(x, w, dyadic_parent(d));
    const double avg = cell.average();
    const double ratio = parent.weight / cell.weight;
    r.lhs = std::max(r.lhs, avg / t);
    r.rhs = std::max(r.rhs, ratio);
    auto note = [&](const char* what) {
      ok = false;
      violations.push_back({{"check", what}, {"level", d.level}, {"pos", d.pos}, {"avg", avg}});
    };
    if (!(avg > t)) note("lower_bound");
    if (!leq_with_rounding(avg, ratio * t)) note("parent_ratio_upper_bound");
    if (!(parent.average() <= t)) note("maximality");
    if (i > 0 && !(selection.intervals[i - 1].interval.hi() < d.lo())) note("disjointness");
  }

  double off_union = 0.0;
  for (const auto& e : x.entries()) {
    if (selection.covers(e.index)) continue;
    off_union = std::max(off_union, std::abs(e.value));
    if (!(std::abs(e.value) <= t)) {
      ok = false;
      violations.push_back({{"check", "off_union"}, {"index", e.index}, {"value", e.value}});
    }
  }

  r.constant = r.lhs;
  r.pass = ok;
  r.witness = {{"empirical_C", r.lhs}, {"max_parent_ratio", r.rhs}, {"off_union_max", off_union},
               {"violations", violations}};
  r.note = "lhs = max avg_I / t, rhs = max w(parent(I)) / w(I)";
  return r;
}

VerificationReport cz_nesting_check(const LatticeSequence& x, const Weight& w, double t1,
                                    double t2, int level_cap) {
  if (!(t1 > t2) || !(t2 > 0.0)) throw PreconditionError("nesting check requires t1 > t2 > 0");
  const CzSelection fine = cz_decompose(x, w, t1, level_cap);
  const CzSelection coarse = cz_decompose(x, w, t2, level_cap);
  VerificationReport r;
  r.check_id = "cz_nesting";
  r.params = {{"t1", t1}, {"t2", t2}, {"weight", w.describe()}};
  std::size_t contained = 0;
  auto orphans = nlohmann::json::array();
  for (const auto& c : fine.intervals) {
    const IndexInterval j = c.interval.as_interval();
    const bool inside = std::any_of(coarse.intervals.begin(), coarse.intervals.end(),
                                    [&](const CzInterval& o) { return o.interval.as_interval().contains(j); });
    if (inside) {
      ++contained;
    } else {
      orphans.push_back({{"level", c.interval.level}, {"pos", c.interval.pos}});
    }
  }
  r.lhs = static_cast<double>(contained);
  r.rhs = static_cast<double>(fine.intervals.size());
  r.pass = contained == fine.intervals.size();
  r.witness = {{"not_contained", orphans}};
  r.note = "lhs = contained intervals, rhs = intervals selected at t1";
  return r;
}

nlohmann::json selection_to_json(const CzSelection& selection) {
  auto out = nlohmann::json::array();
  for (const auto& c : selection.intervals) {
    out.push_back({{"level", c.interval.level},
                   {"pos", c.interval.pos},
                   {"lo", c.interval.lo()},
                   {"hi", c.interval.hi()},
                   {"avg", c.average()}});
  }
  return out;
}

}  // namespace morreykit
