#include "morreykit/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "morreykit/errors.hpp"
#include "morreykit/maximal.hpp"
#include "morreykit/parallel.hpp"

namespace morreykit {
namespace {

// Relative margin for abandoning a radius sweep; far larger than any rounding
// difference between the bound and the candidate values it dominates.
constexpr double kPruneMargin = 1e-9;

// Candidate ordering: larger value, then smaller radius, then smaller center.
struct Candidate {
  double value = -1.0;
  Index center = 0;
  Index radius = 0;
  double level = 0.0;

  bool beats(const Candidate& o) const {
    if (value != o.value) return value > o.value;
    if (radius != o.radius) return radius < o.radius;
    return center < o.center;
  }
};

Candidate merge_candidates(Candidate a, Candidate b) { return b.beats(a) ? b : a; }

struct ScanPlan {
  LatticeSequence x;  // support actually seen by the scan
  Index center_lo = 0;
  Index center_hi = -1;
  IndexInterval hull;
  Index enlarge = 1;
  std::optional<IndexInterval> window;
  IndexInterval region;  // union of all scanned intervals
  bool lower_bound = false;
  bool filtered = false;

  // Filtered scans also reach radius |m|/2 + 1, the smallest radius of a
  // type III interval at center m.
  Index radius_cap(Index m) const {
    Index cover = covering_radius(hull, m);
    if (filtered) cover = std::max(cover, (m < 0 ? -m : m) / 2 + 1);
    Index cap = enlarge * cover + (enlarge - 1);
    if (window) cap = std::min({cap, m - window->lo, window->hi - m});
    return cap;
  }
};

// Builds the center range and radius caps. Filtered scans cannot rely on the
// in-hull domination argument (the dominating interval may be filtered out),
// so they also sweep every center up to 2 max(|lo|, |hi|) + (hi - lo) + 2.
std::optional<ScanPlan> plan_scan(const LatticeSequence& x, bool filtered,
                                  const ScanOptions& options) {
  if (options.enlarge < 1) throw PreconditionError("scan enlargement factor must be >= 1");
  ScanPlan plan;
  plan.window = options.window;
  plan.enlarge = options.enlarge;
  plan.filtered = filtered;
  plan.x = options.window ? x.restricted(*options.window) : x;
  if (plan.x.empty()) return std::nullopt;
  plan.hull = *plan.x.hull();
  const Index lo = plan.hull.lo;
  const Index hi = plan.hull.hi;
  const Index span = hi - lo + 1;
  Index clo = lo;
  Index chi = hi;
  if (filtered) {
    const Index reach = 2 * std::max(std::abs(lo), std::abs(hi)) + (hi - lo) + 2;
    clo = std::min(clo, -reach);
    chi = std::max(chi, reach);
  }
  clo -= (plan.enlarge - 1) * span;
  chi += (plan.enlarge - 1) * span;

  // Region the scan would need without a window; a window that does not
  // contain it (or that hides part of the support) yields a lower bound.
  auto region_of = [&](Index a, Index b, const std::optional<IndexInterval>& win) {
    ScanPlan probe = plan;
    probe.window = win;
    Index rlo = a, rhi = b;
    for (Index m = a; m <= b; ++m) {
      const Index cap = probe.radius_cap(m);
      if (cap < 0) continue;
      rlo = std::min(rlo, m - cap);
      rhi = std::max(rhi, m + cap);
    }
    return IndexInterval{rlo, rhi};
  };
  const IndexInterval full_region = region_of(clo, chi, std::nullopt);

  if (options.window) {
    const IndexInterval& w = *options.window;
    plan.lower_bound = !w.contains(full_region) || plan.x.size() != x.size();
    clo = std::max(clo, w.lo);
    chi = std::min(chi, w.hi);
    plan.region = region_of(clo, chi, options.window);
  } else {
    plan.region = full_region;
  }
  plan.center_lo = clo;
  plan.center_hi = chi;
  return plan;
}

void require_weight_on(const Weight& w, const IndexInterval& region, bool windowed,
                       const char* role) {
  if (w.defined_on(region)) return;
  const std::string msg = std::string(role) + " weight " + w.describe() +
                          " does not cover the scan region " + region.to_string();
  if (windowed) throw DomainError(msg);
  throw UncertifiedDomain(msg + "; supply a search window");
}

void validate_exponents(double p, double q, bool allow_infinite_q) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("norm requires finite p >= 1");
  if (!(q >= p)) throw PreconditionError("norm requires p <= q");
  if (!allow_infinite_q && !std::isfinite(q)) {
    throw PreconditionError("q = infinity is handled by morrey_pinf_norm");
  }
}

// Shared strong-type scan. exponent = p/q - 1 (<= 0) applied to the
// normalizer mass; candidates are compared in p-th power form.
NormResult strong_scan(const LatticeSequence& x, double p, double exponent, const Weight& measure,
                       const Weight& normalizer, const IntervalFilter* keep,
                       const ScanOptions& options) {
  const auto plan = plan_scan(x, keep != nullptr, options);
  NormResult result;
  if (!plan) {
    result.search_window = options.window.value_or(IndexInterval{0, 0});
    return result;
  }
  require_weight_on(normalizer, plan->region, options.window.has_value(), "normalizer");
  require_weight_on(measure, plan->hull, options.window.has_value(), "measure");

  const IndexInterval region = plan->region;
  const auto v = normalizer.values_on(region);
  std::vector<double> t(v.size(), 0.0);
  for (const auto& e : plan->x.entries()) {
    t[static_cast<std::size_t>(e.index - region.lo)] = std::pow(std::abs(e.value), p) * measure(e.index);
  }
  double total = 0.0;
  for (double term : t) total += term;
  const Index base = region.lo;
  auto at = [base](const std::vector<double>& a, Index k) {
    return a[static_cast<std::size_t>(k - base)];
  };

  const Candidate best = parallel_reduce(
      plan->center_lo, plan->center_hi, resolve_threads(options.threads), Candidate{},
      [&](Index mlo, Index mhi) {
        Candidate local;
        for (Index m = mlo; m <= mhi; ++m) {
          const Index cap = plan->radius_cap(m);
          double mass = 0.0;
          double sum = 0.0;
          for (Index n = 0; n <= cap; ++n) {
            if (n == 0) {
              mass = at(v, m);
              sum = at(t, m);
            } else {
              mass += at(v, m - n) + at(v, m + n);
              sum += at(t, m - n) + at(t, m + n);
            }
            // Past this radius the value is at most mass^exponent * total,
            // which only shrinks; stop once it falls clearly below the best.
            if (exponent < 0.0 && local.value > 0.0 &&
                std::pow(mass, exponent) * total < local.value * (1.0 - kPruneMargin)) {
              break;
            }
            if (sum <= 0.0) continue;
            if (keep && !(*keep)(SymmetricInterval{m, n})) continue;
            const double val = exponent == 0.0 ? sum : std::pow(mass, exponent) * sum;
            const Candidate c{val, m, n, 0.0};
            if (c.beats(local)) local = c;
          }
        }
        return local;
      },
      merge_candidates);

  result.search_window = region;
  result.lower_bound = plan->lower_bound;
  if (best.value > 0.0) {
    result.value = std::pow(best.value, 1.0 / p);
    result.witness = {best.center, best.radius};
  }
  return result;
}

}  // namespace

double lp_w_norm(const LatticeSequence& x, double p, const Weight& w) {
  if (!(p >= 1.0)) throw PreconditionError("weighted l^p norm requires p >= 1");
  double s = 0.0;
  for (const auto& e : x.entries()) s += std::pow(std::abs(e.value), p) * w(e.index);
  return std::pow(s, 1.0 / p);
}

NormResult morrey_norm(const LatticeSequence& x, const MorreyParams& params,
                       const ScanOptions& options) {
  validate_exponents(params.p, params.q, false);
  return strong_scan(x, params.p, params.p / params.q - 1.0, params.measure, params.normalizer,
                     nullptr, options);
}

NormResult morrey_norm_filtered(const LatticeSequence& x, const MorreyParams& params,
                                const IntervalFilter& keep, const ScanOptions& options) {
  validate_exponents(params.p, params.q, true);
  const double exponent = std::isfinite(params.q) ? params.p / params.q - 1.0 : -1.0;
  return strong_scan(x, params.p, exponent, params.measure, params.normalizer,
                     &keep, options);
}

NormResult morrey_pinf_norm(const LatticeSequence& x, double p, const Weight& measure,
                            const Weight& normalizer, const ScanOptions& options) {
  validate_exponents(p, kInfinity, true);
  return strong_scan(x, p, -1.0, measure, normalizer, nullptr, options);
}

NormResult weak_morrey_norm(const LatticeSequence& x, double p, double q, const Weight& w,
                            const ScanOptions& options) {
  validate_exponents(p, q, false);
  const auto plan = plan_scan(x, false, options);
  NormResult result;
  if (!plan) {
    result.search_window = options.window.value_or(IndexInterval{0, 0});
    return result;
  }
  require_weight_on(w, plan->region, options.window.has_value(), "measure");

  const IndexInterval region = plan->region;
  const auto v = w.values_on(region);
  const auto& entries = plan->x.entries();
  std::vector<double> entry_weight(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entry_weight[i] = v[static_cast<std::size_t>(entries[i].index - region.lo)];
  }
  const double exponent = 1.0 / q - 1.0 / p;
  auto at = [&](Index k) { return v[static_cast<std::size_t>(k - region.lo)]; };

  // max_a a * w({|x| >= a})^{1/p} over entries [first, last).
  auto level_max = [&](std::size_t first, std::size_t last, double& level) {
    std::vector<std::pair<double, double>> vals;
    vals.reserve(last - first);
    for (std::size_t i = first; i < last; ++i) {
      vals.emplace_back(std::abs(entries[i].value), entry_weight[i]);
    }
    std::sort(vals.begin(), vals.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    double mass = 0.0;
    double best = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      mass += vals[i].second;
      if (i + 1 < vals.size() && vals[i + 1].first == vals[i].first) continue;
      const double cand = vals[i].first * std::pow(mass, 1.0 / p);
      if (cand > best) {
        best = cand;
        level = vals[i].first;
      }
    }
    return best;
  };

  const Candidate best = parallel_reduce(
      plan->center_lo, plan->center_hi, resolve_threads(options.threads), Candidate{},
      [&](Index mlo, Index mhi) {
        Candidate local;
        for (Index m = mlo; m <= mhi; ++m) {
          const Index cap = plan->radius_cap(m);
          // Entries with index in S_{m,n} form the range [first, last).
          auto it = std::lower_bound(entries.begin(), entries.end(), m,
                                     [](const auto& e, Index key) { return e.index < key; });
          std::size_t first = static_cast<std::size_t>(it - entries.begin());
          std::size_t last = first;
          double mass = 0.0;
          double inner = 0.0;
          double level = 0.0;
          for (Index n = 0; n <= cap; ++n) {
            mass = n == 0 ? at(m) : mass + at(m - n) + at(m + n);
            bool changed = false;
            while (first > 0 && entries[first - 1].index >= m - n) {
              --first;
              changed = true;
            }
            while (last < entries.size() && entries[last].index <= m + n) {
              ++last;
              changed = true;
            }
            if (changed) inner = level_max(first, last, level);
            if (inner <= 0.0) continue;
            const Candidate c{std::pow(mass, exponent) * inner, m, n, level};
            if (c.beats(local)) local = c;
          }
        }
        return local;
      },
      merge_candidates);

  result.search_window = region;
  result.lower_bound = plan->lower_bound;
  if (best.value > 0.0) {
    result.value = best.value;
    result.witness = {best.center, best.radius};
    result.level = best.level;
  }
  return result;
}

double layer_cake_eval(const LatticeSequence& x, double p, const Weight& w) {
  if (!(p > 0.0)) throw PreconditionError("layer-cake exponent must be positive");
  std::vector<std::pair<double, double>> vals;
  vals.reserve(x.size());
  for (const auto& e : x.entries()) vals.emplace_back(std::abs(e.value), w(e.index));
  std::sort(vals.begin(), vals.end());
  // Between consecutive distinct levels a_{i-1} < lambda < a_i the super-level
  // set is {|x| >= a_i}; integrate p lambda^{p-1} exactly on each piece.
  double suffix = 0.0;
  for (const auto& v : vals) suffix += v.second;
  double total = 0.0;
  double prev = 0.0;
  std::size_t i = 0;
  while (i < vals.size()) {
    const double a = vals[i].first;
    total += suffix * (std::pow(a, p) - std::pow(prev, p));
    while (i < vals.size() && vals[i].first == a) suffix -= vals[i++].second;
    prev = a;
  }
  return total;
}

}  // namespace morreykit
