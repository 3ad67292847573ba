#include "morreykit/weights.hpp"

#include <cmath>
#include <limits>

#include "morreykit/errors.hpp"
#include "morreykit/parallel.hpp"

namespace morreykit {
namespace {

struct Best {
  double value = -std::numeric_limits<double>::infinity();
  IndexInterval witness;
};

bool better(double value, const IndexInterval& j, const Best& b) {
  if (value != b.value) return value > b.value;
  if (j.size() != b.witness.size()) return j.size() < b.witness.size();
  return j.lo > b.witness.lo;
}

Best merge_best(Best a, Best b) { return better(b.value, b.witness, a) ? b : a; }

// Runs row(lo, best) for every left endpoint of the window; each row extends
// [lo, hi] one point at a time with running sums, so the value of a given
// interval does not depend on the window it is scanned in.
template <class RowEval>
Best scan_window(const IndexInterval& window, unsigned threads, RowEval row) {
  return parallel_reduce(
      window.lo, window.hi, resolve_threads(threads), Best{},
      [&](Index lo_begin, Index lo_end) {
        Best best;
        for (Index lo = lo_begin; lo <= lo_end; ++lo) row(lo, best);
        return best;
      },
      merge_best);
}

void require_window_weight(const Weight& w, const IndexInterval& window) {
  if (!w.defined_on(window)) {
    throw DomainError("weight " + w.describe() + " is not defined on window " + window.to_string());
  }
}

}  // namespace

Weight power_weight(double beta) { return Weight::power(beta); }

ApCharacteristic a1_norm_window(const Weight& w, const IndexInterval& window, unsigned threads) {
  require_window_weight(w, window);
  const auto values = w.values_on(window);
  const Best best = scan_window(window, threads, [&](Index lo, Best& b) {
    double running_min = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (Index hi = lo; hi <= window.hi; ++hi) {
      const double x = values[static_cast<std::size_t>(hi - window.lo)];
      running_min = std::min(running_min, x);
      sum += x;
      const IndexInterval j{lo, hi};
      const double v = sum / static_cast<double>(j.size()) / running_min;
      if (better(v, j, b)) b = {v, j};
    }
  });
  return {1.0, window, best.value, best.witness};
}

ApCharacteristic ap_norm_window(const Weight& w, double p, const IndexInterval& window,
                                unsigned threads) {
  if (!(p > 1.0)) throw PreconditionError("A_p characteristic requires p > 1");
  require_window_weight(w, window);
  const auto values = w.values_on(window);
  std::vector<double> dual(values.size());
  const double e = -1.0 / (p - 1.0);
  for (std::size_t i = 0; i < values.size(); ++i) dual[i] = std::pow(values[i], e);
  const bool square = (p == 2.0);
  const Best best = scan_window(window, threads, [&](Index lo, Best& b) {
    double sum = 0.0;
    double dual_sum = 0.0;
    for (Index hi = lo; hi <= window.hi; ++hi) {
      const auto i = static_cast<std::size_t>(hi - window.lo);
      sum += values[i];
      dual_sum += dual[i];
      const IndexInterval j{lo, hi};
      const double n = static_cast<double>(j.size());
      const double avg = sum / n;
      const double dual_avg = dual_sum / n;
      const double v = square ? avg * dual_avg : avg * std::pow(dual_avg, p - 1.0);
      if (better(v, j, b)) b = {v, j};
    }
  });
  return {p, window, best.value, best.witness};
}

ApCharacteristic muckenhoupt_characteristic(const Weight& w, double p, const IndexInterval& window,
                                            unsigned threads) {
  if (p == 1.0) return a1_norm_window(w, window, threads);
  return ap_norm_window(w, p, window, threads);
}

RhCharacteristic rh_norm_window(const Weight& w, double r, const IndexInterval& window,
                                unsigned threads) {
  if (!(r > 1.0)) throw PreconditionError("reverse Hoelder characteristic requires r > 1");
  require_window_weight(w, window);
  const auto values = w.values_on(window);
  std::vector<double> powered(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) powered[i] = std::pow(values[i], r);
  const Best best = scan_window(window, threads, [&](Index lo, Best& b) {
    double sum = 0.0;
    double power_sum = 0.0;
    for (Index hi = lo; hi <= window.hi; ++hi) {
      const auto i = static_cast<std::size_t>(hi - window.lo);
      sum += values[i];
      power_sum += powered[i];
      const IndexInterval j{lo, hi};
      const double n = static_cast<double>(j.size());
      const double v = std::pow(n, 1.0 - 1.0 / r) * std::pow(power_sum, 1.0 / r) / sum;
      if (better(v, j, b)) b = {v, j};
    }
  });
  return {r, window, best.value, best.witness};
}

Weight reflect(const Weight& w) {
  if (w.kind() != Weight::Kind::Tabulated) return w;
  const IndexInterval dom = *w.domain();
  if (!dom.contains(0)) {
    throw DomainError("reflection needs the weight defined at 0; table covers " + dom.to_string());
  }
  const Index n = dom.hi;
  std::vector<double> mirrored(static_cast<std::size_t>(2 * n + 1));
  for (Index k = -n; k <= n; ++k) {
    mirrored[static_cast<std::size_t>(k + n)] = w.table()[static_cast<std::size_t>((k < 0 ? -k : k) - dom.lo)];
  }
  return Weight::tabulated(-n, std::move(mirrored)).scaled(w.scale());
}

VerificationReport doubling_bound_check(const Weight& w, double p, const SymmetricInterval& s,
                                        Index lambda, const IndexInterval& window,
                                        unsigned threads) {
  if (!(p >= 1.0)) throw PreconditionError("doubling check requires p >= 1");
  const SymmetricInterval big = dilate(s, lambda);
  if (!window.contains(big.as_interval())) {
    throw PreconditionError("dilated interval " + big.as_interval().to_string() +
                            " escapes window " + window.to_string());
  }
  const ApCharacteristic a = muckenhoupt_characteristic(w, p, window, threads);
  const double k = std::pow(a.value, 1.0 / p);
  const double c = std::pow(1.5 * k * static_cast<double>(lambda), p);

  VerificationReport r;
  r.check_id = "doubling";
  r.params = {{"weight", w.describe()}, {"p", p}, {"m", s.center}, {"N", s.radius},
              {"lambda", lambda}, {"window", {window.lo, window.hi}}};
  r.lhs = weight_mass(w, big.as_interval());
  r.constant = c;
  r.rhs = c * weight_mass(w, s.as_interval());
  r.pass = leq_with_rounding(r.lhs, r.rhs);
  r.witness = {{"A", a.value}, {"K", k}, {"A_witness", {a.witness.lo, a.witness.hi}}};
  return r;
}

}  // namespace morreykit
