#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "morreykit/intervals.hpp"
#include "morreykit/lattice.hpp"
#include "morreykit/weight.hpp"

namespace morreykit {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Exponents and weights of the norm
///   sup_{m,N} v(S_{m,N})^{1/q - 1/p} (sum_{k in S_{m,N}} |x(k)|^p w(k))^{1/p}
/// with w the measure weight and v the normalizing weight.
struct MorreyParams {
  double p = 1.0;
  double q = 1.0;
  Weight measure = Weight::one();
  Weight normalizer = Weight::one();
};

struct NormResult {
  double value = 0.0;
  SymmetricInterval witness;
  std::optional<double> level;  // optimal lambda (as a left limit) for weak norms
  IndexInterval search_window;  // union of every interval scanned
  bool lower_bound = false;     // true when the scan was cut short by a caller window
};

struct ScanOptions {
  // Restrict the supremum to intervals inside this window.
  std::optional<IndexInterval> window;
  // Factor > 1 widens the certified center range and radius cap; used to
  // confirm that the certified region already contains the supremum.
  Index enlarge = 1;
  unsigned threads = 1;
};

using IntervalFilter = std::function<bool(const SymmetricInterval&)>;

double lp_w_norm(const LatticeSequence& x, double p, const Weight& w);

/// Weighted Morrey norm for 1 <= p <= q < infinity.
///
/// Without a window the supremum is exact: only centers inside the support
/// hull [lo, hi] and radii up to max(|lo - m|, |hi - m|) can attain it. A
/// symmetric interval centered outside the hull contains a symmetric interval
/// centered inside it with the same intersection with the support, hence the
/// same p-sum and no larger normalizer mass; past the covering radius the
/// p-sum is frozen while the mass grows. Both steps only use v > 0.
NormResult morrey_norm(const LatticeSequence& x, const MorreyParams& params,
                       const ScanOptions& options = {});

/// Same supremum restricted to intervals accepted by keep(); q may be infinite.
NormResult morrey_norm_filtered(const LatticeSequence& x, const MorreyParams& params,
                                const IntervalFilter& keep, const ScanOptions& options = {});

/// q = infinity: sup v(S)^{-1/p} (sum_S |x|^p w)^{1/p}.
NormResult morrey_pinf_norm(const LatticeSequence& x, double p, const Weight& measure,
                            const Weight& normalizer, const ScanOptions& options = {});

/// sup_{m,N,lambda} w(S)^{1/q-1/p} lambda w({k in S : |x(k)| > lambda})^{1/p}.
///
/// For fixed S the lambda-supremum is a maximum over the distinct values a of
/// |x| on S of a * w({|x| >= a})^{1/p}, reached as lambda -> a from below.
NormResult weak_morrey_norm(const LatticeSequence& x, double p, double q, const Weight& w,
                            const ScanOptions& options = {});

/// p * int_0^inf lambda^{p-1} w({|x| > lambda}) dlambda, evaluated in closed form.
double layer_cake_eval(const LatticeSequence& x, double p, const Weight& w);

}  // namespace morreykit
