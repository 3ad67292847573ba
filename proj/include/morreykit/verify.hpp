#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "morreykit/intervals.hpp"
#include "morreykit/lattice.hpp"
#include "morreykit/norms.hpp"
#include "morreykit/report.hpp"
#include "morreykit/weight.hpp"
#include "morreykit/weights.hpp"

namespace morreykit {

/// Constants of the weak and strong maximal inequalities, traced from the
/// characteristic of the weight on a window. K is the averaging constant:
///   avg_J |f| <= K (w(J)^{-1} sum_J |f|^p w)^{1/p}  for J inside the window.
struct ConstantsLedger {
  IndexInterval window;
  double p = 1.0;
  double a = 1.0;  // A_p (or A_1) characteristic on the window
  IndexInterval a_witness;
  double k = 1.0;
  double c1 = 1.0;        // level-set constant
  double c2 = 1.0;        // dilation constant, w(3I) <= c2 w(I)
  double c_weak = 1.0;    // t w({M_w x > t}) <= c_weak ||x||_{l^1_w}
  double c_strong = 1.0;  // ||M_w x||_{l^p_w} <= c_strong ||x||_{l^p_w}
  std::map<std::string, std::string> formulas;

  nlohmann::json to_json() const;
};

ConstantsLedger trace_constants(const Weight& w, double p, const IndexInterval& window,
                                unsigned threads = 1);

/// t w({M_w x > t}) <= c_weak ||x||_{l^1_w} with the level set taken over Z.
/// The window must contain the support; points outside it are certified
/// below t by the envelope ||x||_{l^1_w} / w(S_{k, dist(k, hull)}), which
/// decreases away from the hull. PreconditionError if it cannot be certified.
/// The weight is assumed in A_p; p = 2 unless given.
VerificationReport verify_weak_11(const LatticeSequence& x, const Weight& w, double t,
                                  const IndexInterval& window, double p = 2.0,
                                  unsigned threads = 1);

/// ||M_w x restricted to the window||_{l^p_w} <= c_strong ||x||_{l^p_w}.
VerificationReport verify_strong_pp(const LatticeSequence& x, const Weight& w, double p,
                                    const IndexInterval& window, unsigned threads = 1);

/// avg_J |x| <= K (w(J)^{-1} sum_J |x|^p w)^{1/p} for an interval J inside the window.
VerificationReport verify_averaging_bound(const LatticeSequence& x, const Weight& w, double p,
                                          const IndexInterval& j, const IndexInterval& window,
                                          unsigned threads = 1);

/// max Mx <= K ||x||_{l^p_inf(w)}, the norm scanned over intervals inside the window.
VerificationReport verify_pinf_bound(const LatticeSequence& x, const Weight& w, double p,
                                     const IndexInterval& window, unsigned threads = 1);

/// A_p of the reflected weight on [-n, n] against 4 * 2^{p-1} times A_p of
/// the weight on [0, n] (4 times A_1 when p == 1). The weight is read on [0, n].
VerificationReport verify_reflection_bound(const Weight& w, double p, Index n,
                                           unsigned threads = 1);

/// w(S) / w(J) <= RH_r (|S| / |J|)^{1 - 1/r} for S inside J inside the window.
VerificationReport verify_rh_subset(const Weight& w, double r, std::span<const Index> subset,
                                    const IndexInterval& j, const IndexInterval& window,
                                    unsigned threads = 1);

struct BoundednessOptions {
  double budget = 1e3;
  double stability = 0.10;  // allowed relative change of the ratio from W to 2W
  unsigned threads = 1;
};

/// Ratio ||Mx on W||_{l^p_q(w)} / ||x||_{l^p_q(w)}, checked against a budget
/// and for stability when W is doubled about its center.
VerificationReport verify_morrey_boundedness(const LatticeSequence& x, double p, double q,
                                             const Weight& w, const IndexInterval& window,
                                             const BoundednessOptions& options = {});

enum class IntervalType { I, II, III };

IntervalType classify_interval(const SymmetricInterval& s);
std::string to_string(IntervalType type);

/// Morrey supremum over intervals of the given types only.
NormResult restricted_morrey_norm(const LatticeSequence& x, const MorreyParams& params,
                                  const std::set<IntervalType>& types,
                                  const ScanOptions& options = {});

/// Lower bound M 1_{S_{0,N}} >= 2/7 on every probed interval S_{m,l},
/// 1 <= |m| <= 2N, l <= floor(|m|/2), plus the maximal probe quantity
/// N^{-(beta+1)/q} |m|^{beta/q} (2l+1)^{1/q}.
VerificationReport necessity_probe(Index n, double p, double q, double beta,
                                   const IndexInterval& window, unsigned threads = 1);

struct LadderResult {
  std::vector<VerificationReport> steps;
  std::vector<double> values;
  std::vector<double> ratios;  // values[i + 1] / values[i]
};

/// Probe reports along N in ns; for beta <= -1 every step must grow.
LadderResult necessity_ladder(const std::vector<Index>& ns, double p, double q, double beta,
                              unsigned threads = 1);

struct SweepMember {
  std::string name;
  LatticeSequence x;
};

/// {delta_0, 1_{S_{0,W/8}}} and `random_count` sequences with support in
/// [-8, 8] and integer values in [-10, 10].
std::vector<SweepMember> default_sweep_family(Index w, std::uint64_t seed, int random_count = 20);

struct SweepResult {
  double p = 2.0;
  double q = 3.0;
  std::vector<double> betas;
  std::vector<Index> ladder;
  // estimates[b][i]: max over the family at beta b and window [-W_i, W_i].
  std::vector<std::vector<double>> estimates;
  std::vector<std::vector<std::string>> drivers;  // family member attaining the max
  // member_estimates[b][i][name]
  std::vector<std::vector<std::map<std::string, double>>> member_estimates;
  std::vector<std::vector<double>> ratios;  // estimates[b][i + 1] / estimates[b][i]

  void write_csv(std::ostream& os) const;
};

struct SweepOptions {
  std::uint64_t seed = 1;
  int random_count = 20;
  unsigned threads = 1;
};

/// Operator-norm estimates of M on l^p_q(w), w = v = Power(beta).
SweepResult beta_sweep(double p, double q, const std::vector<double>& betas,
                       const std::vector<Index>& ladder, const SweepOptions& options = {});

/// Growth exponent of the delta_0 member at exterior beta >= q - 1:
/// ||M delta_0 on [-W, W]|| / ||delta_0|| ~ W^{(beta+1)/q - 1}.
double delta_growth_exponent(double beta, double q);

/// Ratio avg_S |x| / bound for the power-weight averaging lemma: bound is
/// |m|^{-beta/q} |S|^{-1/q} ||x|| on type II and |S|^{-(1+beta)/q} ||x|| on
/// type I, ||x|| the Morrey norm with w = v = Power(beta). Type III is rejected.
VerificationReport lemma_power_avg_check(const LatticeSequence& x, double beta, double p, double q,
                                         const SymmetricInterval& s, const IndexInterval& window,
                                         unsigned threads = 1);

/// The lemma ratio along S_{2^k m, 2^k N}, k = 0..steps; passes when no
/// ratio exceeds twice the first.
LadderResult lemma_power_avg_ladder(const LatticeSequence& x, double beta, double p, double q,
                                    const SymmetricInterval& s, int steps, unsigned threads = 1);

}  // namespace morreykit
