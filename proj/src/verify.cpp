#include "morreykit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "morreykit/errors.hpp"
#include "morreykit/maximal.hpp"

namespace morreykit {
namespace {

nlohmann::json interval_json(const IndexInterval& j) { return nlohmann::json::array({j.lo, j.hi}); }

double averaging_constant(const ApCharacteristic& a) {
  return a.p == 1.0 ? a.value : std::pow(a.value, 1.0 / a.p);
}

void require_support_inside(const LatticeSequence& x, const IndexInterval& window, const char* what) {
  if (!x.empty() && !window.contains(*x.hull())) {
    throw PreconditionError(std::string(what) + ": window " + window.to_string() +
                            " must contain the support hull " + x.hull()->to_string());
  }
}

double weighted_power_sum(const MaximalProfile& m, const Weight& w, double p) {
  double s = 0.0;
  for (Index k = m.window.lo; k <= m.window.hi; ++k) s += std::pow(m.at(k), p) * w(k);
  return s;
}

}  // namespace

nlohmann::json ConstantsLedger::to_json() const {
  nlohmann::json f = nlohmann::json::object();
  for (const auto& [name, formula] : formulas) f[name] = formula;
  return {{"window", interval_json(window)}, {"p", p},   {"A", a},
          {"A_witness", interval_json(a_witness)}, {"K", k},   {"C1", c1},
          {"C2", c2}, {"C_weak", c_weak}, {"C_strong", c_strong}, {"formulas", f}};
}

ConstantsLedger trace_constants(const Weight& w, double p, const IndexInterval& window,
                                unsigned threads) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("constants need finite p >= 1");
  const ApCharacteristic a = muckenhoupt_characteristic(w, p, window, threads);
  ConstantsLedger c;
  c.window = window;
  c.p = p;
  c.a = a.value;
  c.a_witness = a.witness;
  c.k = averaging_constant(a);
  c.c1 = 2.0 * std::pow(7.5 * c.k, p);
  c.c2 = std::pow(3.0 * c.k, p);
  c.c_weak = c.c1 * c.c2;
  c.c_strong = p > 1.0 ? std::pow(2.0 * c.c_weak * std::pow(2.0, p - 1.0) * p / (p - 1.0), 1.0 / p)
                       : kInfinity;
  c.formulas = {
      {"K", p == 1.0 ? "A_1" : "A_p^(1/p)"},
      {"C1", "2*((15/2)*K)^p"},
      {"C2", "(3*K)^p"},
      {"C_weak", "C1*C2"},
      {"C_strong", "(2*C_weak*2^(p-1)*p/(p-1))^(1/p)"},
  };
  return c;
}

VerificationReport verify_weak_11(const LatticeSequence& x, const Weight& w, double t,
                                  const IndexInterval& window, double p, unsigned threads) {
  if (!(t > 0.0)) throw PreconditionError("weak-type check requires t > 0");
  if (x.empty()) throw PreconditionError("weak-type check requires a nonzero sequence");
  require_support_inside(x, window, "weak-type check");
  const IndexInterval hull = *x.hull();
  const double norm1 = lp_w_norm(x, 1.0, w);

  // Envelope at the first point past each end of the window.
  const double env_right =
      norm1 / weight_mass(w, SymmetricInterval(window.hi + 1, window.hi + 1 - hull.hi).as_interval());
  const double env_left =
      norm1 / weight_mass(w, SymmetricInterval(window.lo - 1, hull.lo - window.lo + 1).as_interval());
  if (env_right > t || env_left > t) {
    throw PreconditionError("level set {M_w x > " + format_real(t) +
                            "} is not certified inside window " + window.to_string() +
                            "; widen the window");
  }

  const ConstantsLedger c = trace_constants(w, p, window, threads);
  const MaximalProfile m = weighted_maximal(x, w, window, threads);
  double level_mass = 0.0;
  Index count = 0;
  for (Index k = window.lo; k <= window.hi; ++k) {
    if (m.at(k) > t) {
      level_mass += w(k);
      ++count;
    }
  }

  VerificationReport r;
  r.check_id = "weak_11";
  r.params = {{"weight", w.describe()}, {"t", t}, {"p", p}, {"window", interval_json(window)}};
  r.lhs = t * level_mass;
  r.constant = c.c_weak;
  r.rhs = c.c_weak * norm1;
  r.pass = leq_with_rounding(r.lhs, r.rhs);
  r.witness = {{"level_set_points", count},
               {"level_set_mass", level_mass},
               {"empirical_constant", r.lhs / norm1},
               {"envelope", {env_left, env_right}},
               {"ledger", c.to_json()}};
  r.note = "lhs = t w({M_w x > t}), rhs = C_weak ||x||_{l^1_w}";
  return r;
}

VerificationReport verify_strong_pp(const LatticeSequence& x, const Weight& w, double p,
                                    const IndexInterval& window, unsigned threads) {
  if (!(p > 1.0)) throw PreconditionError("strong-type check requires p > 1");
  const ConstantsLedger c = trace_constants(w, p, window, threads);
  const MaximalProfile m = weighted_maximal(x, w, window, threads);
  VerificationReport r;
  r.check_id = "strong_pp";
  r.params = {{"weight", w.describe()}, {"p", p}, {"window", interval_json(window)}};
  r.lhs = std::pow(weighted_power_sum(m, w, p), 1.0 / p);
  r.constant = c.c_strong;
  const double norm = lp_w_norm(x, p, w);
  r.rhs = c.c_strong * norm;
  r.pass = leq_with_rounding(r.lhs, r.rhs);
  r.witness = {{"empirical_constant", norm > 0.0 ? r.lhs / norm : 0.0}, {"ledger", c.to_json()}};
  r.note = "lhs = ||M_w x||_{l^p_w} over the window, rhs = C_strong ||x||_{l^p_w}";
  return r;
}

VerificationReport verify_averaging_bound(const LatticeSequence& x, const Weight& w, double p,
                                          const IndexInterval& j, const IndexInterval& window,
                                          unsigned threads) {
  if (!window.contains(j)) {
    throw PreconditionError("interval " + j.to_string() + " escapes window " + window.to_string());
  }
  const ApCharacteristic a = muckenhoupt_characteristic(w, p, window, threads);
  const double k = averaging_constant(a);
  double abs_sum = 0.0;
  double pow_sum = 0.0;
  for (const auto& e : x.entries_in(j)) {
    abs_sum += std::abs(e.value);
    pow_sum += std::pow(std::abs(e.value), p) * w(e.index);
  }
  VerificationReport r;
  r.check_id = "averaging";
  r.params = {{"weight", w.describe()}, {"p", p}, {"J", interval_json(j)},
              {"window", interval_json(window)}};
  r.lhs = abs_sum / static_cast<double>(j.size());
  r.constant = k;
  r.rhs = k * std::pow(pow_sum / weight_mass(w, j), 1.0 / p);
  r.pass = leq_with_rounding(r.lhs, r.rhs);
  r.witness = {{"A", a.value}, {"A_witness", interval_json(a.witness)}};
  return r;
}

VerificationReport verify_pinf_bound(const LatticeSequence& x, const Weight& w, double p,
                                     const IndexInterval& window, unsigned threads) {
  require_support_inside(x, window, "l^p_inf bound");
  const ApCharacteristic a = muckenhoupt_characteristic(w, p, window, threads);
  const double k = averaging_constant(a);
  const MaximalProfile m = hl_maximal(x, window, threads);
  ScanOptions opts;
  opts.window = window;
  opts.threads = threads;
  const NormResult norm = morrey_pinf_norm(x, p, w, w, opts);
  VerificationReport r;
  r.check_id = "pinf_to_linf";
  r.params = {{"weight", w.describe()}, {"p", p}, {"window", interval_json(window)}};
  r.lhs = m.max_value();
  r.constant = k;
  r.rhs = k * norm.value;
  r.pass = leq_with_rounding(r.lhs, r.rhs);
  r.witness = {{"norm_witness", {norm.witness.center, norm.witness.radius}}, {"A", a.value}};
  r.note = "lhs = max Mx, rhs = K ||x||_{l^p_inf(w)} over intervals inside the window";
  return r;
}

VerificationReport verify_reflection_bound(const Weight& w, double p, Index n, unsigned threads) {
  if (n < 0) throw PreconditionError("reflection bound needs n >= 0");
  const IndexInterval half{0, n};
  const IndexInterval full{-n, n};
  const Weight reflected = reflect(w);
  const ApCharacteristic a_half = muckenhoupt_characteristic(w, p, half, threads);
  const ApCharacteristic a_full = muckenhoupt_characteristic(reflected, p, full, threads);
  VerificationReport r;
  r.check_id = "reflection";
  r.params = {{"weight", w.describe()}, {"p", p}, {"n", n}};
  r.constant = p == 1.0 ? 4.0 : 4.0 * std::pow(2.0, p - 1.0);
  r.lhs = a_full.value;
  r.rhs = r.constant * a_half.value;
  r.pass = leq_with_rounding(r.lhs, r.rhs);
  r.witness = {{"full_witness", interval_json(a_full.witness)},
               {"half_witness", interval_json(a_half.witness)}};
  return r;
}

VerificationReport verify_rh_subset(const Weight& w, double r_exp, std::span<const Index> subset,
                                    const IndexInterval& j, const IndexInterval& window,
                                    unsigned threads) {
  if (!window.contains(j)) {
    throw PreconditionError("interval " + j.to_string() + " escapes window " + window.to_string());
  }
  std::vector<Index> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end() ||
      !j.contains(IndexInterval{s.front(), s.back()})) {
    throw PreconditionError("subset must be nonempty, without repeats and inside " + j.to_string());
  }
  const RhCharacteristic rh = rh_norm_window(w, r_exp, window, threads);
  VerificationReport r;
  r.check_id = "rh_subset";
  r.params = {{"weight", w.describe()}, {"r", r_exp}, {"J", interval_json(j)},
              {"subset_size", s.size()}, {"window", interval_json(window)}};
  r.lhs = weight_mass(w, s) / weight_mass(w, j);
  r.constant = rh.value;
  r.rhs = rh.value * std::pow(static_cast<double>(s.size()) / static_cast<double>(j.size()),
                              1.0 - 1.0 / r_exp);
  r.pass = leq_with_rounding(r.lhs, r.rhs);
  r.witness = {{"rh_witness", interval_json(rh.witness)}};
  return r;
}

VerificationReport verify_morrey_boundedness(const LatticeSequence& x, double p, double q,
                                             const Weight& w, const IndexInterval& window,
                                             const BoundednessOptions& options) {
  if (!(1.0 < p && p <= q && std::isfinite(q))) {
    throw PreconditionError("Morrey boundedness check requires 1 < p <= q < infinity");
  }
  if (x.empty()) throw PreconditionError("Morrey boundedness check requires a nonzero sequence");
  const MorreyParams params{p, q, w, w};
  ScanOptions scan;
  scan.threads = options.threads;
  const double base = morrey_norm(x, params, scan).value;
  const Index half = (window.size() + 1) / 2;
  const IndexInterval doubled{window.lo - half, window.hi + half};
  auto ratio_on = [&](const IndexInterval& win) {
    const LatticeSequence mx = hl_maximal(x, win, options.threads).to_sequence();
    return morrey_norm(mx, params, scan).value / base;
  };
  const double r1 = ratio_on(window);
  const double r2 = ratio_on(doubled);
  const double change = std::abs(r2 - r1) / r1;

  VerificationReport r;
  r.check_id = "morrey_boundedness";
  r.params = {{"weight", w.describe()}, {"p", p}, {"q", q}, {"window", interval_json(window)}};
  r.lhs = r1;
  r.rhs = options.budget;
  r.constant = options.budget;
  r.pass = r1 <= options.budget && r2 <= options.budget && change <= options.stability;
  r.witness = {{"ratio_W", r1}, {"ratio_2W", r2}, {"doubled_window", interval_json(doubled)},
               {"relative_change", change}, {"stability_limit", options.stability}};
  r.note = "lhs = ||Mx on W|| / ||x|| in l^p_q(w), rhs = ratio budget";
  return r;
}

IntervalType classify_interval(const SymmetricInterval& s) {
  if (s.center == 0) return IntervalType::I;
  const Index m = s.center < 0 ? -s.center : s.center;
  return s.radius <= m / 2 ? IntervalType::II : IntervalType::III;
}

std::string to_string(IntervalType type) {
  switch (type) {
    case IntervalType::I: return "I";
    case IntervalType::II: return "II";
    case IntervalType::III: return "III";
  }
  return "?";
}

NormResult restricted_morrey_norm(const LatticeSequence& x, const MorreyParams& params,
                                  const std::set<IntervalType>& types, const ScanOptions& options) {
  if (types.empty()) throw PreconditionError("restricted norm needs at least one interval type");
  return morrey_norm_filtered(
      x, params, [&types](const SymmetricInterval& s) { return types.count(classify_interval(s)) > 0; },
      options);
}

VerificationReport necessity_probe(Index n, double p, double q, double beta,
                                   const IndexInterval& window, unsigned threads) {
  if (n < 1) throw PreconditionError("necessity probe needs N >= 1");
  if (!(1.0 < p && p < q)) throw PreconditionError("necessity probe needs 1 < p < q");
  const IndexInterval reach{-3 * n, 3 * n};
  if (!window.contains(reach)) {
    throw PreconditionError("window " + window.to_string() + " must contain S_{0,3N} = " +
                            reach.to_string());
  }
  const IndexInterval base{-n, n};
  const MaximalProfile m = hl_maximal(LatticeSequence::indicator(base), window, threads);

  // Probed intervals S_{m,l}, 1 <= |m| <= 2N, l <= floor(|m|/2), cover
  // [-3N, -1] and [1, 3N]. The bound is checked in integers at the optimal
  // radius: 7 |S_{k,r} cap S_{0,N}| >= 2 (2r + 1).
  Index failures = 0;
  double min_value = kInfinity;
  Index argmin = 0;
  for (Index k = -3 * n; k <= 3 * n; ++k) {
    if (k == 0) continue;
    const Index r = m.radius_at(k);
    const Index count = std::max<Index>(0, std::min(k + r, n) - std::max(k - r, -n) + 1);
    if (7 * count < 2 * (2 * r + 1)) ++failures;
    if (m.at(k) < min_value) {
      min_value = m.at(k);
      argmin = k;
    }
  }

  double probe = 0.0;
  Index probe_m = 0;
  Index probe_l = 0;
  const double nf = static_cast<double>(n);
  for (Index mm = 1; mm <= 2 * n; ++mm) {
    // Symmetric in m; the quantity increases with l.
    const Index l = mm / 2;
    const double v = std::pow(nf, -(beta + 1.0) / q) * std::pow(static_cast<double>(mm), beta / q) *
                     std::pow(static_cast<double>(2 * l + 1), 1.0 / q);
    if (v > probe) {
      probe = v;
      probe_m = mm;
      probe_l = l;
    }
  }

  VerificationReport r;
  r.check_id = "necessity_probe";
  r.params = {{"N", n}, {"p", p}, {"q", q}, {"beta", beta}, {"window", interval_json(window)}};
  r.lhs = min_value;
  r.rhs = 2.0 / 7.0;
  r.constant = 2.0 / 7.0;
  r.pass = failures == 0;
  r.witness = {{"min_at", argmin},
               {"failures", failures},
               {"probe_max", probe},
               {"probe_m", probe_m},
               {"probe_l", probe_l}};
  r.note = "lhs = min M1_{S_{0,N}} over probed points, rhs = 2/7 (compared in integers)";
  return r;
}

LadderResult necessity_ladder(const std::vector<Index>& ns, double p, double q, double beta,
                              unsigned threads) {
  LadderResult out;
  for (Index n : ns) {
    out.steps.push_back(necessity_probe(n, p, q, beta, IndexInterval{-3 * n, 3 * n}, threads));
    out.values.push_back(out.steps.back().witness["probe_max"].get<double>());
  }
  for (std::size_t i = 1; i < out.values.size(); ++i) {
    const double ratio = out.values[i] / out.values[i - 1];
    out.ratios.push_back(ratio);
    if (beta <= -1.0 && !(ratio > 1.0)) {
      out.steps[i].pass = false;
      out.steps[i].note += "; probe quantity did not grow";
    }
  }
  return out;
}

std::vector<SweepMember> default_sweep_family(Index w, std::uint64_t seed, int random_count) {
  std::vector<SweepMember> family;
  family.push_back({"delta_0", LatticeSequence::delta(0)});
  const Index r = w / 8;
  family.push_back({"indicator_S0_" + std::to_string(r), LatticeSequence::indicator({-r, r})});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(-10, 10);
  for (int i = 0; i < random_count; ++i) {
    std::vector<double> dense(17);
    for (double& v : dense) v = value(rng);
    if (std::all_of(dense.begin(), dense.end(), [](double v) { return v == 0.0; })) dense[8] = 1.0;
    family.push_back({"random_" + std::to_string(i), LatticeSequence::from_dense(-8, dense)});
  }
  return family;
}

SweepResult beta_sweep(double p, double q, const std::vector<double>& betas,
                       const std::vector<Index>& ladder, const SweepOptions& options) {
  if (!(1.0 < p && p < q && std::isfinite(q))) {
    throw PreconditionError("beta sweep requires 1 < p < q < infinity");
  }
  for (Index w : ladder) {
    if (w < 8) throw PreconditionError("ladder windows must be at least 8");
  }
  SweepResult out;
  out.p = p;
  out.q = q;
  out.betas = betas;
  out.ladder = ladder;
  ScanOptions scan;
  scan.threads = options.threads;

  // M does not depend on beta; evaluate it once per window and member.
  std::vector<std::vector<SweepMember>> families;
  std::vector<std::vector<LatticeSequence>> maximal;
  for (Index w : ladder) {
    families.push_back(default_sweep_family(w, options.seed, options.random_count));
    std::vector<LatticeSequence> row;
    for (const auto& member : families.back()) {
      row.push_back(hl_maximal(member.x, {-w, w}, options.threads).to_sequence());
    }
    maximal.push_back(std::move(row));
  }

  for (double beta : betas) {
    const Weight w = Weight::power(beta);
    const MorreyParams params{p, q, w, w};
    std::vector<double> est;
    std::vector<std::string> drv;
    std::vector<std::map<std::string, double>> members;
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      double best = -1.0;
      std::string driver;
      std::map<std::string, double> per;
      for (std::size_t f = 0; f < families[i].size(); ++f) {
        const double denom = morrey_norm(families[i][f].x, params, scan).value;
        const double ratio = morrey_norm(maximal[i][f], params, scan).value / denom;
        per[families[i][f].name] = ratio;
        if (ratio > best) {
          best = ratio;
          driver = families[i][f].name;
        }
      }
      est.push_back(best);
      drv.push_back(driver);
      members.push_back(std::move(per));
    }
    std::vector<double> ratios;
    for (std::size_t i = 1; i < est.size(); ++i) {
      ratios.push_back(est[i - 1] > 0.0 ? est[i] / est[i - 1] : kInfinity);
    }
    out.estimates.push_back(std::move(est));
    out.drivers.push_back(std::move(drv));
    out.member_estimates.push_back(std::move(members));
    out.ratios.push_back(std::move(ratios));
  }
  return out;
}

void SweepResult::write_csv(std::ostream& os) const {
  os << "beta,W,estimate,growth_ratio,driver,delta_0,indicator\n";
  for (std::size_t b = 0; b < betas.size(); ++b) {
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      const auto& per = member_estimates[b][i];
      double indicator = 0.0;
      for (const auto& [name, v] : per) {
        if (name.rfind("indicator", 0) == 0) indicator = v;
      }
      os << format_real(betas[b]) << ',' << ladder[i] << ',' << format_real(estimates[b][i]) << ','
         << (i == 0 ? std::string() : format_real(ratios[b][i - 1])) << ',' << drivers[b][i] << ','
         << format_real(per.at("delta_0")) << ',' << format_real(indicator) << '\n';
    }
  }
}

double delta_growth_exponent(double beta, double q) { return (beta + 1.0) / q - 1.0; }

VerificationReport lemma_power_avg_check(const LatticeSequence& x, double beta, double p, double q,
                                         const SymmetricInterval& s, const IndexInterval& window,
                                         unsigned threads) {
  if (!window.contains(s.as_interval())) {
    throw PreconditionError("interval escapes window " + window.to_string());
  }
  const IntervalType type = classify_interval(s);
  if (type == IntervalType::III) {
    throw PreconditionError("averaging lemma covers type I and type II intervals only");
  }
  if (type == IntervalType::I && !(-1.0 < beta && beta < q - 1.0)) {
    throw PreconditionError("type I case requires -1 < beta < q - 1");
  }
  const Weight w = Weight::power(beta);
  ScanOptions scan;
  scan.threads = threads;
  const double norm = morrey_norm(x, MorreyParams{p, q, w, w}, scan).value;
  double abs_sum = 0.0;
  for (const auto& e : x.entries_in(s.as_interval())) abs_sum += std::abs(e.value);
  const double size = static_cast<double>(s.size());
  const double factor =
      type == IntervalType::II
          ? std::pow(static_cast<double>(std::abs(s.center)), -beta / q) * std::pow(size, -1.0 / q)
          : std::pow(size, -(1.0 + beta) / q);

  VerificationReport r;
  r.check_id = "power_avg_lemma";
  r.params = {{"beta", beta}, {"p", p},           {"q", q},
              {"m", s.center}, {"N", s.radius}, {"type", to_string(type)}};
  r.lhs = abs_sum / size;
  r.rhs = factor * norm;
  r.constant = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  r.pass = true;
  r.witness = {{"ratio", r.constant}, {"morrey_norm", norm}};
  r.note = "records avg_S |x| / (bound without C)";
  return r;
}

LadderResult lemma_power_avg_ladder(const LatticeSequence& x, double beta, double p, double q,
                                    const SymmetricInterval& s, int steps, unsigned threads) {
  LadderResult out;
  for (int k = 0; k <= steps; ++k) {
    const SymmetricInterval sk{s.center << k, s.radius << k};
    out.steps.push_back(lemma_power_avg_check(x, beta, p, q, sk, sk.as_interval(), threads));
    out.values.push_back(out.steps.back().constant);
  }
  for (std::size_t i = 1; i < out.values.size(); ++i) {
    out.ratios.push_back(out.values[i - 1] > 0.0 ? out.values[i] / out.values[i - 1] : kInfinity);
  }
  const double first = out.values.front();
  for (std::size_t i = 1; i < out.steps.size(); ++i) {
    if (!(out.values[i] <= 2.0 * first)) {
      out.steps[i].pass = false;
      out.steps[i].note += "; ratio exceeds twice the first step";
    }
  }
  return out;
}

}  // namespace morreykit
