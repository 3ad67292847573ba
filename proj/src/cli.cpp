#include "morreykit/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "morreykit/czd.hpp"
#include "morreykit/errors.hpp"
#include "morreykit/io.hpp"
#include "morreykit/maximal.hpp"
#include "morreykit/norms.hpp"
#include "morreykit/parallel.hpp"
#include "morreykit/verify.hpp"
#include "morreykit/weights.hpp"

namespace morreykit::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string seq;
  std::string weight = "one";
  double beta = 0.0;
  double p = 1.0;
  std::string q = "inf";
  std::optional<double> t;
  Index lambda = 2;
  double r = 2.0;
  std::string window;
  std::string out;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string betas = "-1.5:3.0:0.25";
  std::string ladder;
  int level_cap = kDefaultCzLevelCap;
  int instances = 20;
};

IndexInterval parse_window(const std::string& s) {
  const auto colon = s.find(':', s.empty() || s[0] != '-' ? 0 : 1);
  if (colon == std::string::npos) throw UsageError("--window: expected lo:hi");
  try {
    std::size_t used = 0;
    const Index lo = std::stoll(s.substr(0, colon), &used);
    if (used != colon) throw UsageError("--window: bad lower bound");
    const std::string rest = s.substr(colon + 1);
    const Index hi = std::stoll(rest, &used);
    if (used != rest.size()) throw UsageError("--window: bad upper bound");
    if (lo > hi) throw UsageError("--window: lo must not exceed hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--window: expected integers lo:hi");
  }
}

double parse_q(const std::string& s) {
  if (s == "inf" || s == "infinity") return kInfinity;
  try {
    std::size_t used = 0;
    const double q = std::stod(s, &used);
    if (used != s.size()) throw UsageError("--q: expected a number or inf");
    return q;
  } catch (const std::logic_error&) {
    throw UsageError("--q: expected a number or inf");
  }
}

std::vector<double> parse_betas(const std::string& s) {
  std::vector<double> parts;
  std::stringstream ss(s);
  std::string item;
  try {
    while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
  } catch (const std::logic_error&) {
    throw UsageError("--betas: expected a:b:step");
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
    throw UsageError("--betas: expected a:b:step with a <= b and step > 0");
  }
  const auto n = static_cast<std::size_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
  return out;
}

std::vector<Index> parse_ladder(const std::string& s) {
  std::vector<Index> out;
  std::stringstream ss(s);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  } catch (const std::logic_error&) {
    throw UsageError("--ladder: expected comma-separated integers");
  }
  if (out.empty()) throw UsageError("--ladder: expected at least one value");
  for (Index v : out) {
    if (v < 1) throw UsageError("--ladder: values must be positive");
  }
  return out;
}

Weight make_weight(const Config& c) {
  if (c.weight == "one") return Weight::one();
  if (c.weight == "power") {
    if (!std::isfinite(c.beta)) throw UsageError("--beta: must be finite");
    return Weight::power(c.beta);
  }
  return read_weight(c.weight);
}

LatticeSequence require_sequence(const Config& c) {
  if (c.seq.empty()) throw UsageError("--seq: required");
  return read_sequence(c.seq);
}

json q_json(double q) { return std::isfinite(q) ? json(q) : json("inf"); }

// Hull widened on each side by four times its cardinality.
IndexInterval default_window(const LatticeSequence& x) {
  const IndexInterval h = x.hull().value_or(IndexInterval{0, 0});
  return {h.lo - 4 * h.size(), h.hi + 4 * h.size()};
}

IndexInterval window_for(const Config& c, const LatticeSequence& x) {
  return c.window.empty() ? default_window(x) : parse_window(c.window);
}

IndexInterval window_for_weight(const Config& c, const Weight& w) {
  if (!c.window.empty()) return parse_window(c.window);
  if (auto d = w.domain()) return *d;
  throw UsageError("--window: required for weights defined on all of Z");
}

void check_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw UsageError("--p: must be finite and >= 1");
}

double check_q(const Config& c) {
  const double q = parse_q(c.q);
  if (!(q >= c.p)) throw UsageError("--q: must satisfy q >= p");
  return q;
}

double require_t(const Config& c) {
  if (!c.t) throw UsageError("--t: required");
  if (!(*c.t > 0.0) || !std::isfinite(*c.t)) throw UsageError("--t: must be positive");
  return *c.t;
}

json window_json(const IndexInterval& w) { return json::array({w.lo, w.hi}); }

void header(std::ostream& os, const std::string& command, json fields) {
  fields["command"] = command;
  os << "# " << fields.dump() << '\n';
}

json norm_json(const NormResult& r) {
  json out = {{"value", r.value},
              {"witness", {{"m", r.witness.center}, {"N", r.witness.radius}}},
              {"search_window", window_json(r.search_window)},
              {"lower_bound", r.lower_bound}};
  if (r.level) out["lambda"] = *r.level;
  return out;
}

void write_profile(std::ostream& os, const MaximalProfile& m) {
  os << "k,value,radius\n";
  for (Index k = m.window.lo; k <= m.window.hi; ++k) {
    os << k << ',' << format_real(m.at(k)) << ',' << m.radius_at(k) << '\n';
  }
}

std::vector<LatticeSequence> verify_inputs(const Config& c, std::mt19937_64& rng) {
  if (!c.seq.empty()) return {read_sequence(c.seq)};
  if (c.instances < 1) throw UsageError("--instances: must be positive");
  std::vector<LatticeSequence> xs;
  std::uniform_int_distribution<Index> len(1, 16);
  std::uniform_int_distribution<Index> start(-16, 0);
  std::uniform_int_distribution<int> value(-10, 10);
  for (int i = 0; i < c.instances; ++i) {
    const Index n = len(rng);
    std::vector<double> dense(static_cast<std::size_t>(n));
    for (double& v : dense) v = value(rng);
    dense[0] = dense[0] == 0.0 ? 1.0 : dense[0];
    xs.push_back(LatticeSequence::from_dense(start(rng), dense));
  }
  return xs;
}

ReportSet verify_suite(const Config& c, const Weight& w, unsigned threads, json& head) {
  check_p(c.p);
  if (c.lambda < 1) throw UsageError("--lambda: must be >= 1");
  if (!(c.r > 1.0)) throw UsageError("--r: must be > 1");
  if (c.t && !(*c.t > 0.0)) throw UsageError("--t: must be positive");
  std::mt19937_64 rng(c.seed);
  const auto xs = verify_inputs(c, rng);
  ReportSet reports;
  json windows = json::array();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const LatticeSequence& x = xs[i];
    if (x.empty()) throw UsageError("--seq: sequence is identically zero");
    const IndexInterval win = window_for(c, x);
    windows.push_back(window_json(win));
    const IndexInterval hull = *x.hull();
    const double t = c.t.value_or(0.5 * x.sup_abs());
    auto tag = [i](VerificationReport r) {
      r.params["instance"] = i;
      return r;
    };

    reports.add(tag(verify_weak_11(x, w, t, win, c.p == 1.0 ? 2.0 : c.p, threads)));
    if (c.p > 1.0) reports.add(tag(verify_strong_pp(x, w, c.p, win, threads)));
    reports.add(tag(verify_averaging_bound(x, w, c.p, hull, win, threads)));
    std::uniform_int_distribution<Index> pick(win.lo, win.hi);
    const Index a = pick(rng);
    const Index b = pick(rng);
    reports.add(tag(verify_averaging_bound(x, w, c.p, {std::min(a, b), std::max(a, b)}, win, threads)));
    reports.add(tag(verify_pinf_bound(x, w, c.p, win, threads)));

    const Index half = (win.hi - win.lo) / 2;
    const SymmetricInterval s{win.lo + half, half / c.lambda};
    reports.add(tag(doubling_bound_check(w, c.p, s, c.lambda, win, threads)));

    std::vector<Index> subset;
    std::bernoulli_distribution coin(0.5);
    for (Index k = hull.lo; k <= hull.hi; ++k) {
      if (coin(rng)) subset.push_back(k);
    }
    if (subset.empty()) subset.push_back(hull.lo);
    reports.add(tag(verify_rh_subset(w, c.r, subset, hull, win, threads)));

    const CzSelection sel = cz_decompose(x, w, t, c.level_cap);
    reports.add(tag(cz_verify(x, w, sel)));
    reports.add(tag(cz_nesting_check(x, w, 2.0 * t, t, c.level_cap)));
  }
  if (w.kind() != Weight::Kind::Tabulated || w.domain()->contains(0)) {
    const Index n = w.kind() == Weight::Kind::Tabulated ? w.domain()->hi : 64;
    reports.add(verify_reflection_bound(w, c.p, n, threads));
  }
  reports.sort();
  head["windows"] = windows;
  return reports;
}

int dispatch(const std::string& command, const Config& c, std::ostream& os, std::ostream& err) {
  const unsigned threads = resolve_threads(c.threads);
  json head = {{"weight", c.weight == "power" ? "power(" + format_real(c.beta) + ")" : c.weight}};

  if (command == "norm" || command == "weak-norm") {
    check_p(c.p);
    const double q = check_q(c);
    const LatticeSequence x = require_sequence(c);
    const Weight w = make_weight(c);
    ScanOptions opts;
    opts.window = window_for(c, x);
    opts.threads = threads;
    head.update({{"p", c.p}, {"q", q_json(q)}, {"window", window_json(*opts.window)}});
    NormResult r;
    if (command == "weak-norm") {
      if (!std::isfinite(q)) throw UsageError("--q: weak norm needs finite q");
      r = weak_morrey_norm(x, c.p, q, w, opts);
    } else if (std::isfinite(q)) {
      r = morrey_norm(x, MorreyParams{c.p, q, w, w}, opts);
    } else {
      r = morrey_pinf_norm(x, c.p, w, w, opts);
    }
    header(os, command, head);
    os << norm_json(r).dump() << '\n';
    return kExitOk;
  }
  if (command == "maximal" || command == "wmaximal") {
    const LatticeSequence x = require_sequence(c);
    const IndexInterval win = window_for(c, x);
    head["window"] = window_json(win);
    const MaximalProfile m = command == "maximal" ? hl_maximal(x, win, threads)
                                                  : weighted_maximal(x, make_weight(c), win, threads);
    header(os, command, head);
    write_profile(os, m);
    return kExitOk;
  }
  if (command == "apnorm" || command == "rhnorm") {
    const Weight w = make_weight(c);
    const IndexInterval win = window_for_weight(c, w);
    head["window"] = window_json(win);
    json body;
    if (command == "apnorm") {
      check_p(c.p);
      head["p"] = c.p;
      const ApCharacteristic a = muckenhoupt_characteristic(w, c.p, win, threads);
      body = {{"value", a.value}, {"witness", window_json(a.witness)}};
    } else {
      if (!(c.r > 1.0)) throw UsageError("--r: must be > 1");
      head["r"] = c.r;
      const RhCharacteristic a = rh_norm_window(w, c.r, win, threads);
      body = {{"value", a.value}, {"witness", window_json(a.witness)}};
    }
    header(os, command, head);
    os << body.dump() << '\n';
    return kExitOk;
  }
  if (command == "czd") {
    const double t = require_t(c);
    const LatticeSequence x = require_sequence(c);
    head.update({{"t", t}, {"level_cap", c.level_cap}, {"window", window_json(default_window(x))}});
    const CzSelection sel = cz_decompose(x, make_weight(c), t, c.level_cap);
    head["top_level"] = sel.top_level;
    header(os, command, head);
    os << selection_to_json(sel).dump() << '\n';
    return kExitOk;
  }
  if (command == "verify") {
    const Weight w = make_weight(c);
    head.update({{"p", c.p}, {"lambda", c.lambda}, {"r", c.r}, {"seed", c.seed}});
    if (c.t) head["t"] = *c.t;
    const ReportSet reports = verify_suite(c, w, threads, head);
    header(os, command, head);
    reports.write_csv(os);
    err << reports.summary().dump() << '\n';
    return reports.all_passed() ? kExitOk : kExitCheckFailed;
  }
  if (command == "sweep-beta") {
    check_p(c.p);
    const double q = check_q(c);
    const auto betas = parse_betas(c.betas);
    const auto ladder = parse_ladder(c.ladder.empty() ? "256,1024,4096" : c.ladder);
    head.update({{"p", c.p}, {"q", q_json(q)}, {"betas", c.betas}, {"ladder", ladder}, {"seed", c.seed}});
    json windows = json::array();
    for (Index w : ladder) windows.push_back(window_json({-w, w}));
    head["windows"] = windows;
    SweepOptions opts;
    opts.seed = c.seed;
    opts.threads = threads;
    const SweepResult r = beta_sweep(c.p, q, betas, ladder, opts);
    header(os, command, head);
    r.write_csv(os);
    return kExitOk;
  }
  if (command == "probe-necessity") {
    check_p(c.p);
    const double q = check_q(c);
    const auto ns = parse_ladder(c.ladder.empty() ? "4,8,16" : c.ladder);
    head.update({{"weight", "power(" + format_real(c.beta) + ")"},
                 {"p", c.p}, {"q", q_json(q)}, {"beta", c.beta}, {"ladder", ns}});
    json windows = json::array();
    for (Index n : ns) windows.push_back(window_json({-3 * n, 3 * n}));
    head["windows"] = windows;
    const LadderResult lr = necessity_ladder(ns, c.p, q, c.beta, threads);
    ReportSet reports;
    for (const auto& s : lr.steps) reports.add(s);
    header(os, command, head);
    reports.write_csv(os);
    err << "growth " << json(lr.ratios).dump() << '\n';
    return reports.all_passed() ? kExitOk : kExitCheckFailed;
  }
  throw UsageError("unknown subcommand " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete weighted maximal operators and Morrey norms", "morreykit"};
  app.require_subcommand(1, 1);
  Config c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--seq", c.seq, "sequence JSON file");
    sub->add_option("--weight", c.weight, "one, power, or a weight JSON file");
    sub->add_option("--beta", c.beta, "power weight exponent");
    sub->add_option("--p", c.p, "exponent p");
    sub->add_option("--q", c.q, "exponent q (number or inf)");
    sub->add_option("--t", c.t, "threshold t");
    sub->add_option("--lambda", c.lambda, "dilation factor");
    sub->add_option("--r", c.r, "reverse Holder exponent");
    sub->add_option("--window", c.window, "window lo:hi");
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--seed", c.seed, "seed for randomized suites");
    sub->add_option("--threads", c.threads, "worker threads (0: MORREYKIT_THREADS or 1)");
    sub->add_option("--betas", c.betas, "beta grid a:b:step");
    sub->add_option("--ladder", c.ladder, "comma-separated windows or N values");
    sub->add_option("--level-cap", c.level_cap, "highest dyadic level for czd");
    sub->add_option("--instances", c.instances, "random instances for verify without --seq");
  };
  const std::pair<const char*, const char*> commands[] = {
      {"norm", "weighted Morrey norm with its witness interval"},
      {"weak-norm", "weak-type Morrey norm with its witness and level"},
      {"maximal", "centered maximal function on the window (CSV)"},
      {"wmaximal", "weighted centered maximal function on the window (CSV)"},
      {"apnorm", "A_p characteristic of the weight on the window"},
      {"rhnorm", "reverse Hoelder characteristic of the weight on the window"},
      {"czd", "Calderon-Zygmund selection at threshold t (JSON)"},
      {"verify", "traced-constant checks (CSV; exit 1 on failure)"},
      {"sweep-beta", "operator-norm estimates over a power-weight grid (CSV)"},
      {"probe-necessity", "lower bound probe for the power-weight threshold (CSV)"},
  };
  for (const auto& [name, description] : commands) add_common(app.add_subcommand(name, description));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    std::ostringstream buffer;
    const int code = dispatch(command, c, buffer, err);
    if (c.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(c.out);
      if (!file) throw UsageError("--out: cannot write " + c.out);
      file << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
  } catch (const NoStoppingLevel& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace morreykit::cli
