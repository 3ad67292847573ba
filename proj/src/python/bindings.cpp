#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "morreykit/cli.hpp"
#include "morreykit/czd.hpp"
#include "morreykit/errors.hpp"
#include "morreykit/maximal.hpp"
#include "morreykit/norms.hpp"
#include "morreykit/verify.hpp"
#include "morreykit/weights.hpp"

namespace py = pybind11;
using namespace morreykit;

namespace {

using Pair = std::pair<Index, Index>;

IndexInterval to_interval(const Pair& p) { return {p.first, p.second}; }
Pair to_pair(const IndexInterval& j) { return {j.lo, j.hi}; }

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["check_id"] = r.check_id;
  d["params"] = to_python(r.params);
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["constant"] = r.constant;
  d["pass"] = r.pass;
  d["witness"] = to_python(r.witness);
  d["note"] = r.note;
  return d;
}

ScanOptions scan_options(const std::optional<Pair>& window, Index enlarge, unsigned threads) {
  ScanOptions o;
  if (window) o.window = to_interval(*window);
  o.enlarge = enlarge;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrete Morrey norms, maximal operators and weight characteristics on the integers";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<UncertifiedDomain>(m, "UncertifiedDomain", domain.ptr());
  py::register_exception<NoStoppingLevel>(m, "NoStoppingLevel", PyExc_RuntimeError);

  py::class_<LatticeSequence>(m, "LatticeSequence")
      .def(py::init([](const std::vector<std::pair<Index, double>>& pairs) {
             std::vector<LatticeSequence::Entry> e;
             e.reserve(pairs.size());
             for (const auto& [k, v] : pairs) e.push_back({k, v});
             return LatticeSequence(std::move(e));
           }),
           py::arg("entries") = std::vector<std::pair<Index, double>>{})
      .def_static("delta", &LatticeSequence::delta, py::arg("k"), py::arg("value") = 1.0)
      .def_static(
          "indicator",
          [](Index lo, Index hi, double value) { return LatticeSequence::indicator({lo, hi}, value); },
          py::arg("lo"), py::arg("hi"), py::arg("value") = 1.0)
      .def_static(
          "from_dense",
          [](Index lo, const std::vector<double>& values) { return LatticeSequence::from_dense(lo, values); },
          py::arg("lo"), py::arg("values"))
      .def_property_readonly("entries",
                             [](const LatticeSequence& x) {
                               std::vector<std::pair<Index, double>> out;
                               for (const auto& e : x.entries()) out.emplace_back(e.index, e.value);
                               return out;
                             })
      .def_property_readonly("hull",
                             [](const LatticeSequence& x) -> std::optional<Pair> {
                               if (auto h = x.hull()) return to_pair(*h);
                               return std::nullopt;
                             })
      .def("__call__", &LatticeSequence::operator(), py::arg("k"))
      .def("__len__", &LatticeSequence::size)
      .def("__eq__", [](const LatticeSequence& a, const LatticeSequence& b) { return a == b; })
      .def("__add__", [](const LatticeSequence& a, const LatticeSequence& b) { return a + b; })
      .def("scaled", &LatticeSequence::scaled)
      .def("sup_abs", &LatticeSequence::sup_abs);

  py::class_<Weight>(m, "Weight")
      .def_static("one", &Weight::one)
      .def_static("power", &Weight::power, py::arg("beta"))
      .def_static("tabulated", &Weight::tabulated, py::arg("lo"), py::arg("values"))
      .def("__call__", &Weight::operator(), py::arg("k"))
      .def("scaled", &Weight::scaled)
      .def("pow", &Weight::pow)
      .def("describe", &Weight::describe)
      .def("__repr__", [](const Weight& w) { return "Weight(" + w.describe() + ")"; });

  py::class_<NormResult>(m, "NormResult")
      .def_readonly("value", &NormResult::value)
      .def_property_readonly("witness",
                             [](const NormResult& r) { return Pair{r.witness.center, r.witness.radius}; })
      .def_readonly("level", &NormResult::level)
      .def_property_readonly("search_window", [](const NormResult& r) { return to_pair(r.search_window); })
      .def_readonly("lower_bound", &NormResult::lower_bound);

  m.def("lp_w_norm", &lp_w_norm, py::arg("x"), py::arg("p"), py::arg("w") = Weight::one());
  m.def("layer_cake_eval", &layer_cake_eval, py::arg("x"), py::arg("p"), py::arg("w") = Weight::one());
  m.def(
      "morrey_norm",
      [](const LatticeSequence& x, double p, double q, const Weight& measure,
         const std::optional<Weight>& normalizer, const std::optional<Pair>& window, Index enlarge,
         unsigned threads) {
        return morrey_norm(x, {p, q, measure, normalizer.value_or(measure)},
                           scan_options(window, enlarge, threads));
      },
      py::arg("x"), py::arg("p"), py::arg("q"), py::arg("w") = Weight::one(),
      py::arg("v") = std::nullopt, py::arg("window") = std::nullopt, py::arg("enlarge") = 1,
      py::arg("threads") = 1);
  m.def(
      "weak_morrey_norm",
      [](const LatticeSequence& x, double p, double q, const Weight& w,
         const std::optional<Pair>& window, Index enlarge, unsigned threads) {
        return weak_morrey_norm(x, p, q, w, scan_options(window, enlarge, threads));
      },
      py::arg("x"), py::arg("p"), py::arg("q"), py::arg("w") = Weight::one(),
      py::arg("window") = std::nullopt, py::arg("enlarge") = 1, py::arg("threads") = 1);
  m.def(
      "morrey_pinf_norm",
      [](const LatticeSequence& x, double p, const Weight& measure,
         const std::optional<Weight>& normalizer, const std::optional<Pair>& window, unsigned threads) {
        return morrey_pinf_norm(x, p, measure, normalizer.value_or(measure),
                                scan_options(window, 1, threads));
      },
      py::arg("x"), py::arg("p"), py::arg("w") = Weight::one(), py::arg("v") = std::nullopt,
      py::arg("window") = std::nullopt, py::arg("threads") = 1);

  py::class_<MaximalProfile>(m, "MaximalProfile")
      .def_property_readonly("window", [](const MaximalProfile& p) { return to_pair(p.window); })
      .def_readonly("values", &MaximalProfile::values)
      .def_readonly("radii", &MaximalProfile::radii)
      .def("at", &MaximalProfile::at, py::arg("k"))
      .def("radius_at", &MaximalProfile::radius_at, py::arg("k"))
      .def("max_value", &MaximalProfile::max_value);

  m.def(
      "hl_maximal",
      [](const LatticeSequence& x, const Pair& window, unsigned threads) {
        return hl_maximal(x, to_interval(window), threads);
      },
      py::arg("x"), py::arg("window"), py::arg("threads") = 1);
  m.def(
      "weighted_maximal",
      [](const LatticeSequence& x, const Weight& w, const Pair& window, unsigned threads) {
        return weighted_maximal(x, w, to_interval(window), threads);
      },
      py::arg("x"), py::arg("w"), py::arg("window"), py::arg("threads") = 1);

  m.def(
      "muckenhoupt_characteristic",
      [](const Weight& w, double p, const Pair& window, unsigned threads) {
        const auto a = muckenhoupt_characteristic(w, p, to_interval(window), threads);
        return std::make_pair(a.value, to_pair(a.witness));
      },
      py::arg("w"), py::arg("p"), py::arg("window"), py::arg("threads") = 1,
      "Returns (value, witness interval); p = 1 gives the A_1 characteristic.");
  m.def(
      "rh_characteristic",
      [](const Weight& w, double r, const Pair& window, unsigned threads) {
        const auto a = rh_norm_window(w, r, to_interval(window), threads);
        return std::make_pair(a.value, to_pair(a.witness));
      },
      py::arg("w"), py::arg("r"), py::arg("window"), py::arg("threads") = 1);

  m.def(
      "cz_decompose",
      [](const LatticeSequence& x, const Weight& w, double t, int level_cap) {
        return to_python(selection_to_json(cz_decompose(x, w, t, level_cap)));
      },
      py::arg("x"), py::arg("w"), py::arg("t"), py::arg("level_cap") = kDefaultCzLevelCap,
      "Selected dyadic intervals as a list of dicts (level, pos, lo, hi, avg).");
  m.def(
      "cz_verify",
      [](const LatticeSequence& x, const Weight& w, double t) {
        return report_dict(cz_verify(x, w, cz_decompose(x, w, t)));
      },
      py::arg("x"), py::arg("w"), py::arg("t"));

  m.def(
      "trace_constants",
      [](const Weight& w, double p, const Pair& window, unsigned threads) {
        return to_python(trace_constants(w, p, to_interval(window), threads).to_json());
      },
      py::arg("w"), py::arg("p"), py::arg("window"), py::arg("threads") = 1);
  m.def(
      "verify_weak_11",
      [](const LatticeSequence& x, const Weight& w, double t, const Pair& window, double p,
         unsigned threads) { return report_dict(verify_weak_11(x, w, t, to_interval(window), p, threads)); },
      py::arg("x"), py::arg("w"), py::arg("t"), py::arg("window"), py::arg("p") = 2.0,
      py::arg("threads") = 1);
  m.def(
      "verify_strong_pp",
      [](const LatticeSequence& x, const Weight& w, double p, const Pair& window, unsigned threads) {
        return report_dict(verify_strong_pp(x, w, p, to_interval(window), threads));
      },
      py::arg("x"), py::arg("w"), py::arg("p"), py::arg("window"), py::arg("threads") = 1);
  m.def(
      "necessity_probe",
      [](Index n, double p, double q, double beta, const Pair& window, unsigned threads) {
        return report_dict(necessity_probe(n, p, q, beta, to_interval(window), threads));
      },
      py::arg("n"), py::arg("p"), py::arg("q"), py::arg("beta"), py::arg("window"),
      py::arg("threads") = 1);
  m.def(
      "beta_sweep",
      [](double p, double q, const std::vector<double>& betas, const std::vector<Index>& ladder,
         std::uint64_t seed, int random_count, unsigned threads) {
        SweepOptions o;
        o.seed = seed;
        o.random_count = random_count;
        o.threads = threads;
        const auto s = beta_sweep(p, q, betas, ladder, o);
        std::ostringstream csv;
        s.write_csv(csv);
        py::dict d;
        d["estimates"] = s.estimates;
        d["ratios"] = s.ratios;
        d["drivers"] = s.drivers;
        d["csv"] = csv.str();
        return d;
      },
      py::arg("p"), py::arg("q"), py::arg("betas"), py::arg("ladder"), py::arg("seed") = 1,
      py::arg("random_count") = 20, py::arg("threads") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
