#include "morreykit/io.hpp"

#include <cmath>
#include <fstream>

#include "morreykit/errors.hpp"

namespace morreykit {
namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace

LatticeSequence parse_sequence(const nlohmann::json& j) {
  if (!j.is_array()) throw PreconditionError("sequence: expected an array of [index, value] pairs");
  std::vector<LatticeSequence::Entry> entries;
  entries.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    const std::string where = "sequence[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number()) {
      throw PreconditionError(where + ": expected [integer index, number value]");
    }
    const Index k = e[0].get<Index>();
    const double v = e[1].get<double>();
    if (!std::isfinite(v) || v == 0.0) throw PreconditionError(where + ": value must be finite and nonzero");
    if (!entries.empty() && k <= entries.back().index) {
      throw PreconditionError(where + ": indices must be strictly increasing");
    }
    entries.push_back({k, v});
  }
  return LatticeSequence(std::move(entries));
}

LatticeSequence read_sequence(const std::string& path) { return parse_sequence(read_json(path)); }

nlohmann::json sequence_to_json(const LatticeSequence& x) {
  auto out = nlohmann::json::array();
  for (const auto& e : x.entries()) out.push_back({e.index, e.value});
  return out;
}

void write_sequence(const std::string& path, const LatticeSequence& x) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << sequence_to_json(x).dump() << '\n';
}

Weight parse_weight(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("values")) {
    throw PreconditionError("weight: expected {\"lo\": int, \"values\": [...]}");
  }
  if (!j["lo"].is_number_integer()) throw PreconditionError("weight.lo: expected an integer");
  const auto& vals = j["values"];
  if (!vals.is_array() || vals.empty()) throw PreconditionError("weight.values: expected a nonempty array");
  std::vector<double> values;
  values.reserve(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!vals[i].is_number()) {
      throw PreconditionError("weight.values[" + std::to_string(i) + "]: expected a number");
    }
    const double v = vals[i].get<double>();
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw PreconditionError("weight.values[" + std::to_string(i) + "]: must be positive and finite");
    }
    values.push_back(v);
  }
  return Weight::tabulated(j["lo"].get<Index>(), std::move(values));
}

Weight read_weight(const std::string& path) { return parse_weight(read_json(path)); }

}  // namespace morreykit
