#pragma once

#include <string>

#include <json.hpp>

#include "morreykit/lattice.hpp"
#include "morreykit/weight.hpp"

namespace morreykit {

// Sequence files: [[index, value], ...] with strictly increasing indices and
// finite nonzero values. Weight files: {"lo": int, "values": [positive reals]}.
// Malformed input raises PreconditionError naming the offending element.

LatticeSequence parse_sequence(const nlohmann::json& j);
LatticeSequence read_sequence(const std::string& path);
nlohmann::json sequence_to_json(const LatticeSequence& x);
void write_sequence(const std::string& path, const LatticeSequence& x);

Weight parse_weight(const nlohmann::json& j);
Weight read_weight(const std::string& path);

}  // namespace morreykit
