#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "cubemorse/bigraph.hpp"
#include "cubemorse/cover.hpp"

namespace cubemorse::io {

using Json = nlohmann::ordered_json;

// Integers that fit a double-safe range are emitted as JSON numbers,
// anything larger as decimal strings; both are accepted on input.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json spec_to_json(const bigraph::ModularSpec& spec);
bigraph::ModularSpec spec_from_json(const Json& j);

Json graph_to_json(const bigraph::MorseGraph& g);
bigraph::MorseGraph graph_from_json(const Json& j);

Json voltage_to_json(const cover::VoltageCover& c);
cover::VoltageCover voltage_from_json(const Json& j);

// Parses a file; on malformed JSON throws std::runtime_error whose message
// carries a line:column diagnostic.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace cubemorse::io
