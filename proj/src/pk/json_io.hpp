#pragma once

#include <json.hpp>
#include <string>

#include "pk/atto.hpp"
#include "pk/kernels.hpp"

namespace pk {

using nlohmann::json;

struct RunConfig {
  OracleConfig oracle;
  bool alpha_check = false;
  std::uint64_t seed = 12345;
};

// Parsers throw Error(ParseError) with a field path in the message.
BoundarySymbol parse_symbol(const json& j, const std::string& path);
SymbolPair parse_pair(const json& j, const std::string& path);
AttoSpec parse_atto_spec(const json& j, const std::string& path);
RunConfig parse_config(const std::string& text);
json parse_text(const std::string& text, const std::string& what);

json factored_to_json(const FactoredPoly& p);
json rational_to_json(const RationalFn& r);
json trace_to_json(const std::vector<TraceEntry>& trace);

// Deterministic serialization: sorted keys (object storage order), floats
// printed with 17 significant digits.
std::string dump_report(const json& j);

struct CommandResult {
  json report;
  bool verified_ok = true;
};

CommandResult cmd_kernel(const std::string& pair_text, const std::string& config_text);
CommandResult cmd_minimal(const std::string& request_text, const std::string& config_text);
CommandResult cmd_atto(const std::string& spec_text, const std::string& config_text);
CommandResult cmd_verify(const std::string& request_text, const std::string& config_text);
CommandResult cmd_decompose(const std::string& pair_text, int k, const std::string& config_text);

}  // namespace pk
