#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "iwtower/cyclotomic.hpp"
#include "iwtower/defect.hpp"
#include "iwtower/digraph.hpp"
#include "iwtower/groups.hpp"
#include "iwtower/iwasawa.hpp"
#include "iwtower/laurent.hpp"
#include "iwtower/tower.hpp"
#include "iwtower/zeta.hpp"

namespace iwtower {

using Json = nlohmann::ordered_json;

enum class SpecErrorCode {
  malformed_json = 10,
  invalid_field = 11,
  unknown_vertex = 12,
  voltage_arity = 13,
};

class SpecError : public std::runtime_error {
 public:
  SpecError(SpecErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  SpecErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept;

 private:
  SpecErrorCode code_;
};

/// A tower description: base digraph, voltages, p and d.
struct GraphSpec {
  unsigned long p = 2;
  std::size_t d = 1;
  /// Undirected specs list each edge once; the parsed graph holds edge 2k and its reverse 2k+1.
  bool undirected = false;
  Digraph graph;
  VoltageAssignment voltage;
};

GraphSpec parse_graph_spec(const std::string& text);
GraphSpec load_graph_spec(const std::string& path);
/// Canonical JSON text (two-space indent, fixed key order).
std::string serialize_graph_spec(const GraphSpec& spec);
Json graph_spec_json(const GraphSpec& spec);

Json to_json(const IntPoly& f);
Json to_json(const LaurentPolyZ& f);
Json to_json(const AbGroupPresentation& g);
Json to_json(const CycloElement& e);
Json to_json(const CycloPoly& f);
Json to_json(const Character& w);
Json to_json(const GaloisOrbit& o);
Json to_json(const ConnectivityReport& c);
Json to_json(const IwasawaInvariants& inv);
Json to_json(const GrowthTable& t);
Json to_json(const DefectReport& r);
Json to_json(const ArtinReport& r);
Json to_json(const AggregateReport& r);
Json to_json(const NonvanishingReport& r);
Json to_json(const IntMatrix& m);

LaurentPolyZ laurent_from_json(const Json& j, std::size_t d);

}  // namespace iwtower
