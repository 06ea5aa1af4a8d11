#include "iwtower/io.hpp"

#include <fstream>
#include <sstream>

namespace iwtower {

const char* SpecError::code_name() const noexcept {
  switch (code_) {
    case SpecErrorCode::malformed_json: return "malformed_json";
    case SpecErrorCode::invalid_field: return "invalid_field";
    case SpecErrorCode::unknown_vertex: return "unknown_vertex";
    case SpecErrorCode::voltage_arity: return "voltage_arity";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(SpecErrorCode code, const std::string& what) { throw SpecError(code, what); }

std::int64_t require_int(const Json& j, const char* key) {
  if (!j.contains(key)) fail(SpecErrorCode::invalid_field, std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_integer()) fail(SpecErrorCode::invalid_field, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::size_t vertex_index(const Digraph& g, const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    fail(SpecErrorCode::invalid_field, std::string("edge field '") + key + "' must be a vertex label");
  const std::string label = j.at(key).get<std::string>();
  auto v = g.find_vertex(label);
  if (!v) fail(SpecErrorCode::unknown_vertex, "unknown vertex label '" + label + "'");
  return *v;
}

}  // namespace

GraphSpec parse_graph_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(SpecErrorCode::malformed_json, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail(SpecErrorCode::malformed_json, "graph spec must be a JSON object");

  GraphSpec spec;
  const std::int64_t p = require_int(j, "p");
  if (p < 2 || !is_prime(p)) fail(SpecErrorCode::invalid_field, "p must be a prime");
  spec.p = static_cast<unsigned long>(p);
  const std::int64_t d = j.contains("d") ? require_int(j, "d") : 1;
  if (d < 1) fail(SpecErrorCode::invalid_field, "d must be positive");
  spec.d = static_cast<std::size_t>(d);

  const std::string mode = j.value("mode", std::string("directed"));
  if (mode != "directed" && mode != "undirected") fail(SpecErrorCode::invalid_field, "mode must be directed or undirected");
  spec.undirected = mode == "undirected";

  if (!j.contains("vertices") || !j.at("vertices").is_array())
    fail(SpecErrorCode::invalid_field, "'vertices' must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) fail(SpecErrorCode::invalid_field, "vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  try {
    spec.graph = Digraph(labels);
  } catch (const std::invalid_argument& e) {
    fail(SpecErrorCode::invalid_field, e.what());
  }

  spec.voltage = VoltageAssignment::zero(spec.p, spec.d, 0);
  const Json edges = j.value("edges", Json::array());
  if (!edges.is_array()) fail(SpecErrorCode::invalid_field, "'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_object()) fail(SpecErrorCode::invalid_field, "edges must be objects");
    const std::size_t s = vertex_index(spec.graph, e, "src");
    const std::size_t t = vertex_index(spec.graph, e, "dst");
    ExponentVector vol;
    if (e.contains("voltage")) {
      const Json& v = e.at("voltage");
      if (!v.is_array()) fail(SpecErrorCode::voltage_arity, "voltage must be an array");
      for (const auto& c : v) {
        if (!c.is_number_integer()) fail(SpecErrorCode::invalid_field, "voltage entries must be integers");
        vol.push_back(c.get<std::int64_t>());
      }
    }
    if (vol.size() != spec.d)
      fail(SpecErrorCode::voltage_arity,
           "voltage has " + std::to_string(vol.size()) + " entries, expected d = " + std::to_string(spec.d));
    spec.graph.add_edge(s, t);
    spec.voltage.values.push_back(vol);
    if (spec.undirected) {
      ExponentVector neg = vol;
      for (auto& c : neg) c = -c;
      spec.graph.add_edge(t, s);
      spec.voltage.values.push_back(neg);
    }
  }
  return spec;
}

GraphSpec load_graph_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_spec(buf.str());
}

Json graph_spec_json(const GraphSpec& spec) {
  Json j;
  j["p"] = spec.p;
  j["d"] = spec.d;
  j["mode"] = spec.undirected ? "undirected" : "directed";
  j["vertices"] = spec.graph.vertex_labels();
  Json edges = Json::array();
  const auto& labels = spec.graph.vertex_labels();
  for (const Edge& e : spec.graph.edges()) {
    if (spec.undirected && e.id % 2 == 1) continue;
    Json je;
    je["src"] = labels[e.src];
    je["dst"] = labels[e.dst];
    je["voltage"] = spec.voltage.values[e.id];
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

std::string serialize_graph_spec(const GraphSpec& spec) { return graph_spec_json(spec).dump(2); }

Json to_json(const IntPoly& f) {
  Json j = Json::array();
  for (const auto& c : f.coeffs()) j.push_back(c.get_str());
  return j;
}

Json to_json(const LaurentPolyZ& f) {
  Json j = Json::array();
  for (const auto& [e, c] : f.terms()) j.push_back({{"exps", e}, {"coeff", c.get_str()}});
  return j;
}

LaurentPolyZ laurent_from_json(const Json& j, std::size_t d) {
  LaurentPolyZ f(d);
  for (const auto& t : j) f.add_term(t.at("exps").get<ExponentVector>(), parse_integer(t.at("coeff").get<std::string>()));
  return f;
}

Json to_json(const AbGroupPresentation& g) {
  Json factors = Json::array();
  for (const auto& d : g.torsion_factors) factors.push_back(d.get_str());
  return {{"rank", g.free_rank}, {"factors", factors}};
}

Json to_json(const CycloElement& e) {
  Json coeffs = Json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back(c.get_str());
  return {{"p", e.p()}, {"level", e.level()}, {"coeffs", coeffs}};
}

Json to_json(const CycloPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) {
    Json cj = Json::array();
    for (const auto& q : c.coeffs()) cj.push_back(q.get_str());
    coeffs.push_back(std::move(cj));
  }
  return {{"p", f.p()}, {"level", f.level()}, {"coeffs", coeffs}};
}

Json to_json(const Character& w) { return {{"level", w.level}, {"exponents", w.exponents}}; }

Json to_json(const GaloisOrbit& o) {
  return {{"l", o.l},
          {"level", o.level},
          {"representative", to_json(o.representative)},
          {"orbit_size", o.orbit_size},
          {"local_degree", o.local_degree}};
}

Json to_json(const ConnectivityReport& c) {
  return {{"strongly_connected", c.strongly_connected},
          {"weakly_connected", c.weakly_connected},
          {"reach_count", c.reach_count},
          {"scc_count", c.scc_count}};
}

Json to_json(const IwasawaInvariants& inv) {
  return {{"mu", inv.mu}, {"lambda", inv.lambda}, {"unit_part_valuations", inv.unit_part_valuations}};
}

Json to_json(const GrowthTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"n", r.n},
                    {"observed", r.observed},
                    {"predicted", r.predicted.get_str()},
                    {"residual", r.residual.get_str()}});
  return {{"l", t.l},
          {"which", to_string(t.which)},
          {"mu", t.mu},
          {"rows", rows},
          {"max_scaled_residual", t.max_scaled_residual.get_str()},
          {"min_scaled_residual", t.min_scaled_residual.get_str()},
          {"vanishing_characters", t.vanishing_characters}};
}

Json to_json(const DefectReport& r) {
  Json levels = Json::array();
  for (const auto& lv : r.levels)
    levels.push_back({{"n", lv.n},
                      {"a", lv.a},
                      {"b", lv.b},
                      {"delta", lv.delta},
                      {"a_from_characters", lv.a_from_characters},
                      {"b_from_characters", lv.b_from_characters}});
  Json chars = Json::array();
  for (const auto& row : r.characters)
    chars.push_back({{"orbit", to_json(row.orbit)}, {"a", row.ranks.a}, {"b", row.ranks.b}});
  auto opt = [](const auto& o) { return o ? Json(*o) : Json(nullptr); };
  return {{"levels", levels},
          {"characters", chars},
          {"monotone", r.monotone},
          {"stabilization_level", opt(r.stabilization_level)},
          {"constant_voltage_level", opt(r.constant_voltage_level)},
          {"constant_voltage_bound_holds", opt(r.constant_voltage_bound_holds)},
          {"constant_defect_observed", opt(r.constant_defect_observed)},
          {"consistent", r.consistent()}};
}

Json to_json(const ArtinReport& r) {
  return {{"holds", r.holds}, {"cover", to_json(r.cover)}, {"product", to_json(r.product)}};
}

Json to_json(const AggregateReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"orbit", to_json(t.orbit)}, {"t", t.t ? Json(*t.t) : Json(nullptr)}});
  return {{"holds", r.holds},
          {"observed", r.observed},
          {"predicted", r.predicted},
          {"all_torsion", r.all_torsion},
          {"terms", terms}};
}

Json to_json(const NonvanishingReport& r) {
  Json v = Json::array();
  for (const auto& w : r.vanishing) v.push_back(to_json(w));
  return {{"holds", r.holds()}, {"characters_checked", r.characters_checked}, {"vanishing", v}};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace iwtower
