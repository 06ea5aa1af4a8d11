// Command-line front end: one tower per input file, results as JSON, CSV or text.

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iwtower/defect.hpp"
#include "iwtower/groups.hpp"
#include "iwtower/io.hpp"
#include "iwtower/iwasawa.hpp"
#include "iwtower/parallel.hpp"
#include "iwtower/random_tower.hpp"
#include "iwtower/tower.hpp"
#include "iwtower/zeta.hpp"

using namespace iwtower;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;

struct Options {
  std::string input;
  std::string format = "json";
  unsigned max_level = 0;
  std::optional<unsigned> level;
  std::optional<unsigned> base_level;
  std::vector<unsigned long> primes;
  std::string which = "pic";
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultBudget;
  std::size_t random = 0;
  unsigned long random_p = 2;
  std::size_t random_q = 0;
};

// Every command yields a JSON document plus a flat table used for CSV and text output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Result {
  Json json;
  Table table;
  bool verification_failed = false;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  }
}

void print_text(const Table& t, std::ostream& out) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << cells[i];
      if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string factors_string(const AbGroupPresentation& g) {
  std::vector<std::string> f;
  for (const auto& d : g.torsion_factors) f.push_back(d.get_str());
  return join(f, " ");
}

GroupKind parse_which(const std::string& s) {
  if (s == "pic") return GroupKind::picard;
  if (s == "bf") return GroupKind::bowen_franks;
  throw CLI::ValidationError("--which", "expected pic or bf");
}

unsigned level_or(const Options& o, unsigned fallback) { return o.level.value_or(fallback); }

// ---- single-tower commands ----

Result cmd_inspect(const GraphSpec& s, const Options&) {
  Result r;
  const Digraph& x = s.graph;
  const ConnectivityReport c = connectivity(x);
  Json j;
  j["spec"] = graph_spec_json(s);
  j["vertex_count"] = x.vertex_count();
  j["edge_count"] = x.edge_count();
  j["adjacency"] = to_json(adjacency_matrix(x));
  j["degree"] = to_json(degree_matrix(x));
  j["connectivity"] = to_json(c);
  const auto q = out_regular_degree(x);
  j["out_regular_degree"] = q ? Json(*q) : Json(nullptr);
  j["tower_strongly_connected"] = c.strongly_connected ? Json(tower_strongly_connected(x, s.voltage)) : Json(nullptr);
  j["constant_voltage"] = is_constant_voltage(s.voltage);
  r.table.columns = {"key", "value"};
  r.table.rows = {{"p", std::to_string(s.p)},
                  {"d", std::to_string(s.d)},
                  {"vertices", std::to_string(x.vertex_count())},
                  {"edges", std::to_string(x.edge_count())},
                  {"strongly_connected", yes_no(c.strongly_connected)},
                  {"weakly_connected", yes_no(c.weakly_connected)},
                  {"reach_count", std::to_string(c.reach_count)},
                  {"scc_count", std::to_string(c.scc_count)},
                  {"out_regular_degree", q ? std::to_string(*q) : ""},
                  {"tower_strongly_connected", j["tower_strongly_connected"].is_null() ? "" : yes_no(j["tower_strongly_connected"].get<bool>())}};
  r.json = std::move(j);
  return r;
}

Result cmd_derive(const GraphSpec& s, const Options& o) {
  const unsigned n = level_or(o, 1);
  check_budget(s.graph, s.p, s.d, n, o.budget);
  const TowerLevel lv = derived_digraph(s.graph, s.voltage, n);
  const auto& labels = lv.derived.vertex_labels();
  Result r;
  Json edges = Json::array();
  r.table.columns = {"edge", "src", "dst", "base_edge"};
  for (const Edge& e : lv.derived.edges()) {
    edges.push_back({{"src", labels[e.src]}, {"dst", labels[e.dst]}, {"base_edge", lv.edge_projection[e.id]}});
    r.table.rows.push_back({std::to_string(e.id), labels[e.src], labels[e.dst], std::to_string(lv.edge_projection[e.id])});
  }
  r.json = {{"level", n},
            {"group_order", lv.group_order},
            {"vertices", labels},
            {"edges", edges},
            {"connectivity", to_json(connectivity(lv.derived))}};
  return r;
}

Result cmd_groups(const GraphSpec& s, const Options& o, GroupKind which) {
  Result r;
  Json levels = Json::array();
  r.table.columns = {"n", "rank", "factors"};
  const unsigned lo = o.level ? *o.level : 0, hi = o.level ? *o.level : o.max_level;
  for (unsigned n = lo; n <= hi; ++n) {
    const AbGroupPresentation g = level_groups(s.graph, s.voltage, n, which, o.budget);
    Json jg = to_json(g);
    jg["n"] = n;
    levels.push_back(std::move(jg));
    r.table.rows.push_back({std::to_string(n), std::to_string(g.free_rank), factors_string(g)});
  }
  r.json = {{"group", to_string(which)}, {"levels", levels}};
  return r;
}

Result cmd_zeta(const GraphSpec& s, const Options& o) {
  const unsigned n = level_or(o, 0);
  check_budget(s.graph, s.p, s.d, n, o.budget);
  const IntPoly z = zeta_reciprocal(derived_digraph(s.graph, s.voltage, n).derived);
  Result r;
  r.json = {{"level", n}, {"reciprocal", to_json(z)}};
  r.table.columns = {"degree", "coeff"};
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) r.table.rows.push_back({std::to_string(i), z.coeffs()[i].get_str()});
  return r;
}

std::string cyclo_coeffs_string(const CycloElement& e) {
  std::vector<std::string> c;
  for (const auto& q : e.coeffs()) c.push_back(q.get_str());
  return join(c, " ");
}

Result cmd_lfun(const GraphSpec& s, const Options& o) {
  const unsigned n = level_or(o, 1);
  check_budget(s.graph, s.p, s.d, n, o.budget);
  const auto chars = all_characters(s.p, s.d, n);
  std::vector<std::optional<LFunctionReciprocal>> out(chars.size());
  parallel_for(chars.size(), [&](std::size_t i) {
    out[i] = l_function_reciprocal(s.graph, s.voltage, chars[i].primitive());
  });
  Result r;
  Json list = Json::array();
  r.table.columns = {"character", "degree", "coeffs"};
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const LFunctionReciprocal& f = *out[i];
    list.push_back({{"character", to_json(f.character)}, {"reciprocal", to_json(f.poly)}});
    for (std::size_t k = 0; k < f.poly.coeffs().size(); ++k)
      r.table.rows.push_back({f.character.to_string(), std::to_string(k), cyclo_coeffs_string(f.poly.coeffs()[k])});
  }
  r.json = {{"level", n}, {"l_functions", list}};
  return r;
}

Result laurent_result(const LaurentPolyZ& f, const char* name) {
  Result r;
  r.json = {{"function", name}, {"d", f.num_vars()}, {"terms", to_json(f)}, {"display", f.to_string()}};
  r.table.columns = {"exps", "coeff"};
  for (const auto& [e, c] : f.terms()) {
    std::vector<std::string> es;
    for (auto k : e) es.push_back(std::to_string(k));
    r.table.rows.push_back({join(es, " "), c.get_str()});
  }
  return r;
}

std::vector<unsigned long> primes_or_default(const Options& o) {
  if (o.primes.empty()) throw std::invalid_argument("--prime is required for this command");
  return o.primes;
}

Result cmd_mu(const GraphSpec& s, const Options& o) {
  Result r;
  Json list = Json::array();
  r.table.columns = {"l", "function", "mu"};
  for (GroupKind k : {GroupKind::picard, GroupKind::bowen_franks}) {
    const LaurentPolyZ f = tower_function(s.graph, s.voltage, k);
    for (unsigned long l : primes_or_default(o)) {
      const Json mu = f.is_zero() ? Json(nullptr) : Json(mu_l(f, l));
      const char* name = k == GroupKind::picard ? "padic_zeta" : "padic_bf";
      list.push_back({{"l", l}, {"function", name}, {"mu", mu}});
      r.table.rows.push_back({std::to_string(l), name, mu.is_null() ? "undefined" : std::to_string(mu.get<long>())});
    }
  }
  r.json = {{"mu", list}};
  return r;
}

Result cmd_lambda(const GraphSpec& s, const Options&) {
  Result r;
  Json list = Json::array();
  r.table.columns = {"function", "mu", "lambda"};
  for (GroupKind k : {GroupKind::picard, GroupKind::bowen_franks}) {
    const LaurentPolyZ f = tower_function(s.graph, s.voltage, k);
    const char* name = k == GroupKind::picard ? "padic_zeta" : "padic_bf";
    if (f.is_zero()) {
      list.push_back({{"function", name}, {"invariants", nullptr}});
      r.table.rows.push_back({name, "undefined", "undefined"});
      continue;
    }
    const IwasawaInvariants inv = iwasawa_mu_lambda_d1(f, s.p);
    list.push_back({{"function", name}, {"invariants", to_json(inv)}});
    r.table.rows.push_back({name, std::to_string(inv.mu), std::to_string(inv.lambda)});
  }
  r.json = {{"p", s.p}, {"lambda", list}};
  return r;
}

Result cmd_growth(const GraphSpec& s, const Options& o) {
  Result r;
  Json tables = Json::array();
  r.table.columns = {"l", "n", "observed", "predicted", "residual"};
  for (unsigned long l : primes_or_default(o)) {
    const GrowthTable t = growth_experiment(s.graph, s.voltage, l, o.max_level, parse_which(o.which), o.budget);
    tables.push_back(to_json(t));
    for (const auto& row : t.rows)
      r.table.rows.push_back({std::to_string(l), std::to_string(row.n), std::to_string(row.observed),
                              row.predicted.get_str(), row.residual.get_str()});
  }
  r.json = {{"growth", tables}};
  return r;
}

Result cmd_defect(const GraphSpec& s, const Options& o) {
  const DefectReport rep = defect_series(s.graph, s.voltage, o.max_level, o.budget);
  Result r;
  r.json = to_json(rep);
  r.table.columns = {"n", "a", "b", "delta"};
  for (const auto& lv : rep.levels)
    r.table.rows.push_back({std::to_string(lv.n), std::to_string(lv.a), std::to_string(lv.b), std::to_string(lv.delta)});
  r.verification_failed = !rep.consistent();
  return r;
}

// ---- verification ----

struct Tower {
  std::string name;
  GraphSpec spec;
};

Json verify_one(const std::string& what, const GraphSpec& s, const Options& o, bool& holds) {
  const Digraph& x = s.graph;
  const VoltageAssignment& a = s.voltage;
  if (what == "artin") {
    const ArtinReport rep = artin_check(x, a, level_or(o, 1), o.budget);
    holds = rep.holds;
    return to_json(rep);
  }
  if (what == "control") {
    const unsigned m = level_or(o, 1);
    const unsigned n = o.base_level.value_or(m == 0 ? 0 : m - 1);
    const bool pic = control_check(x, a, m, n, GroupKind::picard, o.budget);
    const bool bf = control_check(x, a, m, n, GroupKind::bowen_franks, o.budget);
    holds = pic && bf;
    return {{"m", m}, {"n", n}, {"pic", pic}, {"bf", bf}};
  }
  if (what == "interpolation") {
    const unsigned n = level_or(o, 1);
    const bool regular = out_regular_degree(x).has_value();
    const auto chars = all_characters(s.p, s.d, n);
    std::vector<char> ok(chars.size(), 0);
    parallel_for(chars.size(), [&](std::size_t i) {
      ok[i] = interpolation_check(x, a, chars[i], regular ? InterpolationBranch::both : InterpolationBranch::bowen_franks);
    });
    Json failures = Json::array();
    for (std::size_t i = 0; i < chars.size(); ++i)
      if (!ok[i]) failures.push_back(to_json(chars[i]));
    holds = failures.empty();
    return {{"level", n}, {"out_regular_branch", regular}, {"characters_checked", chars.size()}, {"failures", failures}};
  }
  if (what == "nonvanish") {
    const NonvanishingReport rep = nonvanishing_check(x, a, level_or(o, 1));
    holds = rep.holds();
    return to_json(rep);
  }
  throw std::invalid_argument("unknown verification '" + what + "'");
}

Result cmd_verify(const std::string& what, const std::vector<Tower>& towers, const Options& o) {
  Result r;
  Json list = Json::array();
  bool all = true;
  r.table.columns = {"tower", "check", "holds"};
  for (const Tower& t : towers) {
    bool holds = false;
    Json detail = verify_one(what, t.spec, o, holds);
    all = all && holds;
    list.push_back({{"tower", t.name}, {"holds", holds}, {"detail", std::move(detail)}});
    r.table.rows.push_back({t.name, what, yes_no(holds)});
  }
  r.json = {{"check", what}, {"holds", all}, {"towers", list}};
  r.verification_failed = !all;
  return r;
}

std::vector<Tower> load_towers(const Options& o) {
  std::vector<Tower> towers;
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    RandomTowerOptions ro;
    ro.p = o.random_p;
    for (std::size_t i = 0; i < o.random; ++i) {
      RandomTower t = o.random_q ? random_out_regular_tower(rng, o.random_q, ro) : random_tower(rng, ro);
      GraphSpec s;
      s.p = ro.p;
      s.d = ro.d;
      s.graph = std::move(t.graph);
      s.voltage = std::move(t.voltage);
      towers.push_back({"random-" + std::to_string(i), std::move(s)});
    }
    return towers;
  }
  if (o.input.empty()) throw std::invalid_argument("either --input or --random is required");
  towers.push_back({o.input, load_graph_spec(o.input)});
  return towers;
}

void emit(const Result& r, const Options& o) {
  if (o.format == "json") std::cout << r.json.dump(2) << "\n";
  else if (o.format == "csv") print_csv(r.table, std::cout);
  else print_text(r.table, std::cout);
}

void emit_error(const std::string& kind, const std::string& message, const Json& extra = Json::object()) {
  Json j = {{"error", kind}, {"message", message}};
  for (const auto& [k, v] : extra.items()) j[k] = v;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iwasawa invariants of voltage towers of digraphs"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool levels) {
    c->add_option("--input", o.input, "graph spec JSON file");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    c->add_option("--threads", o.threads, "worker thread cap")->check(CLI::PositiveNumber);
    c->add_option("--seed", o.seed, "seed for --random");
    c->add_option("--budget", o.budget, "maximum derived vertex count")->check(CLI::PositiveNumber);
    c->add_option("--random", o.random, "use this many random towers instead of --input");
    c->add_option("--random-p", o.random_p, "p for random towers")->check(CLI::IsMember({2ul, 3ul, 5ul, 7ul}));
    c->add_option("--random-out-degree", o.random_q, "make random towers out-regular of this degree");
    c->add_option("--prime", o.primes, "prime l for mu and growth (repeatable)");
    if (levels) {
      c->add_option("--max-level", o.max_level, "highest level");
      c->add_option("--level", o.level, "single level");
    }
  };

  std::string verify_what;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  const std::pair<const char*, const char*> commands[] = {
      {"inspect", "base matrices and connectivity"},
      {"derive", "edge list of the level-n derived digraph"},
      {"pic", "Picard groups by level"},
      {"bf", "Bowen-Franks groups by level"},
      {"zeta", "det(Id - uA) of X_n"},
      {"lfun", "det(Id - uA_w) for every character of level n"},
      {"padic-zeta", "det(D - A_alpha)"},
      {"padic-bf", "det(Id - A_alpha)"},
      {"mu", "mu_l of both Laurent functions"},
      {"lambda", "mu_p and lambda_p (d = 1)"},
      {"growth", "observed l-valuations of the torsion against mu_l p^n"},
      {"defect", "analytic and algebraic ranks by level"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* c = app.add_subcommand(name, help);
    common(c, true);
    const std::string n = name;
    if (n == "growth") c->add_option("--which", o.which, "pic or bf")->check(CLI::IsMember({"pic", "bf"}));
    subs.emplace_back(n, c);
  }
  CLI::App* verify = app.add_subcommand("verify", "check an identity; exit 2 when it fails");
  common(verify, true);
  verify->add_option("check", verify_what, "artin | control | interpolation | nonvanish")
      ->required()
      ->check(CLI::IsMember({"artin", "control", "interpolation", "nonvanish"}));
  verify->add_option("--base-level", o.base_level, "lower level n of the control check (default level - 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    set_thread_cap(o.threads);
    const std::vector<Tower> towers = load_towers(o);
    Result r;
    if (verify->parsed()) {
      r = cmd_verify(verify_what, towers, o);
    } else {
      if (towers.size() != 1) throw std::invalid_argument("--random must be 1 for this command");
      const GraphSpec& s = towers.front().spec;
      std::string cmd;
      for (const auto& [n, c] : subs)
        if (c->parsed()) cmd = n;
      if (cmd == "inspect") r = cmd_inspect(s, o);
      else if (cmd == "derive") r = cmd_derive(s, o);
      else if (cmd == "pic") r = cmd_groups(s, o, GroupKind::picard);
      else if (cmd == "bf") r = cmd_groups(s, o, GroupKind::bowen_franks);
      else if (cmd == "zeta") r = cmd_zeta(s, o);
      else if (cmd == "lfun") r = cmd_lfun(s, o);
      else if (cmd == "padic-zeta") r = laurent_result(p_adic_zeta(s.graph, s.voltage), "padic_zeta");
      else if (cmd == "padic-bf") r = laurent_result(p_adic_bf(s.graph, s.voltage), "padic_bf");
      else if (cmd == "mu") r = cmd_mu(s, o);
      else if (cmd == "lambda") r = cmd_lambda(s, o);
      else if (cmd == "growth") r = cmd_growth(s, o);
      else if (cmd == "defect") r = cmd_defect(s, o);
    }
    emit(r, o);
    return r.verification_failed ? kExitVerifyFailed : kExitOk;
  } catch (const BudgetExceeded& e) {
    emit_error("budget_exceeded", e.what(),
               {{"needed", e.needed}, {"budget", e.budget}});
  } catch (const SpecError& e) {
    emit_error(e.code_name(), e.what(), {{"code", static_cast<int>(e.code())}});
  } catch (const std::exception& e) {
    emit_error("error", e.what());
  }
  return kExitError;
}
