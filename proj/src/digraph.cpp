#include "iwtower/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace iwtower {

Digraph::Digraph(std::vector<std::string> vertex_labels)
    : labels_(std::move(vertex_labels)), out_(labels_.size()), in_(labels_.size()) {
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate vertex label");
}

Digraph::Digraph(std::vector<std::string> vertex_labels,
                 const std::vector<std::pair<std::size_t, std::size_t>>& arcs)
    : Digraph(std::move(vertex_labels)) {
  for (auto [s, t] : arcs) add_edge(s, t);
}

std::size_t Digraph::add_edge(std::size_t src, std::size_t dst) {
  if (src >= labels_.size() || dst >= labels_.size())
    throw std::out_of_range("edge endpoint out of range");
  const std::size_t id = edges_.size();
  edges_.push_back({id, src, dst});
  out_[src].push_back(id);
  in_[dst].push_back(id);
  return id;
}

std::optional<std::size_t> Digraph::find_vertex(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::vector<std::size_t>> Digraph::successor_lists() const {
  std::vector<std::vector<std::size_t>> succ(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (std::size_t e : out_[v]) succ[v].push_back(edges_[e].dst);
    std::sort(succ[v].begin(), succ[v].end());
    succ[v].erase(std::unique(succ[v].begin(), succ[v].end()), succ[v].end());
  }
  return succ;
}

Digraph digraph_from_adjacency(const IntMatrix& adjacency) {
  if (!adjacency.is_square()) throw std::invalid_argument("adjacency matrix must be square");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < adjacency.rows(); ++i) labels.push_back("v" + std::to_string(i + 1));
  Digraph g(labels);
  for (std::size_t j = 0; j < adjacency.cols(); ++j)
    for (std::size_t i = 0; i < adjacency.rows(); ++i) {
      if (adjacency(i, j) < 0) throw std::invalid_argument("negative adjacency entry");
      for (Integer k = 0; k < adjacency(i, j); ++k) g.add_edge(j, i);
    }
  return g;
}

Digraph directed_cycle(std::size_t r) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("c" + std::to_string(i));
  Digraph g(labels);
  for (std::size_t i = 0; i < r; ++i) g.add_edge(i, (i + 1) % r);
  return g;
}

IntMatrix adjacency_matrix(const Digraph& g) {
  if (g.empty()) throw std::invalid_argument("empty graph");
  const std::size_t n = g.vertex_count();
  IntMatrix a(n, n, Integer(0));
  for (const Edge& e : g.edges()) a(e.dst, e.src) += 1;
  return a;
}

IntMatrix degree_matrix(const Digraph& g) {
  if (g.empty()) throw std::invalid_argument("empty graph");
  const std::size_t n = g.vertex_count();
  IntMatrix d(n, n, Integer(0));
  for (std::size_t v = 0; v < n; ++v) d(v, v) = static_cast<unsigned long>(g.out_degree(v));
  return d;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.vertex_count();
  const auto succ = g.successor_lists();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t next_index = 0;

  struct Frame {
    std::size_t v;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < succ[f.v].size()) {
        const std::size_t w = succ[f.v][f.child++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  return components;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ConnectivityReport connectivity(const Digraph& g) {
  ConnectivityReport report;
  const std::size_t n = g.vertex_count();
  if (n == 0) return report;

  const auto comps = strongly_connected_components(g);
  report.scc_count = comps.size();
  report.strongly_connected = comps.size() == 1;

  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t v : comps[c]) comp_of[v] = c;
  // A reach is the set of vertices that reach a given sink component of the condensation.
  std::vector<bool> has_exit(comps.size(), false);
  for (const Edge& e : g.edges())
    if (comp_of[e.src] != comp_of[e.dst]) has_exit[comp_of[e.src]] = true;
  report.reach_count = static_cast<std::size_t>(std::count(has_exit.begin(), has_exit.end(), false));

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : g.edges()) {
    const std::size_t a = find_root(parent, e.src), b = find_root(parent, e.dst);
    if (a != b) parent[a] = b;
  }
  std::size_t roots = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (find_root(parent, v) == v) ++roots;
  report.weakly_connected = roots == 1;
  return report;
}

std::optional<std::size_t> out_regular_degree(const Digraph& g) {
  if (g.empty()) return std::nullopt;
  const std::size_t q = g.out_degree(0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (g.out_degree(v) != q) return std::nullopt;
  return q;
}

}  // namespace iwtower
