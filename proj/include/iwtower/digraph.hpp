#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iwtower/bigint.hpp"
#include "iwtower/matrix.hpp"

namespace iwtower {

using IntMatrix = Matrix<Integer>;

struct Edge {
  std::size_t id;
  std::size_t src;
  std::size_t dst;
};

/// Finite multidigraph. Loops and parallel edges are allowed; edge ids are 0..|E|-1
/// in insertion order, vertex indices follow the order of the labels.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::vector<std::string> vertex_labels);
  Digraph(std::vector<std::string> vertex_labels,
          const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

  /// Appends an edge src -> dst and returns its id.
  std::size_t add_edge(std::size_t src, std::size_t dst);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }

  std::optional<std::size_t> find_vertex(const std::string& label) const;

  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_.at(v); }
  std::size_t out_degree(std::size_t v) const { return out_.at(v).size(); }
  std::size_t in_degree(std::size_t v) const { return in_.at(v).size(); }

  /// Successor lists with multiplicity collapsed.
  std::vector<std::vector<std::size_t>> successor_lists() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// Builds a digraph with A(i,j) parallel edges v_j -> v_i.
Digraph digraph_from_adjacency(const IntMatrix& adjacency);

Digraph directed_cycle(std::size_t r);

struct ConnectivityReport {
  bool strongly_connected = false;
  bool weakly_connected = false;
  std::size_t reach_count = 0;
  std::size_t scc_count = 0;
};

/// Entry (i,j) = number of edges with inc(e) = (v_j, v_i); column sums are out-degrees.
IntMatrix adjacency_matrix(const Digraph& g);

/// Diagonal matrix of out-degrees.
IntMatrix degree_matrix(const Digraph& g);

/// Strongly connected components in Tarjan order (sinks of the condensation first).
std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& g);

ConnectivityReport connectivity(const Digraph& g);

std::optional<std::size_t> out_regular_degree(const Digraph& g);

}  // namespace iwtower
