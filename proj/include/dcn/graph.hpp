#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcn {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable undirected simple graph with string-labelled vertices.
///
/// Vertex ids are dense in [0, order()); labels are unique. Neighbour lists
/// are sorted ascending, so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Builds from labels and id-pairs. Parallel edges are merged; self-loops,
  /// out-of-range endpoints and duplicate labels throw InvalidArgument.
  Graph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;
  /// Like find() but throws InvalidArgument for an unknown label.
  VertexId id(std::string_view label) const;

  /// Every edge once as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  /// Every edge as a label pair, smaller label first, sorted. Used to compare
  /// graphs built along different routes.
  std::vector<std::pair<std::string, std::string>> labeled_edges() const;

  /// Same graph with vertex ids reassigned in ascending label order.
  Graph sorted_by_label() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::map<std::string, VertexId, std::less<>> index_;
  std::size_t edge_count_ = 0;
};

/// Label-level constructor with validation of every input item.
Graph build_graph(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& edges);

/// Empty and single-vertex graphs count as connected.
bool is_connected(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g);

/// Components of g minus the vertices flagged in `removed` (original ids).
std::vector<std::vector<VertexId>> components(const Graph& g, const std::vector<bool>& removed);

/// Induced subgraph on V(g) \ s. Labels are preserved; ids are renumbered in
/// increasing order of the surviving original ids.
Graph delete_vertices(const Graph& g, std::span<const VertexId> s);

/// Vertex connectivity via vertex-split unit-capacity max flow.
/// Complete graphs return order() - 1. Throws InvalidArgument if g is
/// disconnected or has fewer than two vertices.
std::size_t min_vertex_cut(const Graph& g);

/// Line graph. Vertex for edge {a, b} is labelled "<a><sep><b>" with the
/// lexicographically smaller label first; ids follow label order.
Graph line_graph(const Graph& g, std::string_view sep = "|");

}  // namespace dcn
