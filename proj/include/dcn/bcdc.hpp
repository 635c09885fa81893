#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcn/graph.hpp"

namespace dcn {

/// Crossed-cube vertex as an integer; bit i is u_i.
using CqVertex = std::uint32_t;

inline constexpr std::size_t kMaxCubeDimension = 24;

/// The 2-bit relation {(00,00),(10,10),(01,11),(11,01)}. Throws
/// InvalidArgument unless both strings are two characters of 0/1.
bool pair_related(std::string_view x, std::string_view y);

/// n-character binary string, most significant bit first.
std::string cq_label(CqVertex u, std::size_t n);
CqVertex parse_cq_label(std::string_view text, std::size_t n);

/// d-dimensional neighbour of u in CQ_n. Throws RangeError if d >= n.
CqVertex dim_neighbor(CqVertex u, std::size_t d, std::size_t n);

/// CQ_n from its recursive definition. Vertex id equals the integer value.
Graph build_crossed_cube(std::size_t n);

/// "a|b" with the smaller string first.
std::string bn_label(CqVertex a, CqVertex b, std::size_t n);
std::pair<CqVertex, CqVertex> parse_bn_label(std::string_view text, std::size_t n);

/// B_n from the recursive prefix construction starting at the 4-cycle B_2.
/// Vertex ids follow label order.
Graph build_bcdc(std::size_t n);

/// line_graph(build_crossed_cube(n)).
Graph build_bcdc_via_line_graph(std::size_t n);

/// Dimensions 0..n-2 of x's neighbours other than `partner`, re-indexed in
/// increasing raw dimension after skipping the one that reaches `partner`.
std::vector<CqVertex> reindexed_neighbors(CqVertex x, CqVertex partner, std::size_t n);

struct NeighborhoodSplit {
  std::vector<VertexId> v_side;  // [v, v^i], i = 0..n-2
  std::vector<VertexId> w_side;  // [w, w^i], i = 0..n-2
};

/// N(u) for u = [v, w] in B_n as the two cliques through v and through w.
NeighborhoodSplit neighborhood_decomposition(const Graph& bn, std::size_t n, VertexId u);

}  // namespace dcn
