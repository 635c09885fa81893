#include "dcn/bcdc.hpp"

#include <algorithm>
#include <map>

#include "dcn/errors.hpp"

namespace dcn {

namespace {

void check_dimension(std::size_t n, std::size_t min) {
  if (n < min) throw RangeError("dimension n must be at least " + std::to_string(min) + ", got " + std::to_string(n));
  if (n > kMaxCubeDimension) {
    throw BudgetError("dimension n=" + std::to_string(n) + " exceeds the supported maximum " +
                      std::to_string(kMaxCubeDimension));
  }
}

// Image of a 2-bit pair under the relation (it is a bijection).
unsigned related_pair(unsigned p) {
  switch (p) {
    case 0b01: return 0b11;
    case 0b11: return 0b01;
    default: return p;
  }
}

// Cross partner of u = 0 u_{k-2} ... u_0 in CQ_k: the 1-prefixed vertex
// satisfying the pair relation on the low pairs and, for even k, equal u_{k-2}.
CqVertex cross_partner(CqVertex u, std::size_t k) {
  CqVertex v = u | (CqVertex{1} << (k - 1));
  for (std::size_t i = 0; i < (k - 1) / 2; ++i) {
    unsigned p = (u >> (2 * i)) & 0b11;
    v = (v & ~(CqVertex{0b11} << (2 * i))) | (CqVertex{related_pair(p)} << (2 * i));
  }
  return v;
}

}  // namespace

bool pair_related(std::string_view x, std::string_view y) {
  auto valid = [](std::string_view s) {
    return s.size() == 2 && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
  };
  if (!valid(x) || !valid(y)) {
    throw InvalidArgument("pair relation needs two 2-bit strings, got '" + std::string(x) + "', '" +
                          std::string(y) + "'");
  }
  return (x == "00" && y == "00") || (x == "10" && y == "10") || (x == "01" && y == "11") ||
         (x == "11" && y == "01");
}

std::string cq_label(CqVertex u, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((u >> i) & 1U) s[n - 1 - i] = '1';
  }
  return s;
}

CqVertex parse_cq_label(std::string_view text, std::size_t n) {
  if (text.size() != n) throw InvalidArgument("crossed-cube label '" + std::string(text) + "' needs " + std::to_string(n) + " bits");
  CqVertex u = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidArgument("crossed-cube label '" + std::string(text) + "' is not binary");
    u = (u << 1) | static_cast<CqVertex>(c - '0');
  }
  return u;
}

CqVertex dim_neighbor(CqVertex u, std::size_t d, std::size_t n) {
  if (d >= n) throw RangeError("dimension " + std::to_string(d) + " out of range for n=" + std::to_string(n));
  CqVertex v = u ^ (CqVertex{1} << d);
  for (std::size_t i = 0; i < d / 2; ++i) {
    unsigned p = (u >> (2 * i)) & 0b11;
    v = (v & ~(CqVertex{0b11} << (2 * i))) | (CqVertex{related_pair(p)} << (2 * i));
  }
  return v;
}

Graph build_crossed_cube(std::size_t n) {
  check_dimension(n, 1);
  // Edges of CQ_k accumulate level by level: copies of CQ_{k-1} keep their
  // edges (the prefix bit does not change ids of the 0 copy) plus cross edges.
  std::vector<Edge> edges{{0, 1}};
  for (std::size_t k = 2; k <= n; ++k) {
    const CqVertex high = CqVertex{1} << (k - 1);
    const std::size_t count = edges.size();
    for (std::size_t e = 0; e < count; ++e) edges.emplace_back(edges[e].first | high, edges[e].second | high);
    for (CqVertex u = 0; u < high; ++u) edges.emplace_back(u, cross_partner(u, k));
  }
  std::vector<std::string> labels;
  for (CqVertex u = 0; u < (CqVertex{1} << n); ++u) labels.push_back(cq_label(u, n));
  return Graph(std::move(labels), std::move(edges));
}

std::string bn_label(CqVertex a, CqVertex b, std::size_t n) {
  auto la = cq_label(a, n);
  auto lb = cq_label(b, n);
  return la < lb ? la + "|" + lb : lb + "|" + la;
}

std::pair<CqVertex, CqVertex> parse_bn_label(std::string_view text, std::size_t n) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw InvalidArgument("BCDC label '" + std::string(text) + "' lacks '|'");
  return {parse_cq_label(text.substr(0, bar), n), parse_cq_label(text.substr(bar + 1), n)};
}

Graph build_bcdc(std::size_t n) {
  check_dimension(n, 2);
  // Vertices are CQ edges (a, b) with a < b; adjacency as index pairs.
  std::vector<std::pair<CqVertex, CqVertex>> verts{{0b00, 0b01}, {0b00, 0b10}, {0b01, 0b11}, {0b10, 0b11}};
  std::vector<Edge> adj{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  for (std::size_t k = 3; k <= n; ++k) {
    const CqVertex high = CqVertex{1} << (k - 1);
    const auto half = static_cast<VertexId>(verts.size());
    std::vector<std::pair<CqVertex, CqVertex>> next;
    next.reserve(2 * half + high);
    for (const auto& [a, b] : verts) next.emplace_back(a, b);
    for (const auto& [a, b] : verts) next.emplace_back(a | high, b | high);
    std::vector<Edge> next_adj;
    next_adj.reserve(2 * adj.size() + 2 * high * (k - 1));
    for (const auto& [x, y] : adj) {
      next_adj.emplace_back(x, y);
      next_adj.emplace_back(x + half, y + half);
    }
    // B^0 and B^1 members incident to each CQ vertex.
    std::vector<std::vector<VertexId>> incident(std::size_t{2} * high);
    for (VertexId i = 0; i < next.size(); ++i) {
      incident[next[i].first].push_back(i);
      incident[next[i].second].push_back(i);
    }
    for (CqVertex c = 0; c < high; ++c) {
      const CqVertex d = cross_partner(c, k);
      const auto s = static_cast<VertexId>(next.size());
      next.emplace_back(c, d);
      for (VertexId x : incident[c]) next_adj.emplace_back(x, s);
      for (VertexId x : incident[d]) next_adj.emplace_back(s, x);
    }
    verts = std::move(next);
    adj = std::move(next_adj);
  }
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (const auto& [a, b] : verts) labels.push_back(bn_label(a, b, n));
  return Graph(std::move(labels), std::move(adj)).sorted_by_label();
}

Graph build_bcdc_via_line_graph(std::size_t n) {
  check_dimension(n, 2);
  return line_graph(build_crossed_cube(n));
}

std::vector<CqVertex> reindexed_neighbors(CqVertex x, CqVertex partner, std::size_t n) {
  std::vector<CqVertex> out;
  for (std::size_t d = 0; d < n; ++d) {
    CqVertex y = dim_neighbor(x, d, n);
    if (y != partner) out.push_back(y);
  }
  if (out.size() != n - 1) {
    throw InvalidArgument(cq_label(partner, n) + " is not a neighbour of " + cq_label(x, n));
  }
  return out;
}

NeighborhoodSplit neighborhood_decomposition(const Graph& bn, std::size_t n, VertexId u) {
  if (u >= bn.order()) throw InvalidArgument("vertex id " + std::to_string(u) + " not in graph");
  auto [v, w] = parse_bn_label(bn.label(u), n);
  NeighborhoodSplit out;
  for (CqVertex y : reindexed_neighbors(v, w, n)) out.v_side.push_back(bn.id(bn_label(v, y, n)));
  for (CqVertex y : reindexed_neighbors(w, v, n)) out.w_side.push_back(bn.id(bn_label(w, y, n)));
  return out;
}

}  // namespace dcn
