#include "dcn/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "dcn/errors.hpp"

namespace dcn {

Graph::Graph(std::vector<std::string> labels, std::vector<Edge> edges) : labels_(std::move(labels)) {
  const auto n = labels_.size();
  if (n > std::numeric_limits<VertexId>::max()) throw InvalidArgument("too many vertices");
  for (VertexId v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], v).second) {
      throw InvalidArgument("duplicate vertex label '" + labels_[v] + "'");
    }
  }
  for (auto& [a, b] : edges) {
    if (a >= n || b >= n) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("self-loop at '" + labels_[a] + "'");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edge_count_ = edges.size();

  std::vector<std::size_t> deg(n, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    targets_[cursor[a]++] = b;
    targets_[cursor[b]++] = a;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  if (u >= order() || v >= order()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::id(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InvalidArgument("unknown vertex '" + std::string(label) + "'");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> Graph::labeled_edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edge_count_);
  for (const auto& [u, v] : edges()) {
    const auto& a = labels_[u];
    const auto& b = labels_[v];
    if (a < b) {
      out.emplace_back(a, b);
    } else {
      out.emplace_back(b, a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::sorted_by_label() const {
  std::vector<VertexId> perm(order());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](VertexId a, VertexId b) { return labels_[a] < labels_[b]; });
  std::vector<VertexId> rank(order());
  std::vector<std::string> labels(order());
  for (VertexId i = 0; i < order(); ++i) {
    rank[perm[i]] = i;
    labels[i] = labels_[perm[i]];
  }
  auto es = edges();
  for (auto& [a, b] : es) {
    a = rank[a];
    b = rank[b];
  }
  return Graph(std::move(labels), std::move(es));
}

Graph build_graph(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, VertexId, std::less<>> ids;
  for (VertexId v = 0; v < labels.size(); ++v) {
    if (!ids.emplace(labels[v], v).second) throw InvalidArgument("duplicate vertex label '" + labels[v] + "'");
  }
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = ids.find(a);
    if (ia == ids.end()) throw InvalidArgument("edge (" + a + ", " + b + ") has unknown endpoint '" + a + "'");
    auto ib = ids.find(b);
    if (ib == ids.end()) throw InvalidArgument("edge (" + a + ", " + b + ") has unknown endpoint '" + b + "'");
    if (ia->second == ib->second) throw InvalidArgument("self-loop at '" + a + "'");
    es.emplace_back(ia->second, ib->second);
  }
  return Graph(labels, std::move(es));
}

std::vector<std::vector<VertexId>> components(const Graph& g, const std::vector<bool>& removed) {
  if (removed.size() != g.order()) throw InvalidArgument("removal mask size mismatch");
  std::vector<bool> seen(removed);
  std::vector<std::vector<VertexId>> out;
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = true;
    queue.push_back(s);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  return components(g, std::vector<bool>(g.order(), false));
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph delete_vertices(const Graph& g, std::span<const VertexId> s) {
  std::vector<bool> removed(g.order(), false);
  for (VertexId v : s) {
    if (v >= g.order()) throw InvalidArgument("cannot delete unknown vertex id " + std::to_string(v));
    removed[v] = true;
  }
  std::vector<VertexId> remap(g.order(), 0);
  std::vector<std::string> labels;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (removed[v]) continue;
    remap[v] = static_cast<VertexId>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> es;
  for (const auto& [a, b] : g.edges()) {
    if (!removed[a] && !removed[b]) es.emplace_back(remap[a], remap[b]);
  }
  return Graph(std::move(labels), std::move(es));
}

namespace {

// Residual network for vertex-disjoint paths: v_in = 2v, v_out = 2v + 1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * g.order(), -1) {
    for (VertexId v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const auto& [a, b] : g.edges()) {
      add_arc(2 * a + 1, 2 * b, kInf);
      add_arc(2 * b + 1, 2 * a, kInf);
    }
    initial_cap_ = cap_;
  }

  // Number of internally vertex-disjoint s-t paths, stopping once `limit` is reached.
  std::size_t disjoint_paths(VertexId s, VertexId t, std::size_t limit) {
    cap_ = initial_cap_;
    const int source = static_cast<int>(2 * s + 1);
    const int sink = static_cast<int>(2 * t);
    std::size_t flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        int x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            queue.push_back(to_[a]);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int x = sink; x != source; x = to_[via[x] ^ 1]) {
        --cap_[via[x]];
        ++cap_[via[x] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr int kInf = 1 << 30;

  void add_arc(std::size_t from, std::size_t to, int cap) {
    for (auto [x, y, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
      to_.push_back(static_cast<int>(y));
      cap_.push_back(c);
      next_.push_back(head_[x]);
      head_[x] = static_cast<int>(to_.size() - 1);
    }
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> initial_cap_;
  std::vector<int> next_;
};

}  // namespace

std::size_t min_vertex_cut(const Graph& g) {
  const auto n = g.order();
  if (n < 2) throw InvalidArgument("min_vertex_cut needs at least two vertices");
  if (!is_connected(g)) throw InvalidArgument("min_vertex_cut needs a connected graph");

  std::size_t best = n - 1;
  for (VertexId v = 0; v < n; ++v) best = std::min(best, g.degree(v));

  // Some vertex among the first best+1 lies outside a minimum cut, and it is
  // separated from a later vertex (Even's argument), so sources beyond
  // index `best` never need to be tried.
  SplitNetwork net(g);
  for (VertexId s = 0; s < n && s <= best; ++s) {
    for (VertexId t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, net.disjoint_paths(s, t, best));
    }
  }
  return best;
}

Graph line_graph(const Graph& g, std::string_view sep) {
  auto es = g.edges();
  std::vector<std::string> labels;
  labels.reserve(es.size());
  for (const auto& [a, b] : es) {
    const auto& la = g.label(a);
    const auto& lb = g.label(b);
    labels.push_back(la < lb ? la + std::string(sep) + lb : lb + std::string(sep) + la);
  }
  // Edge index per incident vertex.
  std::vector<std::vector<VertexId>> incident(g.order());
  for (VertexId e = 0; e < es.size(); ++e) {
    incident[es[e].first].push_back(e);
    incident[es[e].second].push_back(e);
  }
  std::vector<Edge> adj;
  for (const auto& inc : incident) {
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) adj.emplace_back(inc[i], inc[j]);
    }
  }
  return Graph(std::move(labels), std::move(adj)).sorted_by_label();
}

}  // namespace dcn
