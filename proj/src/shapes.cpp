#include "dcn/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "dcn/errors.hpp"

namespace dcn {

namespace {

std::size_t checked(std::size_t value, std::size_t min, const char* what) {
  if (value < min) {
    throw InvalidArgument(std::string(what) + " must be at least " + std::to_string(min) + ", got " +
                          std::to_string(value));
  }
  return value;
}

const char* param_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::star: return "t";
    case ShapeKind::path:
    case ShapeKind::cycle: return "k";
    case ShapeKind::clique: return "s";
    case ShapeKind::single: break;
  }
  return "";
}

std::size_t parse_count(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("bad shape '" + std::string(whole) + "'");
  }
  return v;
}

// Combinations of `pool` of size r in lexicographic order.
template <typename F>
bool for_each_combination(const std::vector<VertexId>& pool, std::size_t r, F&& f) {
  if (r > pool.size()) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<VertexId> pick(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) pick[i] = pool[idx[i]];
    if (!f(pick)) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == pool.size() - r + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class Enumerator {
 public:
  Enumerator(const Graph& g, ShapeSpec host, const std::function<bool(const CutMember&)>& emit)
      : g_(g), host_(host), emit_(emit), on_path_(g.order(), false) {}

  bool singles() {
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (!emit({v})) return false;
    }
    return true;
  }

  bool stars(std::size_t t) {
    for (VertexId c = 0; c < g_.order(); ++c) {
      std::vector<VertexId> pool(g_.neighbors(c).begin(), g_.neighbors(c).end());
      if (t == 1) std::erase_if(pool, [c](VertexId x) { return x < c; });
      bool go = for_each_combination(pool, t, [&](const std::vector<VertexId>& leaves) {
        std::vector<VertexId> m{c};
        m.insert(m.end(), leaves.begin(), leaves.end());
        return emit(std::move(m));
      });
      if (!go) return false;
    }
    return true;
  }

  bool paths(std::size_t k) {
    if (k == 1) return singles();
    for (VertexId s = 0; s < g_.order(); ++s) {
      path_ = {s};
      on_path_[s] = true;
      bool go = extend_path(k);
      on_path_[s] = false;
      if (!go) return false;
    }
    return true;
  }

  bool cycles(std::size_t k) {
    for (VertexId s = 0; s < g_.order(); ++s) {
      path_ = {s};
      on_path_[s] = true;
      bool go = extend_cycle(k);
      on_path_[s] = false;
      if (!go) return false;
    }
    return true;
  }

  bool cliques(std::size_t s) {
    std::vector<VertexId> current;
    return extend_clique(current, s);
  }

  // Every connected vertex set of size <= s, each once, as a sorted list.
  bool connected_sets(std::size_t s) {
    for (VertexId v = 0; v < g_.order(); ++v) {
      std::vector<VertexId> sub{v};
      std::vector<VertexId> ext;
      for (VertexId y : g_.neighbors(v)) {
        if (y > v) ext.push_back(y);
      }
      if (!extend_subgraph(sub, ext, v, s)) return false;
    }
    return true;
  }

 private:
  bool emit(std::vector<VertexId> vs) { return emit_(CutMember{host_, std::move(vs)}); }

  bool extend_path(std::size_t k) {
    if (path_.size() == k) {
      if (path_.front() < path_.back()) return emit(path_);
      return true;
    }
    for (VertexId y : g_.neighbors(path_.back())) {
      if (on_path_[y]) continue;
      path_.push_back(y);
      on_path_[y] = true;
      bool go = extend_path(k);
      on_path_[y] = false;
      path_.pop_back();
      if (!go) return false;
    }
    return true;
  }

  bool extend_cycle(std::size_t k) {
    if (path_.size() == k) {
      if (path_[1] < path_.back() && g_.adjacent(path_.back(), path_.front())) return emit(path_);
      return true;
    }
    for (VertexId y : g_.neighbors(path_.back())) {
      if (y <= path_.front() || on_path_[y]) continue;
      path_.push_back(y);
      on_path_[y] = true;
      bool go = extend_cycle(k);
      on_path_[y] = false;
      path_.pop_back();
      if (!go) return false;
    }
    return true;
  }

  bool extend_clique(std::vector<VertexId>& current, std::size_t s) {
    if (current.size() == s) return emit(current);
    VertexId start = current.empty() ? 0 : current.back() + 1;
    if (current.empty()) {
      for (VertexId v = start; v < g_.order(); ++v) {
        current.push_back(v);
        bool go = extend_clique(current, s);
        current.pop_back();
        if (!go) return false;
      }
      return true;
    }
    for (VertexId y : g_.neighbors(current.front())) {
      if (y < start) continue;
      bool ok = std::all_of(current.begin() + 1, current.end(), [&](VertexId x) { return g_.adjacent(x, y); });
      if (!ok) continue;
      current.push_back(y);
      bool go = extend_clique(current, s);
      current.pop_back();
      if (!go) return false;
    }
    return true;
  }

  // ESU step: `ext` holds candidates larger than the root that neighbour the
  // current set but not through an earlier-added vertex.
  bool extend_subgraph(std::vector<VertexId>& sub, std::vector<VertexId> ext, VertexId root, std::size_t s) {
    {
      std::vector<VertexId> sorted = sub;
      std::sort(sorted.begin(), sorted.end());
      if (!emit(std::move(sorted))) return false;
    }
    if (sub.size() == s) return true;
    while (!ext.empty()) {
      VertexId w = ext.back();
      ext.pop_back();
      std::vector<VertexId> next = ext;
      for (VertexId y : g_.neighbors(w)) {
        if (y <= root) continue;
        if (std::find(sub.begin(), sub.end(), y) != sub.end()) continue;
        if (std::find(next.begin(), next.end(), y) != next.end()) continue;
        bool near_sub = std::any_of(sub.begin(), sub.end(), [&](VertexId x) { return g_.adjacent(x, y); });
        if (!near_sub) next.push_back(y);
      }
      sub.push_back(w);
      bool go = extend_subgraph(sub, std::move(next), root, s);
      sub.pop_back();
      if (!go) return false;
    }
    return true;
  }

  const Graph& g_;
  ShapeSpec host_;
  const std::function<bool(const CutMember&)>& emit_;
  std::vector<VertexId> path_;
  std::vector<bool> on_path_;
};

bool consecutive(const Graph& g, const std::vector<VertexId>& vs) {
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  }
  return true;
}

bool star_like(const Graph& g, const std::vector<VertexId>& vs) {
  return std::all_of(vs.begin() + 1, vs.end(), [&](VertexId x) { return g.adjacent(vs.front(), x); });
}

bool induced_connected(const Graph& g, const std::vector<VertexId>& vs) {
  std::vector<bool> removed(g.order(), true);
  for (VertexId v : vs) removed[v] = false;
  return components(g, removed).size() == 1;
}

}  // namespace

ShapeSpec ShapeSpec::star(std::size_t t) { return {ShapeKind::star, checked(t, 1, "star leaf count t")}; }
ShapeSpec ShapeSpec::path(std::size_t k) { return {ShapeKind::path, checked(k, 1, "path vertex count k")}; }
ShapeSpec ShapeSpec::cycle(std::size_t k) { return {ShapeKind::cycle, checked(k, 3, "cycle vertex count k")}; }
ShapeSpec ShapeSpec::clique(std::size_t s) { return {ShapeKind::clique, checked(s, 1, "clique vertex count s")}; }

std::size_t ShapeSpec::vertex_count() const {
  switch (kind) {
    case ShapeKind::star: return param + 1;
    case ShapeKind::single: return 1;
    default: return param;
  }
}

std::string ShapeSpec::kind_name() const {
  switch (kind) {
    case ShapeKind::star: return "star";
    case ShapeKind::path: return "path";
    case ShapeKind::cycle: return "cycle";
    case ShapeKind::clique: return "clique";
    case ShapeKind::single: break;
  }
  return "single";
}

std::string ShapeSpec::tag() const {
  if (kind == ShapeKind::single) return "single";
  return kind_name() + "(" + param_name(kind) + "=" + std::to_string(param) + ")";
}

ShapeSpec ShapeSpec::parse(std::string_view text) {
  if (text == "single") return single();
  std::string_view name;
  std::string_view value;
  if (auto open = text.find('('); open != std::string_view::npos) {
    auto eq = text.find('=', open);
    if (eq == std::string_view::npos || text.back() != ')') throw InvalidArgument("bad shape '" + std::string(text) + "'");
    name = text.substr(0, open);
    value = text.substr(eq + 1, text.size() - eq - 2);
  } else if (auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    value = text.substr(colon + 1);
  } else {
    throw InvalidArgument("bad shape '" + std::string(text) + "'");
  }
  std::size_t p = parse_count(value, text);
  if (name == "star") return star(p);
  if (name == "path") return path(p);
  if (name == "cycle") return cycle(p);
  if (name == "clique") return clique(p);
  throw InvalidArgument("unknown shape kind '" + std::string(name) + "'");
}

std::string to_string(CutMode mode) { return mode == CutMode::structure ? "structure" : "substructure"; }

CutMode parse_mode(std::string_view text) {
  if (text == "structure") return CutMode::structure;
  if (text == "substructure") return CutMode::substructure;
  throw InvalidArgument("unknown mode '" + std::string(text) + "'");
}

bool is_shape(const Graph& g, const CutMember& member, CutMode mode) {
  const auto& vs = member.vertices;
  std::set<VertexId> seen;
  for (VertexId v : vs) {
    if (v >= g.order()) throw InvalidArgument("member vertex id " + std::to_string(v) + " not in graph");
    if (!seen.insert(v).second) throw InvalidArgument("member repeats vertex '" + g.label(v) + "'");
  }
  if (vs.empty()) return false;
  const auto& shape = member.shape;
  const std::size_t n = vs.size();

  if (mode == CutMode::structure) {
    if (n != shape.vertex_count()) return false;
    switch (shape.kind) {
      case ShapeKind::single: return true;
      case ShapeKind::star: return star_like(g, vs);
      case ShapeKind::path: return consecutive(g, vs);
      case ShapeKind::cycle: return consecutive(g, vs) && g.adjacent(vs.back(), vs.front());
      case ShapeKind::clique:
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            if (!g.adjacent(vs[i], vs[j])) return false;
          }
        }
        return true;
    }
    return false;
  }

  if (n > shape.vertex_count()) return false;
  switch (shape.kind) {
    case ShapeKind::single: return true;
    case ShapeKind::star: return star_like(g, vs);
    case ShapeKind::path: return consecutive(g, vs);
    case ShapeKind::cycle: return consecutive(g, vs);
    case ShapeKind::clique: return induced_connected(g, vs);
  }
  return false;
}

void enumerate_shape_copies(const Graph& g, const ShapeSpec& shape, CutMode mode,
                            const std::function<bool(const CutMember&)>& emit) {
  Enumerator e(g, shape, emit);
  if (mode == CutMode::structure) {
    switch (shape.kind) {
      case ShapeKind::single: e.singles(); break;
      case ShapeKind::star: e.stars(shape.param); break;
      case ShapeKind::path: e.paths(shape.param); break;
      case ShapeKind::cycle: e.cycles(shape.param); break;
      case ShapeKind::clique: e.cliques(shape.param); break;
    }
    return;
  }
  switch (shape.kind) {
    case ShapeKind::single: e.singles(); return;
    case ShapeKind::star:
      if (!e.singles()) return;
      for (std::size_t t = 1; t <= shape.param; ++t) {
        if (!e.stars(t)) return;
      }
      return;
    case ShapeKind::path:
    case ShapeKind::cycle:
      // A k-cycle's vertex sequence is already listed as a canonical P_k.
      for (std::size_t k = 1; k <= shape.param; ++k) {
        if (!e.paths(k)) return;
      }
      return;
    case ShapeKind::clique: e.connected_sets(shape.param); return;
  }
}

std::vector<CutMember> shape_copies(const Graph& g, const ShapeSpec& shape, CutMode mode) {
  std::vector<CutMember> out;
  enumerate_shape_copies(g, shape, mode, [&](const CutMember& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace dcn
