#include "dcn/cuts.hpp"

#include <algorithm>
#include <set>

#include "dcn/bcdc.hpp"
#include "dcn/errors.hpp"

namespace dcn {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

[[noreturn]] void out_of_range(const std::string& what) { throw RangeError(what); }

std::string str(std::size_t x) { return std::to_string(x); }

// Smallest `count` ids from `candidates` not in `exclude`.
std::vector<VertexId> fill(std::vector<VertexId> candidates, const std::set<VertexId>& exclude, std::size_t count) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<VertexId> out;
  for (VertexId c : candidates) {
    if (out.size() == count) break;
    if (!exclude.contains(c)) out.push_back(c);
  }
  if (out.size() < count) throw InvalidArgument("not enough filler vertices for a cut member");
  return out;
}

// Like fill, but takes `avoid` only when nothing else is left.
std::vector<VertexId> fill_avoiding(const std::vector<VertexId>& candidates, std::set<VertexId> exclude,
                                    VertexId avoid, std::size_t count) {
  auto with = exclude;
  exclude.insert(avoid);
  std::size_t spare = 0;
  for (VertexId c : candidates) spare += exclude.contains(c) ? 0 : 1;
  return spare >= count ? fill(candidates, exclude, count) : fill(candidates, with, count);
}

std::set<VertexId> as_set(const std::vector<VertexId>& vs) { return {vs.begin(), vs.end()}; }

void append(std::vector<VertexId>& to, const std::vector<VertexId>& from) { to.insert(to.end(), from.begin(), from.end()); }

// Vertex lookup around the base vertex u = [v, w] of B_n, v = 0^n, w = 10^{n-1}.
struct BnFrame {
  const Graph& g;
  std::size_t n;
  CqVertex v = 0;
  CqVertex w;

  BnFrame(const Graph& graph, std::size_t dim) : g(graph), n(dim), w(CqVertex{1} << (dim - 1)) {
    if (g.order() != n * (std::size_t{1} << (n - 1))) throw InvalidArgument("graph is not B_" + str(n));
  }

  CqVertex nb(CqVertex x, std::size_t d) const { return dim_neighbor(x, d, n); }
  VertexId at(CqVertex a, CqVertex b) const { return g.id(bn_label(a, b, n)); }
  // [c, c^i]
  VertexId side(CqVertex c, std::size_t i) const { return at(c, nb(c, i)); }
  VertexId u() const { return at(v, w); }
  // [c, c^i] for i = 0..n-2
  std::vector<VertexId> clique_path(CqVertex c) const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(side(c, i));
    return out;
  }
  std::vector<VertexId> nbrs(VertexId x) const { return {g.neighbors(x).begin(), g.neighbors(x).end()}; }
};

CutMember member(ShapeSpec shape, std::vector<VertexId> vs) { return CutMember{shape, std::move(vs)}; }

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::dcell: return "dcell";
    case Family::cq: return "cq";
    case Family::bcdc: break;
  }
  return "bcdc";
}

Family parse_family(std::string_view text) {
  if (text == "dcell") return Family::dcell;
  if (text == "cq") return Family::cq;
  if (text == "bcdc") return Family::bcdc;
  throw InvalidArgument("unknown family '" + std::string(text) + "'");
}

std::string FamilyParams::text() const {
  if (family == Family::dcell) return "m=" + str(m) + " n=" + str(n);
  return "n=" + str(n);
}

Graph build_family(const FamilyParams& p, std::size_t vertex_cap) {
  switch (p.family) {
    case Family::dcell: return build_dcell(p.m, p.n, vertex_cap);
    case Family::cq:
      if (p.n <= kMaxCubeDimension && (std::size_t{1} << p.n) > vertex_cap) {
        throw BudgetError("CQ_" + str(p.n) + " exceeds the vertex cap of " + str(vertex_cap));
      }
      return build_crossed_cube(p.n);
    case Family::bcdc: break;
  }
  if (p.n < 2) throw RangeError("B_n needs n >= 2, got n=" + str(p.n));
  if (p.n > kMaxCubeDimension || p.n * (std::size_t{1} << (p.n - 1)) > vertex_cap) {
    throw BudgetError("B_" + str(p.n) + " exceeds the vertex cap of " + str(vertex_cap));
  }
  return build_bcdc(p.n);
}

PredictedValue predicted_kappa(const FamilyParams& p, const ShapeSpec& shape, CutMode mode) {
  const std::size_t n = p.n;
  const std::size_t m = p.m;
  PredictedValue out;
  out.parameter_echo = p.text() + " shape=" + shape.tag() + " mode=" + to_string(mode);
  auto done = [&](std::size_t value, std::string tag, std::optional<std::size_t> r = std::nullopt) {
    out.value = value;
    out.theorem_tag = std::move(tag);
    out.remainder = r;
    if (r) out.parameter_echo += " r=" + str(*r);
    return out;
  };

  if (p.family == Family::cq) out_of_range("no structure-connectivity formula for crossed cubes");

  if (p.family == Family::dcell) {
    if (n < 2) out_of_range("DCell needs n >= 2");
    switch (shape.kind) {
      case ShapeKind::single: return done(n + m - 1, "dcell-single");
      case ShapeKind::star: {
        const std::size_t t = shape.param;
        if (t == m + n - 1) out_of_range("DCell star needs t <= m+n-2; t = m+n-1 has only a lower bound");
        if (t < 1 || t > m + n - 2) out_of_range("DCell star needs 1 <= t <= m+n-2 = " + str(m + n - 2));
        return done(ceil_div(n - 1, 1 + t) + m, "dcell-star", (n - 1) % (1 + t));
      }
      case ShapeKind::clique: {
        const std::size_t s = shape.param;
        if (mode == CutMode::substructure) out_of_range("no substructure formula for DCell cliques");
        if (s < 3 || s + 1 > n) out_of_range("DCell clique needs 3 <= s <= n-1 = " + str(n - 1));
        return done(ceil_div(n - 1, s) + m, "dcell-clique", (n - 1) % s);
      }
      default: out_of_range("no formula for DCell paths or cycles");
    }
  }

  // B_n
  switch (shape.kind) {
    case ShapeKind::single:
      if (n < 2) out_of_range("B_n needs n >= 2");
      return done(2 * n - 2, "bcdc-single");
    case ShapeKind::star: {
      const std::size_t t = shape.param;
      if (n < 4) out_of_range("B_n star needs n >= 4");
      if (t < 1 || t > 2 * n - 3) out_of_range("B_n star needs 1 <= t <= 2n-3 = " + str(2 * n - 3));
      if (t == 1) return n % 2 ? done(n - 1, "bcdc-k11-odd") : done(n, "bcdc-k11-even");
      const std::size_t r = (n - 1) % (1 + t);
      if (t <= n - 3 && r == 1) return done((2 * n - 4) / (1 + t) + 1, "bcdc-star-r1", r);
      return done(2 * ceil_div(n - 1, 1 + t), "bcdc-star", r);
    }
    case ShapeKind::path:
    case ShapeKind::cycle: {
      const std::size_t k = shape.param;
      const bool sub_cycle = shape.kind == ShapeKind::cycle && mode == CutMode::substructure;
      if (shape.kind == ShapeKind::path || sub_cycle) {
        const std::string name = sub_cycle ? "bcdc-subcycle" : "bcdc-path";
        if (n < 4) out_of_range("B_n " + shape.kind_name() + " needs n >= 4");
        if (k < 4 || k > 2 * n - 1) out_of_range("B_n " + shape.kind_name() + " needs 4 <= k <= 2n-1 = " + str(2 * n - 1));
        if (k <= n - 1 && (n - 1) % k == 0) return done((2 * n - 2) / k, name + "-divisible", 0);
        return done(ceil_div(2 * n - 1, k), name, (n - 1) % k);
      }
      if (n < 5) out_of_range("B_n cycle needs n >= 5");
      if (k < 6) out_of_range("no construction for cycles with k < 6 (need 6 <= k <= 2n)");
      if (k > 2 * n) out_of_range("B_n cycle needs k <= 2n = " + str(2 * n));
      const std::size_t r = (n - 1) % k;
      if (k == 2 * n) return done(2 * ceil_div(n - 1, k) - 1, "bcdc-cycle-hamiltonian", r);
      if (k + 1 <= n && r >= 1 && r + 1 <= k / 2) return done(2 * ceil_div(n - 1, k) - 1, "bcdc-cycle-small-r", r);
      if (k == n) return done(3, "bcdc-cycle-k-eq-n", r);
      return done(2 * ceil_div(n - 1, k), "bcdc-cycle", r);
    }
    case ShapeKind::clique: break;
  }
  out_of_range("no formula for B_n cliques");
}

VertexId base_vertex(const Graph& g, const FamilyParams& p) {
  switch (p.family) {
    case Family::dcell: return g.id(format_dcell_label(DCellLabel(p.m + 1, 0)));
    case Family::cq: return g.id(cq_label(0, p.n));
    case Family::bcdc: break;
  }
  return g.id(bn_label(0, CqVertex{1} << (p.n - 1), p.n));
}

VertexId far_vertex(const Graph& g, const FamilyParams& p) {
  switch (p.family) {
    case Family::dcell: return g.id(format_dcell_label(DCellLabel(p.m + 1, 1)));
    case Family::cq: return g.id(cq_label((CqVertex{1} << p.n) - 1, p.n));
    case Family::bcdc: break;
  }
  const CqVertex ones = (CqVertex{1} << p.n) - 1;
  return g.id(bn_label(ones, ones ^ 1U, p.n));
}

StructureCut star_cut_dcell(const Graph& g, const DCellParams& p, std::size_t t) {
  predicted_kappa(FamilyParams::dcell(p.m, p.n), ShapeSpec::star(t), CutMode::structure);
  const std::size_t n = p.n;
  const ShapeSpec shape = ShapeSpec::star(t);
  const VertexId u = 0;
  const VertexId far = far_vertex(g, FamilyParams::dcell(p.m, p.n));
  // 0...0i has id i; e_j (digit x_j = 1) has id t_{j-1}.
  auto tt = t_table(p.m, n);
  StructureCut cut;
  const std::size_t full = (n - 1) / (1 + t);
  for (std::size_t i = 1; i <= full; ++i) {
    const auto c = static_cast<VertexId>((i - 1) * (t + 1) + 1);
    std::vector<VertexId> vs{c};
    for (std::size_t k = 1; k <= t; ++k) vs.push_back(static_cast<VertexId>(c + k));
    cut.members.push_back(member(shape, vs));
  }
  if ((n - 1) % (1 + t) != 0) {
    // Center n-1 with leaves n-t-1..n-2; when that range would reach u the
    // remaining leaves come from the center's other neighbours.
    const auto c = static_cast<VertexId>(n - 1);
    std::vector<VertexId> vs{c};
    const std::size_t lo = n >= t + 2 ? n - t - 1 : 1;
    for (std::size_t k = lo; k + 1 < n; ++k) vs.push_back(static_cast<VertexId>(k));
    std::set<VertexId> used = as_set(vs);
    used.insert(u);
    append(vs, fill_avoiding({g.neighbors(c).begin(), g.neighbors(c).end()}, used, far, t + 1 - vs.size()));
    cut.members.push_back(member(shape, vs));
  }
  for (std::size_t j = 1; j <= p.m; ++j) {
    const auto c = static_cast<VertexId>(tt[j - 1]);
    std::vector<VertexId> vs{c};
    append(vs, fill_avoiding({g.neighbors(c).begin(), g.neighbors(c).end()}, {u}, far, t));
    cut.members.push_back(member(shape, vs));
  }
  return cut;
}

StructureCut clique_cut_dcell(const Graph& g, const DCellParams& p, std::size_t s) {
  (void)g;
  predicted_kappa(FamilyParams::dcell(p.m, p.n), ShapeSpec::clique(s), CutMode::structure);
  const std::size_t n = p.n;
  const ShapeSpec shape = ShapeSpec::clique(s);
  auto tt = t_table(p.m, n);
  StructureCut cut;
  for (std::size_t i = 1; i <= (n - 1) / s; ++i) {
    std::vector<VertexId> vs;
    for (std::size_t k = 0; k < s; ++k) vs.push_back(static_cast<VertexId>((i - 1) * s + k + 1));
    cut.members.push_back(member(shape, vs));
  }
  if ((n - 1) % s != 0) {
    std::vector<VertexId> vs;
    for (std::size_t k = n - s; k < n; ++k) vs.push_back(static_cast<VertexId>(k));
    cut.members.push_back(member(shape, vs));
  }
  for (std::size_t j = 1; j <= p.m; ++j) {
    std::vector<VertexId> vs;
    for (std::size_t k = 0; k < s; ++k) vs.push_back(static_cast<VertexId>(tt[j - 1] + k));
    cut.members.push_back(member(shape, vs));
  }
  return cut;
}

StructureCut k11_cut_bcdc(const Graph& g, std::size_t n) {
  predicted_kappa(FamilyParams::bcdc(n), ShapeSpec::star(1), CutMode::structure);
  BnFrame b(g, n);
  const ShapeSpec shape = ShapeSpec::star(1);
  StructureCut cut;
  for (std::size_t j = 0; j < (n - 2) / 2; ++j) {
    cut.members.push_back(member(shape, {b.side(b.v, 2 * j), b.side(b.v, 2 * j + 1)}));
    cut.members.push_back(member(shape, {b.side(b.w, 2 * j), b.side(b.w, 2 * j + 1)}));
  }
  if (n % 2) {
    cut.members.push_back(member(shape, {b.side(b.v, n - 3), b.side(b.v, n - 2)}));
    cut.members.push_back(member(shape, {b.side(b.w, n - 3), b.side(b.w, n - 2)}));
  } else {
    for (CqVertex c : {b.v, b.w}) {
      const CqVertex x = b.nb(c, n - 2);
      cut.members.push_back(member(shape, {b.at(c, x), b.at(x, b.nb(x, n - 1))}));
    }
  }
  return cut;
}

StructureCut star_cut_bcdc(const Graph& g, std::size_t n, std::size_t t) {
  if (t == 1) return k11_cut_bcdc(g, n);
  predicted_kappa(FamilyParams::bcdc(n), ShapeSpec::star(t), CutMode::structure);
  BnFrame b(g, n);
  const ShapeSpec shape = ShapeSpec::star(t);
  const VertexId u = b.u();
  StructureCut cut;
  if (t + 2 >= n) {
    for (CqVertex c : {b.v, b.w}) {
      std::vector<VertexId> vs = b.clique_path(c);
      std::set<VertexId> used = as_set(vs);
      used.insert(u);
      append(vs, fill(b.nbrs(vs.front()), used, t - (n - 2)));
      cut.members.push_back(member(shape, vs));
    }
    return cut;
  }
  const std::size_t q = (n - 1) / (1 + t);
  const std::size_t r = (n - 1) % (1 + t);
  for (std::size_t i = 1; i <= q; ++i) {
    const std::size_t lo = (i - 1) * (t + 1);
    for (CqVertex c : {b.v, b.w}) {
      std::vector<VertexId> vs;
      for (std::size_t k = 0; k <= t; ++k) vs.push_back(b.side(c, lo + k));
      cut.members.push_back(member(shape, vs));
    }
  }
  if (r == 1) {
    const VertexId center = b.at(b.nb(b.v, n - 2), b.nb(b.w, n - 2));
    std::vector<VertexId> vs{center, b.side(b.v, n - 2), b.side(b.w, n - 2)};
    std::set<VertexId> used = as_set(vs);
    used.insert(u);
    append(vs, fill(b.nbrs(center), used, t - 2));
    cut.members.push_back(member(shape, vs));
  } else if (r >= 2) {
    for (CqVertex c : {b.v, b.w}) {
      std::vector<VertexId> vs{b.side(c, n - 2)};
      for (std::size_t i = n - r - 1; i + 2 < n; ++i) vs.push_back(b.side(c, i));
      std::set<VertexId> used = as_set(b.clique_path(c));
      used.insert(u);
      append(vs, fill(b.nbrs(vs.front()), used, t - r + 1));
      cut.members.push_back(member(shape, vs));
    }
  }
  return cut;
}

StructureCut path_cut_bcdc(const Graph& g, std::size_t n, std::size_t k) {
  predicted_kappa(FamilyParams::bcdc(n), ShapeSpec::path(k), CutMode::structure);
  BnFrame b(g, n);
  const ShapeSpec shape = ShapeSpec::path(k);
  const CqVertex x = b.nb(b.v, n - 2);
  const CqVertex y = b.nb(b.w, n - 2);
  const auto pv = b.clique_path(b.v);
  const auto pw = b.clique_path(b.w);
  // P_{n-1}(v), [x, y], reversed P_{n-1}(w)
  std::vector<VertexId> long_path = pv;
  long_path.push_back(b.at(x, y));
  long_path.insert(long_path.end(), pw.rbegin(), pw.rend());

  StructureCut cut;
  if (k == 2 * n - 1) {
    cut.members.push_back(member(shape, long_path));
    return cut;
  }
  if (k >= n) {
    for (CqVertex c : {b.v, b.w}) {
      const CqVertex z = b.nb(c, n - 2);
      auto pz = b.clique_path(z);
      pz.back() = b.side(z, n - 1);
      std::vector<VertexId> vs = b.clique_path(c);
      append(vs, pz);
      vs.resize(k);
      cut.members.push_back(member(shape, vs));
    }
    return cut;
  }
  if ((n - 1) % k == 0) {
    for (const auto* pc : {&pv, &pw}) {
      for (std::size_t i = 0; i < (n - 1) / k; ++i) {
        cut.members.push_back(member(shape, {pc->begin() + static_cast<std::ptrdiff_t>(i * k),
                                             pc->begin() + static_cast<std::ptrdiff_t>((i + 1) * k)}));
      }
    }
    return cut;
  }
  // Extend by P_{n-1}(w^0) with its first vertex moved off w.
  const CqVertex z = b.nb(b.w, 0);
  auto pz = b.clique_path(z);
  pz.front() = b.side(z, n - 1);
  append(long_path, pz);
  for (std::size_t i = 0; i < ceil_div(2 * n - 1, k); ++i) {
    cut.members.push_back(member(shape, {long_path.begin() + static_cast<std::ptrdiff_t>(i * k),
                                         long_path.begin() + static_cast<std::ptrdiff_t>((i + 1) * k)}));
  }
  return cut;
}

StructureCut cycle_cut_bcdc(const Graph& g, std::size_t n, std::size_t k) {
  predicted_kappa(FamilyParams::bcdc(n), ShapeSpec::cycle(k), CutMode::structure);
  BnFrame b(g, n);
  const ShapeSpec shape = ShapeSpec::cycle(k);
  auto V = [&](std::size_t i) { return b.side(b.v, i); };
  auto W = [&](std::size_t i) { return b.side(b.w, i); };
  // Clique paths starting [c,c^1], [c,c^0], [c,c^2], ...
  auto ordered = [&](CqVertex c) {
    std::vector<VertexId> out{b.side(c, 1), b.side(c, 0)};
    for (std::size_t i = 2; i + 1 < n; ++i) out.push_back(b.side(c, i));
    return out;
  };
  const CqVertex x = b.nb(b.v, n - 2);
  const CqVertex y = b.nb(b.w, n - 2);
  const CqVertex v1 = b.nb(b.v, 1);
  const CqVertex w1 = b.nb(b.w, 1);
  StructureCut cut;
  auto add = [&](std::vector<VertexId> vs) { cut.members.push_back(member(shape, std::move(vs))); };

  if (k == 2 * n) {
    std::vector<VertexId> vs{b.at(v1, w1)};
    append(vs, ordered(b.v));
    vs.push_back(b.at(x, y));
    auto pw = ordered(b.w);
    vs.insert(vs.end(), pw.rbegin(), pw.rend());
    add(vs);
    return cut;
  }
  if (k >= n + 1) {
    for (auto [c, z, c1] : {std::tuple{b.v, x, v1}, std::tuple{b.w, y, w1}}) {
      const CqVertex z1 = b.nb(z, 1);
      std::vector<VertexId> vs = ordered(c);
      vs.push_back(b.at(z, z1));
      vs.push_back(b.at(z1, c1));
      std::vector<VertexId> cand{b.side(c1, 0), b.side(c1, n - 1)};
      for (std::size_t i = 2; i + 2 < n; ++i) cand.push_back(b.side(c1, i));
      append(vs, fill(cand, as_set(vs), k - n - 1));
      add(vs);
    }
    return cut;
  }
  if (k == n) {
    for (auto [c, c1] : {std::pair{b.v, v1}, std::pair{b.w, w1}}) {
      const CqVertex z = b.nb(c, n - 3);
      const CqVertex z1 = b.nb(z, 1);
      auto vs = ordered(c);
      vs.pop_back();
      vs.push_back(b.at(z, z1));
      vs.push_back(b.at(z1, c1));
      add(vs);
    }
    std::vector<VertexId> vs{V(n - 2), b.at(x, y), W(n - 2), W(1), b.at(v1, w1), V(1)};
    std::vector<VertexId> cand;
    for (std::size_t i = 2; i + 1 < n; ++i) cand.push_back(V(i));
    append(vs, fill(cand, as_set(vs), k - 6));
    add(vs);
    return cut;
  }

  const std::size_t q = (n - 1) / k;
  const std::size_t r = (n - 1) % k;
  auto blocks = [&](const std::vector<std::size_t>& dims) {
    for (std::size_t i = 0; i < q; ++i) {
      std::vector<VertexId> a;
      std::vector<VertexId> c;
      for (std::size_t j = i * k; j < (i + 1) * k; ++j) {
        a.push_back(V(dims[j]));
        c.push_back(W(dims[j]));
      }
      add(a);
      add(c);
    }
  };
  std::vector<std::size_t> all_dims;
  for (std::size_t d = 0; d + 1 < n; ++d) all_dims.push_back(d);

  if (r == 0) {
    blocks(all_dims);
    return cut;
  }
  if (r + 1 <= k / 2) {
    if (k >= 2 * r + 4) {
      blocks(all_dims);
      std::vector<VertexId> vs{W(1), b.at(v1, w1), V(1)};
      std::vector<VertexId> cand;
      for (std::size_t i = 2; i + r + 1 < n; ++i) cand.push_back(V(i));
      append(vs, fill(cand, {}, k - 2 * r - 4));
      for (std::size_t i = n - r - 1; i + 1 < n; ++i) vs.push_back(V(i));
      vs.push_back(b.at(x, y));
      for (std::size_t i = n - 2; i + r + 2 > n; --i) vs.push_back(W(i));
      add(vs);
      return cut;
    }
    // Too short for the dimension-1 bridge: route through the bridge at the
    // largest odd dimension below n-2 and leave it uncovered by the blocks.
    std::size_t d2 = (n - 3) % 2 ? n - 3 : n - 4;
    std::vector<std::size_t> others;
    for (std::size_t d = 0; d + 2 < n; ++d) {
      if (d != d2) others.push_back(d);
    }
    std::vector<std::size_t> extra(others.end() - static_cast<std::ptrdiff_t>(r - 2), others.end());
    std::set<std::size_t> left(extra.begin(), extra.end());
    left.insert(d2);
    left.insert(n - 2);
    std::vector<std::size_t> rest;
    for (std::size_t d : all_dims) {
      if (!left.contains(d)) rest.push_back(d);
    }
    blocks(rest);
    std::vector<VertexId> vs{V(d2)};
    for (std::size_t i = 0; i < k - 2 * r - 2; ++i) vs.push_back(V(rest[i]));
    for (std::size_t d : extra) vs.push_back(V(d));
    vs.push_back(V(n - 2));
    vs.push_back(b.at(x, y));
    vs.push_back(W(n - 2));
    for (auto it = extra.rbegin(); it != extra.rend(); ++it) vs.push_back(W(*it));
    vs.push_back(W(d2));
    vs.push_back(b.at(b.nb(b.v, d2), b.nb(b.w, d2)));
    add(vs);
    return cut;
  }
  if (r + 1 < k) {
    blocks(all_dims);
    for (auto [c, z, lo] : {std::tuple{b.v, x, std::size_t{0}}, std::tuple{b.w, y, std::size_t{1}}}) {
      std::vector<VertexId> vs;
      if (r + 2 == k) {
        // No room for the filler: close through [z, z^b], [z^b, c^b] at the
        // smallest odd leftover dimension b instead.
        std::size_t bd = n - r - 1;
        if (bd % 2 == 0) ++bd;
        const CqVertex zb = b.nb(z, bd);
        vs.push_back(b.side(c, bd));
        for (std::size_t i = n - r - 1; i + 2 < n; ++i) {
          if (i != bd) vs.push_back(b.side(c, i));
        }
        vs.push_back(b.at(c, z));
        vs.push_back(b.at(z, zb));
        vs.push_back(b.at(zb, b.nb(c, bd)));
      } else {
        const CqVertex c1 = b.nb(c, 1);
        const CqVertex z1 = b.nb(z, 1);
        vs.push_back(b.at(c, c1));
        for (std::size_t i = n - r - 1; i + 1 < n; ++i) vs.push_back(b.side(c, i));
        std::vector<VertexId> cand;
        for (std::size_t i = lo; i + 2 < n; ++i) cand.push_back(b.side(z, i));
        std::set<VertexId> used = as_set(vs);
        used.insert(b.at(z, z1));
        append(vs, fill(cand, used, k - r - 3));
        vs.push_back(b.at(z, z1));
        vs.push_back(b.at(z1, c1));
      }
      add(vs);
    }
    return cut;
  }
  // r = k - 1
  blocks(all_dims);
  for (CqVertex c : {b.v, b.w}) {
    std::vector<VertexId> vs{b.side(c, 0)};
    for (std::size_t i = n - k; i + 1 < n; ++i) vs.push_back(b.side(c, i));
    add(vs);
  }
  return cut;
}

StructureCut substructure_cycle_cut_bcdc(const Graph& g, std::size_t n, std::size_t k) {
  predicted_kappa(FamilyParams::bcdc(n), ShapeSpec::cycle(k), CutMode::substructure);
  StructureCut cut = path_cut_bcdc(g, n, k);
  for (auto& mem : cut.members) mem.shape = ShapeSpec::cycle(k);
  cut.mode = CutMode::substructure;
  return cut;
}

StructureCut build_structure_cut(const Graph& g, const FamilyParams& p, const ShapeSpec& shape, CutMode mode) {
  // Validates the range for this exact (shape, mode) first.
  predicted_kappa(p, shape, mode);
  StructureCut cut;
  if (shape.kind == ShapeKind::single) {
    // N(u) as single vertices isolates u.
    for (VertexId v : g.neighbors(base_vertex(g, p))) cut.members.push_back({ShapeSpec::single(), {v}});
  } else if (p.family == Family::dcell) {
    const DCellParams dp{p.m, p.n};
    if (g.order() != t_size(p.m, p.n)) throw InvalidArgument("graph is not D(" + p.text() + ")");
    switch (shape.kind) {
      case ShapeKind::star: cut = star_cut_dcell(g, dp, shape.param); break;
      case ShapeKind::clique: cut = clique_cut_dcell(g, dp, shape.param); break;
      default: throw RangeError("no DCell construction for shape " + shape.tag());
    }
  } else {
    switch (shape.kind) {
      case ShapeKind::star: cut = star_cut_bcdc(g, p.n, shape.param); break;
      case ShapeKind::path: cut = path_cut_bcdc(g, p.n, shape.param); break;
      case ShapeKind::cycle:
        cut = mode == CutMode::structure ? cycle_cut_bcdc(g, p.n, shape.param)
                                         : substructure_cycle_cut_bcdc(g, p.n, shape.param);
        break;
      default: throw RangeError("no B_n construction for shape " + shape.tag());
    }
  }
  cut.mode = mode;
  return cut;
}

VerificationReport verify_cut(const Graph& g, const StructureCut& f, const ShapeSpec& shape, CutMode mode) {
  VerificationReport rep;
  std::vector<bool> removed(g.order(), false);
  std::vector<std::set<VertexId>> sets;
  for (const auto& mem : f.members) {
    bool ok = false;
    if (mem.shape == shape) {
      try {
        ok = is_shape(g, mem, mode);
      } catch (const InvalidArgument&) {
        ok = false;
      }
    }
    rep.member_valid.push_back(ok);
    std::set<VertexId> s;
    for (VertexId v : mem.vertices) {
      if (v < g.order()) {
        removed[v] = true;
        s.insert(v);
      }
    }
    sets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (std::any_of(sets[i].begin(), sets[i].end(), [&](VertexId v) { return sets[j].contains(v); })) {
        rep.overlaps.emplace_back(i, j);
      }
    }
  }
  rep.vertices_removed = static_cast<std::size_t>(std::count(removed.begin(), removed.end(), true));
  for (const auto& comp : components(g, removed)) rep.component_sizes.push_back(comp.size());
  std::sort(rep.component_sizes.begin(), rep.component_sizes.end());
  rep.min_component = rep.component_sizes.empty() ? 0 : rep.component_sizes.front();
  const bool all_valid = std::all_of(rep.member_valid.begin(), rep.member_valid.end(), [](bool b) { return b; });
  const std::size_t remaining = g.order() - rep.vertices_removed;
  rep.pass = all_valid && (rep.components() >= 2 || remaining <= 1);
  return rep;
}

std::vector<VertexId> component_of(const Graph& g, const StructureCut& f, VertexId v) {
  std::vector<bool> removed(g.order(), false);
  for (const auto& mem : f.members) {
    for (VertexId x : mem.vertices) {
      if (x < g.order()) removed[x] = true;
    }
  }
  if (removed[v]) return {};
  for (auto& comp : components(g, removed)) {
    if (std::binary_search(comp.begin(), comp.end(), v)) return comp;
  }
  return {};
}

}  // namespace dcn
