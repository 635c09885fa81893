#include <doctest.h>

#include <set>

#include "dcn/bcdc.hpp"
#include "dcn/errors.hpp"

using namespace dcn;

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

EdgeSet edge_set(const Graph& g) {
  EdgeSet s;
  for (const auto& [a, b] : g.labeled_edges()) s.insert(std::minmax(a, b));
  return s;
}

// Crossed-cube adjacency on strings (index 0 is the most significant bit):
// u, v differ first at bit l; bit l-1 must agree when l is odd; lower bit
// pairs must be related.
bool cq_adjacent(const std::string& u, const std::string& v) {
  const std::size_t n = u.size();
  auto bit = [n](const std::string& s, std::size_t i) { return s[n - 1 - i]; };
  std::size_t l = n;
  while (l-- > 0) {
    if (bit(u, l) != bit(v, l)) break;
  }
  if (l >= n) return false;
  if (l % 2 == 1 && bit(u, l - 1) != bit(v, l - 1)) return false;
  for (std::size_t i = 0; i < l / 2; ++i) {
    std::string a{bit(u, 2 * i + 1), bit(u, 2 * i)};
    std::string b{bit(v, 2 * i + 1), bit(v, 2 * i)};
    if (!pair_related(a, b)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pair relation") {
  CHECK(pair_related("00", "00"));
  CHECK(pair_related("10", "10"));
  CHECK(pair_related("01", "11"));
  CHECK(pair_related("11", "01"));
  CHECK_FALSE(pair_related("00", "10"));
  CHECK_FALSE(pair_related("01", "01"));
  CHECK_THROWS_AS(pair_related("0", "00"), InvalidArgument);
  CHECK_THROWS_AS(pair_related("02", "00"), InvalidArgument);
}

TEST_CASE("CQ labels") {
  CHECK(cq_label(5, 4) == "0101");
  CHECK(parse_cq_label("0101", 4) == 5);
  CHECK_THROWS_AS(parse_cq_label("012", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_cq_label("01", 3), InvalidArgument);
}

TEST_CASE("small crossed cubes") {
  Graph q2 = build_crossed_cube(2);
  CHECK(edge_set(q2) == EdgeSet{{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
  Graph q3 = build_crossed_cube(3);
  auto n0 = q3.neighbors(0);
  std::set<std::string> got;
  for (auto v : n0) got.insert(q3.label(v));
  CHECK(got == std::set<std::string>{"001", "010", "100"});
}

TEST_CASE("crossed cube matches the string definition") {
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    Graph g = build_crossed_cube(n);
    REQUIRE(g.order() == (std::size_t{1} << n));
    EdgeSet want;
    for (CqVertex a = 0; a < g.order(); ++a) {
      for (CqVertex b = a + 1; b < g.order(); ++b) {
        if (cq_adjacent(cq_label(a, n), cq_label(b, n))) want.insert({cq_label(a, n), cq_label(b, n)});
      }
    }
    CHECK(edge_set(g) == want);
  }
}

TEST_CASE("dim_neighbor") {
  CHECK(cq_label(dim_neighbor(0, 2, 3), 3) == "100");
  CHECK(cq_label(dim_neighbor(0b001, 2, 3), 3) == "111");
  CHECK_THROWS_AS(dim_neighbor(0, 3, 3), RangeError);
  for (std::size_t n = 1; n <= 8; ++n) {
    Graph g = build_crossed_cube(n);
    for (CqVertex u = 0; u < g.order(); ++u) {
      std::set<CqVertex> seen;
      for (std::size_t d = 0; d < n; ++d) {
        CqVertex v = dim_neighbor(u, d, n);
        CHECK(dim_neighbor(v, d, n) == u);
        CHECK(g.adjacent(u, v));
        seen.insert(v);
      }
      CHECK(seen.size() == n);
    }
  }
}

TEST_CASE("crossed cube is regular and triangle-free") {
  for (std::size_t n = 1; n <= 8; ++n) {
    Graph g = build_crossed_cube(n);
    CHECK(g.size() == n * (std::size_t{1} << (n - 1)));
    bool triangle = false;
    for (VertexId v = 0; v < g.order(); ++v) {
      CHECK(g.degree(v) == n);
      for (VertexId a : g.neighbors(v)) {
        for (VertexId b : g.neighbors(v)) {
          if (a < b && g.adjacent(a, b)) triangle = true;
        }
      }
    }
    CHECK_FALSE(triangle);
  }
}

TEST_CASE("B_n labels") {
  CHECK(bn_label(3, 1, 2) == "01|11");
  auto [a, b] = parse_bn_label("01|11", 2);
  CHECK(a == 1);
  CHECK(b == 3);
  CHECK_THROWS_AS(parse_bn_label("01-11", 2), InvalidArgument);
}

TEST_CASE("B_n equals the line graph of CQ_n") {
  for (std::size_t n = 2; n <= 7; ++n) {
    CAPTURE(n);
    Graph b = build_bcdc(n);
    CHECK(b.order() == n * (std::size_t{1} << (n - 1)));
    CHECK(edge_set(b) == edge_set(build_bcdc_via_line_graph(n)));
    for (VertexId v = 0; v < b.order(); ++v) CHECK(b.degree(v) == 2 * n - 2);
  }
  Graph b2 = build_bcdc(2);
  CHECK(b2.size() == 4);
}

TEST_CASE("reindexed neighbours") {
  const std::size_t n = 4;
  for (CqVertex x = 0; x < 16; ++x) {
    for (std::size_t d = 0; d < n; ++d) {
      CqVertex partner = dim_neighbor(x, d, n);
      auto r = reindexed_neighbors(x, partner, n);
      CHECK(r.size() == n - 1);
      std::set<CqVertex> s(r.begin(), r.end());
      CHECK(s.size() == n - 1);
      CHECK_FALSE(s.count(partner));
    }
  }
}

TEST_CASE("neighbourhood splits into two cliques") {
  for (std::size_t n = 3; n <= 5; ++n) {
    Graph b = build_bcdc(n);
    for (VertexId u = 0; u < b.order(); ++u) {
      auto split = neighborhood_decomposition(b, n, u);
      REQUIRE(split.v_side.size() == n - 1);
      REQUIRE(split.w_side.size() == n - 1);
      std::set<VertexId> all(split.v_side.begin(), split.v_side.end());
      all.insert(split.w_side.begin(), split.w_side.end());
      CHECK(all.size() == 2 * n - 2);
      auto nb = b.neighbors(u);
      CHECK(std::set<VertexId>(nb.begin(), nb.end()) == all);
      for (auto side : {split.v_side, split.w_side}) {
        for (std::size_t i = 0; i < side.size(); ++i) {
          for (std::size_t j = i + 1; j < side.size(); ++j) CHECK(b.adjacent(side[i], side[j]));
        }
      }
      for (VertexId a : split.v_side) {
        for (VertexId c : split.w_side) CHECK_FALSE(b.adjacent(a, c));
      }
    }
  }
}
