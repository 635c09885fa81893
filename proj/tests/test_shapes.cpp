#include <doctest.h>

#include <set>

#include "dcn/bcdc.hpp"
#include "dcn/errors.hpp"
#include "dcn/shapes.hpp"

using namespace dcn;

namespace {

Graph complete(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(labels, edges);
}

Graph cycle(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  for (VertexId a = 0; a < n; ++a) edges.emplace_back(a, static_cast<VertexId>((a + 1) % n));
  return Graph(labels, edges);
}

std::size_t count(const Graph& g, ShapeSpec s, CutMode mode) { return shape_copies(g, s, mode).size(); }

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("shape tags round-trip") {
  for (auto s : {ShapeSpec::star(2), ShapeSpec::path(4), ShapeSpec::cycle(5), ShapeSpec::clique(3), ShapeSpec::single()}) {
    CHECK(ShapeSpec::parse(s.tag()) == s);
  }
  CHECK(ShapeSpec::star(2).tag() == "star(t=2)");
  CHECK(ShapeSpec::parse("cycle:6") == ShapeSpec::cycle(6));
  CHECK_THROWS_AS(ShapeSpec::cycle(2), InvalidArgument);
  CHECK_THROWS_AS(ShapeSpec::star(0), InvalidArgument);
  CHECK_THROWS_AS(ShapeSpec::parse("blob(k=3)"), InvalidArgument);
  CHECK(parse_mode("substructure") == CutMode::substructure);
  CHECK_THROWS_AS(parse_mode("loose"), InvalidArgument);
}

TEST_CASE("is_shape in K_4 and C_5") {
  Graph k4 = complete(4);
  CutMember star{ShapeSpec::star(2), {0, 1, 2}};
  CHECK(is_shape(k4, star, CutMode::structure));
  CHECK(is_shape(k4, star, CutMode::substructure));
  Graph c5 = cycle(5);
  CHECK_FALSE(is_shape(c5, {ShapeSpec::clique(3), {0, 1, 2}}, CutMode::structure));
  CHECK_THROWS_AS(is_shape(k4, {ShapeSpec::star(2), {0, 1, 1}}, CutMode::structure), InvalidArgument);
}

TEST_CASE("is_shape structure vs substructure") {
  Graph c5 = cycle(5);
  CutMember p3{ShapeSpec::cycle(5), {0, 1, 2}};
  CHECK_FALSE(is_shape(c5, p3, CutMode::structure));
  CHECK(is_shape(c5, p3, CutMode::substructure));
  CutMember whole{ShapeSpec::cycle(5), {0, 1, 2, 3, 4}};
  CHECK(is_shape(c5, whole, CutMode::structure));
  CutMember broken{ShapeSpec::cycle(5), {0, 2}};
  CHECK_FALSE(is_shape(c5, broken, CutMode::substructure));
  CutMember lone{ShapeSpec::star(3), {4}};
  CHECK(is_shape(c5, lone, CutMode::substructure));
  CHECK_FALSE(is_shape(c5, lone, CutMode::structure));
  // Connected but not a clique: fine for the clique substructure.
  CutMember clq{ShapeSpec::clique(3), {0, 1, 2}};
  CHECK(is_shape(c5, clq, CutMode::substructure));
  CHECK_FALSE(is_shape(c5, {ShapeSpec::clique(3), {0, 2, 4}}, CutMode::substructure));
}

TEST_CASE("B_3 edges are K_{1,1} members") {
  Graph b3 = build_bcdc(3);
  for (const auto& [a, b] : b3.edges()) CHECK(is_shape(b3, {ShapeSpec::star(1), {a, b}}, CutMode::structure));
}

TEST_CASE("copy counts") {
  CHECK(count(complete(4), ShapeSpec::clique(3), CutMode::structure) == 4);
  CHECK(count(build_bcdc(4), ShapeSpec::star(1), CutMode::structure) == 96);
  CHECK(count(build_bcdc(5), ShapeSpec::star(2), CutMode::structure) == 80 * binom(8, 2));
  // K_5: (5-1)!/2 = 12 Hamiltonian cycles, 5!/2 = 60 paths on all vertices.
  CHECK(count(complete(5), ShapeSpec::cycle(5), CutMode::structure) == 12);
  CHECK(count(complete(5), ShapeSpec::path(5), CutMode::structure) == 60);
  CHECK(count(complete(4), ShapeSpec::cycle(4), CutMode::structure) == 3);
  CHECK(count(cycle(6), ShapeSpec::single(), CutMode::structure) == 6);
  // Connected vertex sets of C_5 of size <= 3: 5 + 5 + 5.
  CHECK(count(cycle(5), ShapeSpec::clique(3), CutMode::substructure) == 15);
  // K_4 connected sets of size <= 3: 4 + 6 + 4.
  CHECK(count(complete(4), ShapeSpec::clique(3), CutMode::substructure) == 14);
  // Star(2) substructure in C_5: 5 singles + 5 edges + 5 two-leaf stars.
  CHECK(count(cycle(5), ShapeSpec::star(2), CutMode::substructure) == 15);
}

TEST_CASE("enumeration is canonical, valid and duplicate-free") {
  Graph b3 = build_bcdc(3);
  for (auto mode : {CutMode::structure, CutMode::substructure}) {
    for (auto s : {ShapeSpec::star(2), ShapeSpec::path(4), ShapeSpec::cycle(4), ShapeSpec::cycle(6),
                   ShapeSpec::clique(3)}) {
      CAPTURE(s.tag());
      auto a = shape_copies(b3, s, mode);
      auto b = shape_copies(b3, s, mode);
      CHECK(a == b);
      std::set<std::vector<VertexId>> seen;
      for (const auto& m : a) {
        CHECK(is_shape(b3, m, mode));
        CHECK(seen.insert(m.vertices).second);
        if (mode == CutMode::structure && s.kind == ShapeKind::cycle) {
          CHECK(m.vertices.front() == *std::min_element(m.vertices.begin(), m.vertices.end()));
          CHECK(m.vertices[1] < m.vertices.back());
        }
        if (mode == CutMode::structure && s.kind == ShapeKind::path) CHECK(m.vertices.front() < m.vertices.back());
      }
    }
  }
}

TEST_CASE("early stop") {
  Graph b4 = build_bcdc(4);
  std::size_t seen = 0;
  enumerate_shape_copies(b4, ShapeSpec::path(3), CutMode::structure, [&](const CutMember&) { return ++seen < 5; });
  CHECK(seen == 5);
}
