#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dcn/graph.hpp"

namespace dcn {

enum class ShapeKind { star, path, cycle, clique, single };

/// Fault shape H. `param` is the leaf count t for stars, the vertex count k
/// for paths and cycles, the vertex count s for cliques, and 0 for single.
struct ShapeSpec {
  ShapeKind kind = ShapeKind::single;
  std::size_t param = 0;

  static ShapeSpec star(std::size_t t);
  static ShapeSpec path(std::size_t k);
  static ShapeSpec cycle(std::size_t k);
  static ShapeSpec clique(std::size_t s);
  static ShapeSpec single() { return {}; }

  /// Vertices in one structure-mode copy.
  std::size_t vertex_count() const;
  /// "star(t=2)", "path(k=4)", "cycle(k=5)", "clique(s=3)", "single".
  std::string tag() const;
  /// Inverse of tag(). Also accepts the bare kind name plus a parameter in
  /// the "star:2" form.
  static ShapeSpec parse(std::string_view text);
  /// Name of the kind alone ("star", "path", ...).
  std::string kind_name() const;

  friend bool operator==(const ShapeSpec&, const ShapeSpec&) = default;
};

enum class CutMode { structure, substructure };

std::string to_string(CutMode mode);
CutMode parse_mode(std::string_view text);

/// One member of a cut. Stars list the center first; paths and cycles list
/// vertices in traversal order.
struct CutMember {
  ShapeSpec shape;
  std::vector<VertexId> vertices;

  friend bool operator==(const CutMember&, const CutMember&) = default;
};

struct StructureCut {
  std::vector<CutMember> members;
  CutMode mode = CutMode::structure;
};

/// True if the member's vertex list realizes its shape in g (structure) or a
/// connected subgraph of its shape (substructure). Throws InvalidArgument
/// on a repeated or unknown vertex.
bool is_shape(const Graph& g, const CutMember& member, CutMode mode);

/// Streams every accepted copy of `shape` in canonical form, in a fixed
/// order. The callback returns false to stop early. In substructure mode
/// the emitted members carry the host shape but may be smaller subgraphs,
/// single vertices included.
void enumerate_shape_copies(const Graph& g, const ShapeSpec& shape, CutMode mode,
                            const std::function<bool(const CutMember&)>& emit);

/// Collects enumerate_shape_copies into a vector.
std::vector<CutMember> shape_copies(const Graph& g, const ShapeSpec& shape, CutMode mode);

}  // namespace dcn
