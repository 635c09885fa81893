#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dcn/dcell.hpp"
#include "dcn/graph.hpp"
#include "dcn/shapes.hpp"

namespace dcn {

enum class Family { dcell, cq, bcdc };

std::string to_string(Family f);
Family parse_family(std::string_view text);

struct FamilyParams {
  Family family = Family::dcell;
  std::size_t m = 0;  // DCell only
  std::size_t n = 2;

  static FamilyParams dcell(std::size_t m, std::size_t n) { return {Family::dcell, m, n}; }
  static FamilyParams cq(std::size_t n) { return {Family::cq, 0, n}; }
  static FamilyParams bcdc(std::size_t n) { return {Family::bcdc, 0, n}; }

  /// "m=1 n=4" for DCell, "n=5" otherwise.
  std::string text() const;
};

/// Builds the topology for `p` (vertex cap applies to DCell).
Graph build_family(const FamilyParams& p, std::size_t vertex_cap = kDefaultVertexCap);

struct PredictedValue {
  std::size_t value = 0;
  /// Formula branch, e.g. "bcdc-star-r1" or "dcell-clique".
  std::string theorem_tag;
  /// "n=5 shape=star(t=2) mode=structure r=1".
  std::string parameter_echo;
  std::optional<std::size_t> remainder;
};

/// Closed-form structure (or substructure) connectivity. Throws RangeError
/// naming the violated bound when no formula covers the parameters.
PredictedValue predicted_kappa(const FamilyParams& p, const ShapeSpec& shape, CutMode mode);

/// u = 0...0 in D(m,n), u = [0^n, 10^{n-1}] in B_n.
VertexId base_vertex(const Graph& g, const FamilyParams& p);
/// 1...1 in D(m,n), [1^n, 1^{n-1}0] in B_n.
VertexId far_vertex(const Graph& g, const FamilyParams& p);

// Explicit cuts around the base vertex. `g` must be the matching topology.
StructureCut star_cut_dcell(const Graph& g, const DCellParams& p, std::size_t t);
StructureCut clique_cut_dcell(const Graph& g, const DCellParams& p, std::size_t s);
StructureCut k11_cut_bcdc(const Graph& g, std::size_t n);
StructureCut star_cut_bcdc(const Graph& g, std::size_t n, std::size_t t);
StructureCut path_cut_bcdc(const Graph& g, std::size_t n, std::size_t k);
StructureCut cycle_cut_bcdc(const Graph& g, std::size_t n, std::size_t k);
/// path_cut_bcdc re-tagged as Cycle(k) members in substructure mode.
StructureCut substructure_cycle_cut_bcdc(const Graph& g, std::size_t n, std::size_t k);

/// Picks the constructor for (family, shape, mode). The returned cut carries
/// `mode`; for star and clique shapes the structure-mode cut is reused.
StructureCut build_structure_cut(const Graph& g, const FamilyParams& p, const ShapeSpec& shape, CutMode mode);

struct VerificationReport {
  std::vector<bool> member_valid;
  /// Pairs (i, j), i < j, of members sharing a vertex.
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;
  std::size_t vertices_removed = 0;
  std::vector<std::size_t> component_sizes;  // sorted ascending
  std::size_t min_component = 0;
  bool pass = false;

  std::size_t components() const { return component_sizes.size(); }
};

/// Checks each member against `shape` in `mode` and whether removing V(F)
/// disconnects g or leaves at most one vertex. Members whose vertices are
/// repeated or out of range count as invalid.
VerificationReport verify_cut(const Graph& g, const StructureCut& f, const ShapeSpec& shape, CutMode mode);

/// Component of g - V(F) containing v, or empty if v was removed.
std::vector<VertexId> component_of(const Graph& g, const StructureCut& f, VertexId v);

}  // namespace dcn
