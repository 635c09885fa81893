#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "dcn/cuts.hpp"
#include "dcn/graph.hpp"
#include "dcn/shapes.hpp"

namespace dcn {

/// "# graph <family> <params>", then "u\tv" per edge in id order, then
/// "# isolated u" for degree-0 vertices.
void write_edge_list(std::ostream& out, const Graph& g, const std::string& family, const std::string& params);

struct EdgeListFile {
  std::string family;
  std::string params;
  std::vector<std::pair<std::string, std::string>> edges;  // as read
  std::vector<std::string> isolated;
};

EdgeListFile read_edge_list(std::istream& in);

/// Graph from an edge-list file. Vertex ids follow label order.
Graph graph_from_edge_list(const EdgeListFile& f);

void write_dot(std::ostream& out, const Graph& g, const std::string& name);

/// "# cut <family> <params> shape=<tag> mode=<mode>", then one
/// "<tag>: v1,v2,..." line per member.
void write_cut(std::ostream& out, const Graph& g, const StructureCut& cut, const FamilyParams& p,
               const ShapeSpec& shape);

struct CutFile {
  std::string family;
  std::string params;
  ShapeSpec shape;
  CutMode mode = CutMode::structure;
  StructureCut cut;
};

/// Parses a cut file, resolving labels against g.
CutFile read_cut(std::istream& in, const Graph& g);

inline constexpr const char* kCsvHeader =
    "family,params,shape,mode,predicted,members,vertices_removed,components,min_component,pass";

struct CsvRow {
  std::string family;
  std::string params;
  std::string shape;
  std::string mode;
  std::string predicted;  // empty when no formula applies
  std::size_t members = 0;
  std::size_t vertices_removed = 0;
  std::size_t components = 0;
  std::size_t min_component = 0;
  bool pass = false;
};

CsvRow csv_row(const FamilyParams& p, const ShapeSpec& shape, CutMode mode, const std::string& predicted,
               const StructureCut& cut, const VerificationReport& rep);

void write_csv_row(std::ostream& out, const CsvRow& row);

}  // namespace dcn
