#include "dcn/formats.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dcn/errors.hpp"

namespace dcn {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits "# <kind> <family> <params...> [key=value...]" after the kind word.
std::vector<std::string> header_words(const std::string& line, const std::string& kind) {
  std::istringstream in(line);
  std::string hash;
  std::string word;
  in >> hash >> word;
  if (hash != "#" || word != kind) throw InvalidArgument("expected '# " + kind + "' header, got '" + line + "'");
  std::vector<std::string> out;
  while (in >> word) out.push_back(word);
  if (out.empty()) throw InvalidArgument("header '" + line + "' names no family");
  return out;
}

std::string join(const std::vector<std::string>& parts, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ' ';
    out += parts[i];
  }
  return out;
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g, const std::string& family, const std::string& params) {
  out << "# graph " << family << ' ' << params << '\n';
  for (const auto& [a, b] : g.edges()) out << g.label(a) << '\t' << g.label(b) << '\n';
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out << "# isolated " << g.label(v) << '\n';
  }
}

EdgeListFile read_edge_list(std::istream& in) {
  EdgeListFile f;
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("empty edge list");
  auto words = header_words(trim(line), "graph");
  f.family = words[0];
  f.params = join(words, 1, words.size());
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("# isolated ", 0) == 0) {
      f.isolated.push_back(trim(line.substr(11)));
      continue;
    }
    if (line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw InvalidArgument("line " + std::to_string(lineno) + ": expected 'u<TAB>v'");
    f.edges.emplace_back(trim(line.substr(0, tab)), trim(line.substr(tab + 1)));
  }
  return f;
}

Graph graph_from_edge_list(const EdgeListFile& f) {
  std::set<std::string> names(f.isolated.begin(), f.isolated.end());
  for (const auto& [a, b] : f.edges) {
    names.insert(a);
    names.insert(b);
  }
  return build_graph({names.begin(), names.end()}, f.edges).sorted_by_label();
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
  out << "graph \"" << name << "\" {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out << "  \"" << g.label(v) << "\";\n";
  }
  for (const auto& [a, b] : g.edges()) out << "  \"" << g.label(a) << "\" -- \"" << g.label(b) << "\";\n";
  out << "}\n";
}

void write_cut(std::ostream& out, const Graph& g, const StructureCut& cut, const FamilyParams& p,
               const ShapeSpec& shape) {
  out << "# cut " << to_string(p.family) << ' ' << p.text() << " shape=" << shape.tag()
      << " mode=" << to_string(cut.mode) << '\n';
  for (const auto& mem : cut.members) {
    out << mem.shape.tag() << ": ";
    for (std::size_t i = 0; i < mem.vertices.size(); ++i) {
      if (i) out << ',';
      out << g.label(mem.vertices[i]);
    }
    out << '\n';
  }
}

CutFile read_cut(std::istream& in, const Graph& g) {
  CutFile f;
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("empty cut file");
  auto words = header_words(trim(line), "cut");
  f.family = words[0];
  std::vector<std::string> params;
  bool have_shape = false;
  bool have_mode = false;
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (words[i].rfind("shape=", 0) == 0) {
      f.shape = ShapeSpec::parse(words[i].substr(6));
      have_shape = true;
    } else if (words[i].rfind("mode=", 0) == 0) {
      f.mode = parse_mode(words[i].substr(5));
      have_mode = true;
    } else {
      params.push_back(words[i]);
    }
  }
  if (!have_shape || !have_mode) throw InvalidArgument("cut header needs shape= and mode=");
  f.params = join(params, 0, params.size());
  f.cut.mode = f.mode;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw InvalidArgument("line " + std::to_string(lineno) + ": expected '<shape>: ...'");
    CutMember mem;
    mem.shape = ShapeSpec::parse(trim(line.substr(0, colon)));
    std::istringstream vs(line.substr(colon + 1));
    std::string label;
    while (std::getline(vs, label, ',')) mem.vertices.push_back(g.id(trim(label)));
    f.cut.members.push_back(std::move(mem));
  }
  return f;
}

CsvRow csv_row(const FamilyParams& p, const ShapeSpec& shape, CutMode mode, const std::string& predicted,
               const StructureCut& cut, const VerificationReport& rep) {
  return {to_string(p.family), p.text(), shape.tag(), to_string(mode), predicted, cut.members.size(),
          rep.vertices_removed, rep.components(), rep.min_component, rep.pass};
}

void write_csv_row(std::ostream& out, const CsvRow& r) {
  out << r.family << ',' << r.params << ',' << r.shape << ',' << r.mode << ',' << r.predicted << ',' << r.members
      << ',' << r.vertices_removed << ',' << r.components << ',' << r.min_component << ','
      << (r.pass ? "true" : "false") << '\n';
}

}  // namespace dcn
