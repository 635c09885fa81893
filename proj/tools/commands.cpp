#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "dcn/bcdc.hpp"
#include "dcn/cuts.hpp"
#include "dcn/dcell.hpp"
#include "dcn/errors.hpp"
#include "dcn/formats.hpp"
#include "dcn/search.hpp"

namespace dcn::cli {

namespace {

using json = nlohmann::json;

struct FamilyOpts {
  std::string family;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t max_vertices = kDefaultVertexCap;

  FamilyParams params() const {
    FamilyParams p;
    p.family = parse_family(family);
    p.m = p.family == Family::dcell ? m : 0;
    p.n = n;
    return p;
  }
};

struct ShapeOpts {
  std::string shape;
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t s = 0;
  std::string mode = "structure";

  ShapeSpec spec() const {
    auto need = [&](std::size_t v, const char* flag) {
      if (v == 0) throw InvalidArgument("--shape " + shape + " needs " + flag);
      return v;
    };
    if (shape == "star") return ShapeSpec::star(need(t, "--t"));
    if (shape == "path") return ShapeSpec::path(need(k, "--k"));
    if (shape == "cycle") return ShapeSpec::cycle(need(k, "--k"));
    if (shape == "clique") return ShapeSpec::clique(need(s, "--s"));
    if (shape == "single") return ShapeSpec::single();
    return ShapeSpec::parse(shape);
  }
};

struct BudgetOpts {
  std::uint64_t max_checks = 100'000'000;
  std::uint64_t max_candidates = 2'000'000;
  std::optional<double> time_cap;
  unsigned jobs = 0;
  std::uint64_t seed = 0;

  SearchBudget budget() const {
    SearchBudget b;
    b.max_checks = max_checks;
    b.max_candidates = max_candidates;
    b.jobs = jobs;
    if (time_cap) {
      b.time_cap = *time_cap;
    } else if (const char* env = std::getenv("DCN_BUDGET_SECS"); env && *env) {
      char* end = nullptr;
      double secs = std::strtod(env, &end);
      if (*end != '\0' || secs <= 0) throw InvalidArgument("DCN_BUDGET_SECS must be a positive number");
      b.time_cap = secs;
    }
    return b;
  }
};

void add_family(CLI::App* cmd, FamilyOpts& f) {
  cmd->add_option("family", f.family, "dcell, cq or bcdc")->required();
  cmd->add_option("--m", f.m, "DCell level");
  cmd->add_option("--n", f.n, "DCell cell size or cube dimension")->required();
  cmd->add_option("--max-vertices", f.max_vertices, "refuse to build larger graphs");
}

void add_shape(CLI::App* cmd, ShapeOpts& s) {
  cmd->add_option("--shape", s.shape, "star, path, cycle, clique, single, or a tag like star(t=2)");
  cmd->add_option("--t", s.t, "star leaves");
  cmd->add_option("--k", s.k, "path or cycle vertices");
  cmd->add_option("--s", s.s, "clique vertices");
  cmd->add_option("--mode", s.mode, "structure or substructure")->check(CLI::IsMember({"structure", "substructure"}));
}

void add_budget(CLI::App* cmd, BudgetOpts& b) {
  cmd->add_option("--max-checks", b.max_checks, "subset checks per search");
  cmd->add_option("--max-candidates", b.max_candidates, "distinct shape copies kept in memory");
  cmd->add_option("--time-cap", b.time_cap, "seconds per search (default 600, or DCN_BUDGET_SECS)");
  cmd->add_option("--jobs", b.jobs, "worker threads, 0 = all cores");
  cmd->add_option("--seed", b.seed, "accepted and ignored");
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename F>
void emit(const std::string& path, std::ostream& fallback, F&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  write(f);
  if (!f) throw InvalidArgument("error writing '" + path + "'");
}

json budget_json(const SearchBudget& b) {
  return {{"max_checks", b.max_checks},
          {"max_candidates", b.max_candidates},
          {"time_cap", b.time_cap},
          {"jobs", b.jobs}};
}

// ---- gen ----

struct GenOpts {
  FamilyOpts fam;
  std::string format = "edgelist";
  std::string out;
};

int cmd_gen(const GenOpts& o, std::ostream& out) {
  auto p = o.fam.params();
  Graph g = build_family(p, o.fam.max_vertices);
  emit(o.out, out, [&](std::ostream& s) {
    if (o.format == "dot") {
      write_dot(s, g, to_string(p.family) + " " + p.text());
    } else {
      write_edge_list(s, g, to_string(p.family), p.text());
    }
  });
  return kOk;
}

// ---- cut ----

struct CutOpts {
  FamilyOpts fam;
  ShapeOpts shape;
  std::string out;
  std::string csv;
};

int cmd_cut(const CutOpts& o, std::ostream& out, std::ostream& err) {
  auto p = o.fam.params();
  auto shape = o.shape.spec();
  auto mode = parse_mode(o.shape.mode);
  auto predicted = predicted_kappa(p, shape, mode);
  Graph g = build_family(p, o.fam.max_vertices);
  auto cut = build_structure_cut(g, p, shape, mode);
  auto rep = verify_cut(g, cut, shape, mode);
  emit(o.out, out, [&](std::ostream& s) { write_cut(s, g, cut, p, shape); });

  auto row = csv_row(p, shape, mode, std::to_string(predicted.value), cut, rep);
  if (o.csv.empty()) {
    err << kCsvHeader << '\n';
    write_csv_row(err, row);
  } else {
    bool fresh = !std::ifstream(o.csv).good();
    std::ofstream f(o.csv, std::ios::app);
    if (!f) throw InvalidArgument("cannot write '" + o.csv + "'");
    if (fresh) f << kCsvHeader << '\n';
    write_csv_row(f, row);
  }
  err << cut.members.size() << " members, predicted " << predicted.value << " (" << predicted.theorem_tag << "), "
      << (rep.pass ? "pass" : "FAIL") << '\n';
  return rep.pass ? kOk : kVerifyFailed;
}

// ---- oracle ----

struct OracleOpts {
  FamilyOpts fam;
  ShapeOpts shape;
  BudgetOpts budget;
  bool prove_min = false;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> g_extra;
  std::string witness_out;
  std::string manifest;
};

std::string join_labels(const Graph& g, const std::vector<VertexId>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += g.label(vs[i]);
  }
  return s;
}

int cmd_oracle(const OracleOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  int actions = int(o.prove_min) + int(o.bound.has_value()) + int(o.g_extra.has_value());
  if (actions != 1) throw InvalidArgument("give exactly one of --prove-min, --bound, --g-extra");
  auto p = o.fam.params();
  auto budget = o.budget.budget();
  Graph g = build_family(p, o.fam.max_vertices);

  json entry;
  entry["command"] = argv;
  entry["family"] = to_string(p.family);
  entry["params"] = p.text();
  entry["budget"] = budget_json(budget);

  int code = kOk;
  SearchStats stats;
  std::string head = "# oracle " + to_string(p.family) + " " + p.text();

  if (o.g_extra) {
    const std::size_t h = *o.g_extra;
    out << head << " g-extra h=" << h << '\n';
    auto r = g_extra_connectivity(g, h, budget);
    stats = r.stats;
    entry["action"] = "g-extra";
    entry["h"] = h;
    if (r.impossible) {
      out << "g_extra none: no vertex set leaves every component above " << h << " vertices\n";
      entry["status"] = "impossible";
    } else if (r.certified) {
      out << "g_extra " << r.value << " certified\n";
      out << "witness: " << join_labels(g, r.witness) << '\n';
      entry["status"] = "certified";
      entry["value"] = r.value;
    } else {
      out << "g_extra >= " << r.value << " partial (" << r.reason << ")\n";
      entry["status"] = "budget_exceeded";
      entry["lower_bound"] = r.value;
      entry["reason"] = r.reason;
      code = kBudget;
    }
    if (!o.witness_out.empty() && r.certified && !r.impossible) {
      StructureCut cut;
      for (VertexId v : r.witness) cut.members.push_back({ShapeSpec::single(), {v}});
      emit(o.witness_out, out, [&](std::ostream& s) { write_cut(s, g, cut, p, ShapeSpec::single()); });
    }
  } else {
    auto shape = o.shape.spec();
    auto mode = parse_mode(o.shape.mode);
    out << head << " shape=" << shape.tag() << " mode=" << to_string(mode) << '\n';
    entry["shape"] = shape.tag();
    entry["mode"] = to_string(mode);
    StructureCut witness;
    bool have_witness = false;
    if (o.prove_min) {
      auto r = min_structure_cut(g, shape, mode, budget);
      stats = r.stats;
      entry["action"] = "prove-min";
      if (r.impossible) {
        out << "min none: no cut of " << shape.tag() << " copies exists\n";
        entry["status"] = "impossible";
      } else if (r.certified) {
        out << "min " << r.value << " certified\n";
        entry["status"] = "certified";
        entry["value"] = r.value;
        witness = r.witness;
        have_witness = true;
      } else {
        out << "min >= " << r.value << " partial (" << r.reason << ")\n";
        entry["status"] = "budget_exceeded";
        entry["lower_bound"] = r.value;
        entry["reason"] = r.reason;
        code = kBudget;
      }
    } else {
      if (*o.bound == 0) throw InvalidArgument("--bound must be at least 1");
      auto r = exists_cut_of_size(g, shape, mode, *o.bound, budget);
      stats = r.stats;
      entry["action"] = "bound";
      entry["bound"] = *o.bound;
      entry["status"] = to_string(r.status);
      out << "exists <= " << *o.bound << ": " << to_string(r.status);
      if (r.status == SearchStatus::budget_exceeded) {
        out << " (none up to " << r.proven_none << "; " << r.reason << ")";
        entry["proven_none"] = r.proven_none;
        entry["reason"] = r.reason;
        code = kBudget;
      }
      out << '\n';
      if (r.status == SearchStatus::yes) {
        witness = r.witness;
        have_witness = true;
      }
    }
    if (have_witness) {
      if (o.witness_out.empty()) {
        write_cut(out, g, witness, p, shape);
      } else {
        emit(o.witness_out, out, [&](std::ostream& s) { write_cut(s, g, witness, p, shape); });
      }
    }
  }
  err << "candidates " << stats.candidates << ", checks " << stats.checks << ", " << stats.seconds << " s\n";
  entry["stats"] = {{"candidates", stats.candidates}, {"checks", stats.checks}, {"seconds", stats.seconds}};
  if (!o.manifest.empty()) emit(o.manifest, out, [&](std::ostream& s) { s << entry.dump(2) << '\n'; });
  return code;
}

// ---- table ----

struct TableCase {
  FamilyParams p;
  ShapeSpec shape;
  CutMode mode;

  std::string text() const {
    return to_string(p.family) + " " + p.text() + " " + shape.tag() + " " + to_string(mode);
  }
};

// "<family> [m=<m>] n=<n> <shape-tag> <mode>"
TableCase parse_case(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.size() < 4) throw InvalidArgument("case '" + text + "' needs '<family> <params> <shape> <mode>'");
  TableCase c;
  c.p.family = parse_family(words[0]);
  c.p.m = 0;
  bool have_n = false;
  for (std::size_t i = 1; i + 2 < words.size(); ++i) {
    const auto& w = words[i];
    auto eq = w.find('=');
    if (eq == std::string::npos) throw InvalidArgument("bad parameter '" + w + "' in case '" + text + "'");
    std::size_t v = std::stoul(w.substr(eq + 1));
    if (w.substr(0, eq) == "m") {
      c.p.m = v;
    } else if (w.substr(0, eq) == "n") {
      c.p.n = v;
      have_n = true;
    } else {
      throw InvalidArgument("unknown parameter '" + w + "' in case '" + text + "'");
    }
  }
  if (!have_n) throw InvalidArgument("case '" + text + "' needs n=");
  c.shape = ShapeSpec::parse(words[words.size() - 2]);
  c.mode = parse_mode(words.back());
  return c;
}

std::vector<TableCase> default_grid() {
  std::vector<TableCase> grid;
  auto add = [&](FamilyParams p, ShapeSpec s, CutMode mode) {
    try {
      predicted_kappa(p, s, mode);
      grid.push_back({p, s, mode});
    } catch (const RangeError&) {
    }
  };
  const std::pair<std::size_t, std::size_t> cells[] = {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2},
                                                       {1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3}};
  for (auto [m, n] : cells) {
    auto p = FamilyParams::dcell(m, n);
    add(p, ShapeSpec::single(), CutMode::structure);
    for (std::size_t t = 1; t + 2 <= m + n; ++t) {
      add(p, ShapeSpec::star(t), CutMode::structure);
      add(p, ShapeSpec::star(t), CutMode::substructure);
    }
    for (std::size_t s = 3; s < n; ++s) add(p, ShapeSpec::clique(s), CutMode::structure);
  }
  for (std::size_t n = 4; n <= 6; ++n) {
    auto p = FamilyParams::bcdc(n);
    add(p, ShapeSpec::single(), CutMode::structure);
    for (std::size_t t = 1; t <= 2 * n - 3; ++t) {
      add(p, ShapeSpec::star(t), CutMode::structure);
      add(p, ShapeSpec::star(t), CutMode::substructure);
    }
    for (std::size_t k = 4; k <= 2 * n - 1; ++k) add(p, ShapeSpec::path(k), CutMode::structure);
    for (std::size_t k = 6; k <= 2 * n; ++k) add(p, ShapeSpec::cycle(k), CutMode::structure);
    for (std::size_t k = 4; k <= 2 * n - 1; ++k) add(p, ShapeSpec::cycle(k), CutMode::substructure);
  }
  return grid;
}

struct TableOpts {
  std::vector<std::string> cases;
  BudgetOpts budget;
  bool oracle = false;
  std::size_t oracle_max_order = 100;
  std::size_t max_vertices = kDefaultVertexCap;
  std::string out;
  std::string manifest;
};

int cmd_table(const TableOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  std::vector<TableCase> grid;
  if (o.cases.empty()) {
    grid = default_grid();
  } else {
    for (const auto& c : o.cases) grid.push_back(parse_case(c));
  }
  auto budget = o.budget.budget();
  std::map<std::string, std::unique_ptr<Graph>> graphs;
  std::size_t n_pass = 0, n_fail = 0, n_skip = 0, n_rejected = 0, n_certified = 0;
  json results = json::array();
  const auto start = std::chrono::steady_clock::now();

  std::ostringstream csv;
  csv << kCsvHeader << (o.oracle ? ",oracle" : "") << '\n';
  for (const auto& c : grid) {
    json row{{"case", c.text()}};
    CsvRow r{to_string(c.p.family), c.p.text(), c.shape.tag(), to_string(c.mode), "", 0, 0, 0, 0, false};
    std::string status;
    std::string oracle = o.oracle ? "not-run" : "";
    try {
      auto predicted = predicted_kappa(c.p, c.shape, c.mode);
      r.predicted = std::to_string(predicted.value);
      row["predicted"] = predicted.value;
      row["formula"] = predicted.theorem_tag;
      auto key = to_string(c.p.family) + " " + c.p.text();
      auto& g = graphs[key];
      if (!g) g = std::make_unique<Graph>(build_family(c.p, o.max_vertices));
      auto cut = build_structure_cut(*g, c.p, c.shape, c.mode);
      auto rep = verify_cut(*g, cut, c.shape, c.mode);
      r = csv_row(c.p, c.shape, c.mode, r.predicted, cut, rep);
      row["constructed"] = cut.members.size();
      row["verified"] = rep.pass;
      bool ok = rep.pass && cut.members.size() == predicted.value;
      if (ok && o.oracle && g->order() <= o.oracle_max_order) {
        if (predicted.value <= 1) {
          oracle = "vacuous";
        } else {
          auto e = exists_cut_of_size(*g, c.shape, c.mode, predicted.value - 1, budget);
          row["oracle_checks"] = e.stats.checks;
          if (e.status == SearchStatus::no) {
            oracle = "certified";
            ++n_certified;
          } else if (e.status == SearchStatus::yes) {
            oracle = "refuted";
            ok = false;
          } else {
            oracle = "budget";
          }
        }
      }
      status = !ok ? "fail" : oracle == "budget" ? "skipped(budget)" : "pass";
    } catch (const RangeError& e) {
      status = "rejected(range)";
      row["message"] = e.what();
    } catch (const BudgetError& e) {
      status = "skipped(budget)";
      row["message"] = e.what();
    }
    if (o.oracle) row["oracle"] = oracle;
    row["status"] = status;
    results.push_back(row);
    if (status == "pass") ++n_pass;
    else if (status == "fail") ++n_fail;
    else if (status == "rejected(range)") ++n_rejected;
    else ++n_skip;
    std::ostringstream line;
    write_csv_row(line, r);
    std::string text = line.str();
    if (o.oracle) text.insert(text.size() - 1, "," + oracle);
    csv << text;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  emit(o.out, out, [&](std::ostream& s) { s << csv.str(); });
  err << "rows " << grid.size() << ": " << n_pass << " pass, " << n_fail << " fail, " << n_skip << " skipped, "
      << n_rejected << " rejected";
  if (o.oracle) err << ", " << n_certified << " oracle-certified";
  err << '\n';

  if (!o.manifest.empty()) {
    json m;
    m["command"] = argv;
    json g = json::array();
    for (const auto& c : grid) g.push_back(c.text());
    m["grid"] = g;
    m["budget"] = budget_json(budget);
    m["oracle"] = o.oracle;
    m["outputs"] = {{"csv", o.out.empty() ? "-" : o.out}};
    m["results"] = results;
    m["totals"] = {{"rows", grid.size()},    {"pass", n_pass},         {"fail", n_fail},
                   {"skipped", n_skip},      {"rejected", n_rejected}, {"oracle_certified", n_certified}};
    m["seconds"] = seconds;
    emit(o.manifest, out, [&](std::ostream& s) { s << m.dump(2) << '\n'; });
  }
  return n_fail + n_rejected == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Data-center network topologies and structure cuts"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a topology as an edge list or DOT graph");
  add_family(gen_cmd, gen.fam);
  gen_cmd->add_option("--format", gen.format, "edgelist or dot")->check(CLI::IsMember({"edgelist", "dot"}));
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  CutOpts cut;
  auto* cut_cmd = app.add_subcommand("cut", "build and verify the explicit cut around the base vertex");
  add_family(cut_cmd, cut.fam);
  add_shape(cut_cmd, cut.shape);
  cut_cmd->get_option("--shape")->required();
  cut_cmd->add_option("--out", cut.out, "cut file (default stdout)");
  cut_cmd->add_option("--csv", cut.csv, "append the verification row here (default stderr)");

  OracleOpts oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search for small cuts");
  add_family(oracle_cmd, oracle.fam);
  add_shape(oracle_cmd, oracle.shape);
  add_budget(oracle_cmd, oracle.budget);
  oracle_cmd->add_flag("--prove-min", oracle.prove_min, "find the exact minimum cut size");
  oracle_cmd->add_option("--bound", oracle.bound, "decide whether a cut of at most this many members exists");
  oracle_cmd->add_option("--g-extra", oracle.g_extra, "g-extra connectivity for this h");
  oracle_cmd->add_option("--witness-out", oracle.witness_out, "write the witness cut here");
  oracle_cmd->add_option("--manifest", oracle.manifest, "write a JSON record of the run");

  TableOpts table;
  auto* table_cmd = app.add_subcommand("table", "predicted vs constructed cut sizes over a parameter grid");
  table_cmd->add_option("--case", table.cases, "'<family> [m=..] n=.. <shape-tag> <mode>', repeatable");
  add_budget(table_cmd, table.budget);
  table_cmd->add_flag("--oracle", table.oracle, "also prove no smaller cut exists on small graphs");
  table_cmd->add_option("--oracle-max-order", table.oracle_max_order, "largest graph handed to the oracle");
  table_cmd->add_option("--max-vertices", table.max_vertices, "refuse to build larger graphs");
  table_cmd->add_option("--out", table.out, "CSV file (default stdout)");
  table_cmd->add_option("--manifest", table.manifest, "write a JSON run manifest here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*cut_cmd) return cmd_cut(cut, out, err);
    if (*oracle_cmd) return cmd_oracle(oracle, args, out, err);
    if (*table_cmd) return cmd_table(table, args, out, err);
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return kBudget;
  }
  return kUsage;
}

}  // namespace dcn::cli
