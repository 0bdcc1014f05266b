// imax: count maximal independent sets, build the extremal families, and
// run the exhaustive censuses and verification suites.
//
// Exit codes: 0 all checks pass, 1 a check produced a counterexample,
// 2 usage, parse or cap error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "imax/imax.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace imax;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kUncapped = std::numeric_limits<std::size_t>::max();

struct Settings {
  unsigned threads = 0;
  bool uncapped = false;

  std::size_t vertex_cap() const { return uncapped ? kUncapped : kDefaultVertexCap; }
  std::size_t construction_cap() const { return uncapped ? kUncapped : kConstructionCap; }
  std::size_t tree_cap() const { return uncapped ? kCanonicalCap : kFreeTreeCap; }
  std::size_t small_graph_cap() const { return uncapped ? 10 : kSmallGraphCap; }
  std::size_t forest_cap() const { return uncapped ? kFreeTreeCap : kForestCap; }
  CensusOptions census(std::optional<bool> keep = {}) const { return {threads, keep, 8192}; }
};

// Owns an ifstream when a path is given, otherwise reads stdin.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw Error("cannot open " + path);
    }
  }
  std::istream& stream() { return file_.is_open() ? static_cast<std::istream&>(file_) : std::cin; }

 private:
  std::ifstream file_;
};

json row_json(const CensusRow& r) {
  json j;
  j["n"] = r.n;
  j["min_imax"] = to_decimal(r.min_imax);
  j["extremal_count"] = r.extremal_count;
  j["predicate"] = std::string(predicate_tag(r.predicate));
  if (r.witnesses_retained) j["witnesses"] = r.witnesses;
  return j;
}

struct Report {
  std::string suite;
  json rows = json::array();
  std::vector<std::string> lines;  // text mode
  bool pass = true;
  json counterexample;

  void fail(json ce) {
    if (pass) counterexample = std::move(ce);
    pass = false;
  }

  void add_row(const CensusRow& r) {
    rows.push_back(row_json(r));
    std::ostringstream s;
    s << predicate_tag(r.predicate) << " n=" << r.n << " min_imax=" << to_decimal(r.min_imax)
      << " extremal_count=" << r.extremal_count;
    lines.push_back(s.str());
  }

  int emit(const std::string& format) const {
    if (format == "json") {
      json j;
      j["suite"] = suite;
      j["rows"] = rows;
      j["status"] = pass ? "pass" : "fail";
      if (!pass) j["counterexample"] = counterexample;
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
      if (!pass) std::cout << "counterexample: " << counterexample.dump() << "\n";
      std::cout << "status: " << (pass ? "pass" : "fail") << "\n";
    }
    return pass ? kExitPass : kExitFail;
  }
};

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t v) {
    if (!first) out += " ";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

// ---- mis ----

struct MisArgs {
  std::string input;
  bool enumerate = false;
  std::size_t witness_limit = 0;
  std::uint64_t budget = 0;
  bool as_json = false;
};

int cmd_mis(const MisArgs& a, const Settings& s) {
  Input in(a.input);
  Graph6Reader reader(in.stream(), s.vertex_cap());
  MisOptions opts;
  opts.node_budget = a.budget;
  if (a.enumerate) opts.witness_limit = a.witness_limit ? a.witness_limit : kUncapped;
  json graphs = json::array();
  std::string text;
  while (auto g = reader.next(&text)) {
    MisReport rep = count_mis(*g, opts);
    if (a.as_json) {
      json j;
      j["line"] = reader.line();
      j["graph6"] = text;
      j["n"] = g->order();
      j["budget_exceeded"] = rep.budget_exceeded;
      if (!rep.budget_exceeded) j["count"] = to_decimal(rep.count);
      if (a.enumerate && !rep.budget_exceeded) {
        json ws = json::array();
        for (const auto& w : rep.witnesses) ws.push_back(w.members());
        j["witnesses"] = ws;
        j["witness_limit_hit"] = rep.witness_limit_hit;
      }
      graphs.push_back(j);
      continue;
    }
    if (rep.budget_exceeded) {
      std::cout << "budget-exceeded\n";
      continue;
    }
    std::cout << to_decimal(rep.count) << "\n";
    if (a.enumerate) {
      for (const auto& w : rep.witnesses) std::cout << set_text(w) << "\n";
      if (rep.witness_limit_hit) std::cout << "# witness limit reached\n";
    }
  }
  if (a.as_json) {
    json j;
    j["suite"] = "mis";
    j["graphs"] = graphs;
    j["status"] = "pass";
    std::cout << j.dump() << "\n";
  }
  return kExitPass;
}

// ---- construct ----

struct ConstructArgs {
  std::string family;
  std::optional<std::size_t> n, k;
  std::size_t length = 1;
  bool selfcheck = false;
};

std::size_t need(const std::optional<std::size_t>& v, const char* flag, const std::string& family) {
  if (!v) throw PreconditionError(family + " needs " + flag);
  return *v;
}

bool selfcheck_graph(const Graph& g, const BigInt& expected, const std::string& what) {
  BigInt got = count_mis(g).count;
  bool ok = got == expected;
  std::cerr << "selfcheck " << what << ": imax = " << to_decimal(got) << " (expected " << to_decimal(expected)
            << ") " << (ok ? "ok" : "MISMATCH") << "\n";
  return ok;
}

int cmd_construct(const ConstructArgs& a, const Settings& s) {
  const std::string& f = a.family;
  const std::size_t cap = s.construction_cap();
  bool ok = true;
  auto emit = [&](const Graph& g, const BigInt& expected, const std::string& what) {
    std::cout << to_graph6(g) << "\n";
    if (a.selfcheck) ok = selfcheck_graph(g, expected, what) && ok;
  };
  if (f == "clique-subsets" || f == "clique-subsets-empty") {
    std::size_t k = need(a.k, "--k", f);
    Graph g = f == "clique-subsets" ? clique_subset_graph(k, cap) : clique_subset_graph_with_empty(k, cap);
    emit(g, k, f);
  } else if (f == "bip-minus-matching") {
    std::size_t n = need(a.n, "--n", f);
    emit(bipartite_minus_matching(n, cap), bipartite_min(n), f);
  } else if (f == "spider") {
    std::size_t n = need(a.n, "--n", f);
    emit(spider(n, cap), wilf_max_tree(n), f);
  } else if (f == "baton") {
    std::size_t n = need(a.n, "--n", f);
    emit(baton(n, a.length, cap), wilf_max_tree(n), f);
  } else if (f == "furedi-griggs") {
    std::size_t n = need(a.n, "--n", f);
    emit(furedi_griggs_graph(n, cap), connected_max(n), f);
  } else if (f == "tree-mod5") {
    std::size_t n = need(a.n, "--n", f);
    Graph t = extremal_tree_mod5(n, cap);
    emit(t, f_min_tree(n), f);
    if (a.selfcheck && !is_twin_free(t)) {
      std::cerr << "selfcheck tree-mod5: tree has twins\n";
      ok = false;
    }
  } else if (f == "trees-n8") {
    for (const Graph& t : extremal_trees_n8()) emit(t, 8, f);
  } else if (f == "lt-matrices") {
    std::size_t k = need(a.k, "--k", f);
    bool first = true;
    for (const auto& m : lower_triangular_matrices(k)) {
      if (!first) std::cout << "\n";
      first = false;
      std::cout << to_text(m);
      if (a.selfcheck) {
        if (!matrix_conditions(m)) {
          std::cerr << "selfcheck lt-matrices: matrix violates the conditions\n";
          ok = false;
          continue;
        }
        ok = selfcheck_graph(matrix_to_bipartite(m), k + 1, f) && ok;
      }
    }
  }
  return ok ? kExitPass : kExitFail;
}

// ---- census ----

struct CensusArgs {
  std::string target;
  std::vector<std::size_t> ns;
  std::string input;
  bool general_complete = false;
  std::string report = "text";
  std::optional<bool> witnesses;
};

void check_graph_census(Report& rep, const GraphCensus& c) {
  if (c.bipartite.extremal_count > 0 && c.bipartite.min_imax != bipartite_min(c.n))
    rep.fail({{"n", c.n},
              {"predicate", "connected-bipartite"},
              {"expected", to_decimal(bipartite_min(c.n))},
              {"actual", to_decimal(c.bipartite.min_imax)}});
  if (c.general) {
    if (c.n >= 2 && !*c.general_consistent())
      rep.fail({{"n", c.n},
                {"predicate", "connected-general"},
                {"expected", std::to_string(min_imax_connected_graph(c.n))},
                {"actual", to_decimal(c.general->min_imax)}});
    if (c.general->extremal_count > 0 &&
        static_cast<double>(c.general->min_imax) <= std::log2(static_cast<double>(c.n)))
      rep.fail({{"n", c.n}, {"predicate", "connected-general"}, {"reason", "min_imax <= log2(n)"}});
  }
}

int cmd_census(const CensusArgs& a, const Settings& s) {
  Report rep;
  rep.suite = "census-" + a.target;
  std::ostringstream csv;
  if (a.target == "trees") {
    csv << "n,min_imax,extremal_count\n";
    for (std::size_t n : a.ns) {
      CensusRow r = census_trees(n, s.census(a.witnesses), s.tree_cap());
      rep.add_row(r);
      csv << n << "," << to_decimal(r.min_imax) << "," << r.extremal_count << "\n";
      if (r.min_imax != f_min_tree(n))
        rep.fail({{"n", n}, {"predicate", "tree"}, {"expected", to_decimal(f_min_tree(n))},
                  {"actual", to_decimal(r.min_imax)}});
    }
  } else {
    if (!a.input.empty() && a.ns.size() != 1) throw PreconditionError("--input takes exactly one --n");
    csv << "n,min_imax,bipartite_count,trianglefree_count,general_min_imax,general_count\n";
    for (std::size_t n : a.ns) {
      GraphCensus c;
      if (a.input.empty()) {
        c = census_graphs_builtin(n, s.census(a.witnesses), s.small_graph_cap());
      } else {
        Input in(a.input);
        c = census_graphs_stream(in.stream(), n, s.census(a.witnesses), a.general_complete, s.vertex_cap());
      }
      rep.add_row(c.bipartite);
      rep.add_row(c.triangle_free);
      if (c.general) rep.add_row(*c.general);
      const BigInt& shared = c.bipartite.extremal_count ? c.bipartite.min_imax : c.triangle_free.min_imax;
      csv << n << "," << to_decimal(shared) << "," << c.bipartite.extremal_count << ","
          << c.triangle_free.extremal_count << ",";
      if (c.general) csv << to_decimal(c.general->min_imax) << "," << c.general->extremal_count;
      else csv << ",";
      csv << "\n";
      check_graph_census(rep, c);
      TriangleFreeProbe p = triangle_free_probe(c);
      std::cerr << "observation n=" << n << ": triangle-free minimum "
                << (p.min_matches ? "equals" : "differs from") << " ceil(n/2)+1; "
                << p.extremal_non_bipartite << " extremal triangle-free graphs are not bipartite\n";
    }
  }
  if (a.report == "csv") {
    std::cout << csv.str();
    return rep.pass ? kExitPass : kExitFail;
  }
  if (a.report == "text") {
    // Witness lists follow their row in text mode.
    rep.lines.clear();
    for (const auto& r : rep.rows) {
      rep.lines.push_back(r["predicate"].get<std::string>() + " n=" + std::to_string(r["n"].get<std::size_t>()) +
                          " min_imax=" + r["min_imax"].get<std::string>() +
                          " extremal_count=" + std::to_string(r["extremal_count"].get<std::uint64_t>()));
      if (r.contains("witnesses"))
        for (const auto& w : r["witnesses"]) rep.lines.push_back("  " + w.get<std::string>());
    }
  }
  return rep.emit(a.report);
}

// ---- verify ----

struct VerifyArgs {
  std::string suite;
  std::optional<std::size_t> n, max_n, max;
  std::string input;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::string report = "text";
};

void suite_thm1(Report& rep, const VerifyArgs& a, const Settings& s) {
  auto record = [&](const Thm1Report& t) {
    rep.lines.push_back("n=" + std::to_string(t.n) + " graphs=" + std::to_string(t.graphs_checked) +
                        " equality_cases=" + std::to_string(t.equality_cases) + (t.pass() ? " ok" : " FAIL"));
    if (!t.pass()) rep.fail({{"n", t.n}, {"graph6", *t.counterexample}, {"reason", t.reason}});
  };
  if (!a.input.empty()) {
    if (!a.n) throw PreconditionError("--input needs --n");
    Input in(a.input);
    Graph6Reader reader(in.stream(), s.vertex_cap());
    record(verify_thm1_source([&] { return reader.next(); }, *a.n));
    return;
  }
  const std::size_t hi = a.max_n.value_or(a.n.value_or(8));
  for (std::size_t n = a.n && !a.max_n ? *a.n : 2; n <= hi; ++n) record(verify_thm1(n, s.small_graph_cap()));
}

void suite_thm2(Report& rep, const VerifyArgs& a, const Settings& s) {
  auto record = [&](const GraphCensus& c) {
    rep.add_row(c.bipartite);
    if (c.bipartite.extremal_count > 0 && c.bipartite.min_imax != bipartite_min(c.n))
      rep.fail({{"n", c.n},
                {"predicate", "connected-bipartite"},
                {"expected", to_decimal(bipartite_min(c.n))},
                {"actual", to_decimal(c.bipartite.min_imax)},
                {"graph6", c.bipartite.witnesses.empty() ? "" : c.bipartite.witnesses.front()}});
  };
  if (!a.input.empty()) {
    if (!a.n) throw PreconditionError("--input needs --n");
    Input in(a.input);
    record(census_graphs_stream(in.stream(), *a.n, s.census(), false, s.vertex_cap()));
    return;
  }
  const std::size_t hi = a.max_n.value_or(a.n.value_or(8));
  for (std::size_t n = a.n && !a.max_n ? *a.n : 2; n <= hi; ++n)
    record(census_graphs_builtin(n, s.census(), s.small_graph_cap()));
}

void suite_thm3(Report& rep, const VerifyArgs& a, const Settings& s) {
  const std::size_t hi = a.max_n.value_or(a.n.value_or(16));
  for (std::size_t n = a.n && !a.max_n ? *a.n : 4; n <= hi; ++n) {
    CensusRow r = census_trees(n, s.census(), s.tree_cap());
    rep.add_row(r);
    if (r.min_imax != f_min_tree(n))
      rep.fail({{"n", n}, {"predicate", "tree"}, {"expected", to_decimal(f_min_tree(n))},
                {"actual", to_decimal(r.min_imax)},
                {"graph6", r.witnesses.empty() ? "" : r.witnesses.front()}});
  }
}

void suite_wilf(Report& rep, const VerifyArgs& a, const Settings&) {
  const std::size_t hi = a.max_n.value_or(a.n.value_or(18));
  std::mt19937_64 rng(a.seed);
  for (std::size_t n = a.n && !a.max_n ? *a.n : 4; n <= hi; ++n) {
    std::uint64_t checks = 0;
    for (std::size_t i = 0; i < a.samples && rep.pass; ++i) {
      Graph t = random_tree(n, rng);
      for (std::size_t x = 0; x < n; ++x) {
        if (t.degree(x) != 1) continue;
        WilfCheck c = wilf_formula_check(t, x);
        ++checks;
        if (!c.holds()) {
          rep.fail({{"n", n}, {"graph6", to_graph6(t)}, {"leaf", x}, {"direct", to_decimal(c.direct)},
                    {"product_sum", to_decimal(c.product_sum)}});
          break;
        }
      }
    }
    rep.lines.push_back("n=" + std::to_string(n) + " leaf checks=" + std::to_string(checks));
  }
}

void suite_inequalities(Report& rep, const VerifyArgs& a, const Settings&) {
  FInequalityReport r = f_inequalities(a.max.value_or(200));
  std::string exceptions;
  for (const auto& [n, m] : r.product_failures)
    exceptions += " (" + std::to_string(n) + "," + std::to_string(m) + ")";
  rep.lines.push_back("f(n)f(m) >= f(n+m) for 2 <= n,m <= " + std::to_string(r.max) + "; exceptions:" +
                      (exceptions.empty() ? " none" : exceptions));
  rep.lines.push_back("f(n-1)f(m-1) >= f(n+m-1) for 5 <= n,m <= " + std::to_string(r.max) + "; exceptions: " +
                      std::to_string(r.shifted_failures.size()));
  if (!r.holds()) {
    json ce;
    ce["product_failures"] = r.product_failures;
    ce["shifted_failures"] = r.shifted_failures;
    rep.fail(ce);
  }
}

void suite_milner(Report& rep, const VerifyArgs& a, const Settings&) {
  std::vector<std::size_t> ns = a.n ? std::vector<std::size_t>{*a.n} : std::vector<std::size_t>{3, 4};
  for (std::size_t n : ns) {
    MilnerResult m = milner_exhaustive(n);
    const std::size_t bound = (std::size_t{1} << (n - 1)) + n;
    const bool ok = m.max_size == bound && m.unique_and_matches_construction;
    rep.lines.push_back("n=" + std::to_string(n) + " max=" + std::to_string(m.max_size) +
                        " extremal_classes=" + std::to_string(m.extremal_classes.size()) +
                        (m.extremal_classes.size() == 1 ? " unique" : "") + (ok ? " ok" : " FAIL"));
    if (!ok) {
      json ce;
      ce["n"] = n;
      ce["max"] = m.max_size;
      ce["extremal_classes"] = m.extremal_classes.size();
      if (!m.extremal_classes.empty()) ce["family"] = m.extremal_classes.front().members();
      rep.fail(ce);
    }
  }
}

void suite_matrices(Report& rep, const VerifyArgs& a, const Settings& s) {
  const std::size_t hi = a.max_n.value_or(a.n.value_or(6));
  for (std::size_t k = a.n && !a.max_n ? *a.n : 1; k <= hi; ++k) {
    std::vector<BinaryMatrix> ms = valid_matrices(k);
    std::set<std::string> classes;
    for (const auto& m : ms) {
      Graph g = matrix_to_bipartite(m);
      classes.insert(canonical_form(g));
      BigInt c = count_mis(g).count;
      if (!is_connected(g) || !is_twin_free(g) || c != BigInt(k + 1)) {
        rep.fail({{"k", k}, {"matrix", to_text(m)}, {"graph6", to_graph6(g)}, {"imax", to_decimal(c)}});
        return;
      }
    }
    if (classes.size() != ms.size()) rep.fail({{"k", k}, {"reason", "two matrices give isomorphic graphs"}});
    CensusRow row;
    row.n = 2 * k;
    row.min_imax = k + 1;
    row.extremal_count = ms.size();
    row.predicate = Predicate::connected_bipartite;
    rep.add_row(row);
    if (2 * k <= s.small_graph_cap() && k >= 1) {
      GraphCensus c = census_graphs_builtin(2 * k, s.census(false), s.small_graph_cap());
      if (c.bipartite.extremal_count != ms.size())
        rep.fail({{"k", k}, {"matrices", ms.size()}, {"census", c.bipartite.extremal_count}});
    }
  }
}

void suite_forests(Report& rep, const VerifyArgs& a, const Settings& s) {
  const std::size_t hi = a.max_n.value_or(a.n.value_or(14));
  for (std::size_t n = a.n && !a.max_n ? *a.n : 2; n <= hi; ++n) {
    ForestReport f = verify_forest_bound(n, s.forest_cap());
    CensusRow row;
    row.n = n;
    row.min_imax = f.min_imax;
    row.extremal_count = f.extremal_count;
    row.predicate = Predicate::forest;
    rep.add_row(row);
    rep.lines.back() += " forests=" + std::to_string(f.forests_checked) + " bound=" + to_decimal(f.bound);
    if (!f.pass())
      rep.fail({{"n", n}, {"graph6", *f.counterexample}, {"bound", to_decimal(f.bound)}});
  }
}

int cmd_verify(const VerifyArgs& a, const Settings& s) {
  Report rep;
  rep.suite = a.suite;
  static const std::map<std::string, void (*)(Report&, const VerifyArgs&, const Settings&)> suites = {
      {"thm1", suite_thm1},       {"thm2", suite_thm2},     {"thm3", suite_thm3},
      {"lemma-wilf", suite_wilf}, {"inequalities", suite_inequalities}, {"milner", suite_milner},
      {"matrices", suite_matrices}, {"forests", suite_forests},
  };
  suites.at(a.suite)(rep, a, s);
  return rep.emit(a.report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal independent set counting and extremal censuses"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--threads", settings.threads, "Worker threads (default: MIS_THREADS or all cores)");
  app.add_flag("--unsafe-uncapped", settings.uncapped, "Lift the size caps (exponential cost)");

  MisArgs mis;
  auto* mis_cmd = app.add_subcommand("mis", "Count or list maximal independent sets of graph6 input");
  mis_cmd->add_option("--input", mis.input, "graph6 file (default: stdin)");
  auto* count_flag = mis_cmd->add_flag("--count", "Print counts only (default)");
  mis_cmd->add_flag("--enumerate", mis.enumerate, "Also list the sets")->excludes(count_flag);
  mis_cmd->add_option("--witness-limit", mis.witness_limit, "Maximum sets listed per graph");
  mis_cmd->add_option("--budget", mis.budget, "Search node budget per graph (0: none)");
  mis_cmd->add_flag("--json", mis.as_json, "JSON report");

  ConstructArgs con;
  auto* con_cmd = app.add_subcommand("construct", "Emit an extremal construction");
  con_cmd->add_option("family", con.family, "Family name")
      ->required()
      ->check(CLI::IsMember({"clique-subsets", "clique-subsets-empty", "bip-minus-matching", "spider", "baton",
                             "furedi-griggs", "tree-mod5", "trees-n8", "lt-matrices"}));
  con_cmd->add_option("--n", con.n, "Order");
  con_cmd->add_option("--k", con.k, "Clique parameter or matrix size");
  con_cmd->add_option("--length", con.length, "Baton central path length (1 or 3)");
  con_cmd->add_flag("--selfcheck", con.selfcheck, "Recount and compare with the expected value");

  CensusArgs cen;
  auto* cen_cmd = app.add_subcommand("census", "Minimum imax and extremal graphs by order");
  cen_cmd->add_option("target", cen.target)->required()->check(CLI::IsMember({"trees", "graphs"}));
  cen_cmd->add_option("--n", cen.ns, "Orders")->required();
  cen_cmd->add_option("--input", cen.input, "graph6 stream of one order ('-' for stdin)");
  cen_cmd->add_flag("--general-complete", cen.general_complete,
                    "The stream lists every connected graph (enables the general row)");
  cen_cmd->add_option("--report", cen.report)->check(CLI::IsMember({"text", "json", "csv"}));
  cen_cmd->add_flag("--witnesses,!--no-witnesses", cen.witnesses, "Keep canonical witnesses");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  ver_cmd->add_option("suite", ver.suite)
      ->required()
      ->check(CLI::IsMember(
          {"thm1", "thm2", "thm3", "lemma-wilf", "inequalities", "milner", "matrices", "forests"}));
  ver_cmd->add_option("--n", ver.n, "Single order (or k for matrices)");
  ver_cmd->add_option("--max-n", ver.max_n, "Largest order (or k for matrices)");
  ver_cmd->add_option("--max", ver.max, "Range for the f inequalities");
  ver_cmd->add_option("--input", ver.input, "graph6 stream for thm1/thm2");
  ver_cmd->add_option("--samples", ver.samples, "Random trees per order for lemma-wilf");
  ver_cmd->add_option("--seed", ver.seed, "Random seed");
  ver_cmd->add_option("--report", ver.report)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*mis_cmd) return cmd_mis(mis, settings);
    if (*con_cmd) return cmd_construct(con, settings);
    if (*cen_cmd) return cmd_census(cen, settings);
    return cmd_verify(ver, settings);
  } catch (const imax::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
