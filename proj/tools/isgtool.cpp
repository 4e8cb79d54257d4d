// Command line front end.  Two commands:
//
//   isgtool verify --suite NAME [--trials N] [--seed S] [--degree D]
//                  [--cap C] [--tol T] [--out PATH]
//   isgtool analyze FILE [--cap C] [--out PATH]
//
// `verify` runs one property suite (or all of them) over its pinned
// fixtures plus seeded random instances and emits a single report
// document.  `analyze` parses a semigroup input file and emits its
// structural data: elements, idempotents, natural order, atoms, the
// minimal idempotent with its group, and the class table of every
// sub-inverse-semigroup within the size cap.
//
// Exit codes: 0 all checks pass, 1 at least one check failed,
// 2 configuration or parse error.  Reports are byte-identical across
// reruns of the same invocation.
//
// The environment variable ISGTOOL_CONFIG may point at a JSON file with
// default settings ({"seed":..,"trials":..,"degree":..,"cap":..,
// "tol":..}); explicit flags override it.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isg/error.hpp"
#include "isg/generators.hpp"
#include "isg/induction.hpp"
#include "isg/lattice.hpp"
#include "isg/report.hpp"
#include "isg/semigroup.hpp"
#include "isg/suites.hpp"

namespace {

using nlohmann::json;

int emit(const json& doc, const std::string& out_path) {
  const std::string text = isg::render_report(doc);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output path: " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

// Applies ISGTOOL_CONFIG defaults, keeping any value the command line
// set explicitly.
int apply_env_config(const CLI::App& cmd, isg::RunConfig& cfg,
                     std::string& out_path) {
  const char* path = std::getenv("ISGTOOL_CONFIG");
  if (path == nullptr || *path == '\0') return 0;
  std::ifstream f(path);
  if (!f) {
    std::cerr << "config file not readable: " << path << "\n";
    return 2;
  }
  json doc;
  try {
    f >> doc;
  } catch (const json::exception& e) {
    std::cerr << "config file " << path << ": " << e.what() << "\n";
    return 2;
  }
  if (!doc.is_object()) {
    std::cerr << "config file " << path << ": expected an object\n";
    return 2;
  }
  try {
    auto fresh = [&cmd](const char* flag) {
      const CLI::Option* o = cmd.get_option(flag);
      return o->count() == 0;
    };
    if (doc.contains("seed") && fresh("--seed")) {
      cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("trials") && fresh("--trials")) {
      cfg.trials = doc["trials"].get<int>();
    }
    if (doc.contains("degree") && fresh("--degree")) {
      cfg.degree = doc["degree"].get<int>();
    }
    if (doc.contains("cap") && fresh("--cap")) {
      cfg.cap = doc["cap"].get<int>();
    }
    if (doc.contains("tol") && fresh("--tol")) {
      cfg.tol = doc["tol"].get<double>();
    }
    if (doc.contains("out") && out_path.empty()) {
      out_path = doc["out"].get<std::string>();
    }
  } catch (const json::exception& e) {
    std::cerr << "config file " << path << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int check_bounds(const isg::RunConfig& cfg) {
  if (cfg.degree < 1 || cfg.degree > 5) {
    std::cerr << "degree bound must lie in 1..5\n";
    return 2;
  }
  if (cfg.cap < 1 || cfg.trials < 0 || !(cfg.tol > 0)) {
    std::cerr << "cap and tolerance must be positive, trials nonnegative\n";
    return 2;
  }
  return 0;
}

int run_verify(const std::string& suite, const isg::RunConfig& cfg,
               const std::string& out_path) {
  if (suite != "all" && !isg::is_suite(suite)) {
    std::cerr << "unknown suite: " << suite << "\nknown suites:";
    for (const auto& s : isg::suite_names()) std::cerr << " " << s;
    std::cerr << " all\n";
    return 2;
  }

  std::ostringstream cmd;
  cmd << "verify --suite " << suite << " --trials " << cfg.trials
      << " --seed " << cfg.seed << " --degree " << cfg.degree << " --cap "
      << cfg.cap << " --tol " << cfg.tol;

  std::vector<isg::SuiteResult> results;
  try {
    results = isg::run_many(suite, cfg);
  } catch (const isg::Error& e) {
    std::cerr << isg::error_code_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }

  json instance;
  instance["suite"] = suite;
  instance["seed"] = cfg.seed;
  instance["degree"] = cfg.degree;
  instance["cap"] = cfg.cap;
  instance["tol"] = cfg.tol;
  instance["suites"] = json::array();

  std::vector<isg::CheckResult> checks;
  bool all_pass = true;
  for (const auto& r : results) {
    json meta;
    meta["name"] = r.suite;
    meta["trials"] = r.trials;
    meta["failed_trials"] = r.failed_trials;
    instance["suites"].push_back(meta);
    checks.push_back(isg::CheckResult{
        r.suite + "/summary", r.pass,
        std::to_string(r.trials) + " trials, " +
            std::to_string(r.failed_trials) + " failed"});
    for (const auto& c : r.checks) {
      checks.push_back(
          isg::CheckResult{r.suite + "/" + c.name, c.pass, c.witness});
    }
    all_pass = all_pass && r.pass;
  }

  const json doc = isg::make_report(cmd.str(), cfg.seed, instance, checks);
  const int rc = emit(doc, out_path);
  if (rc != 0) return rc;
  return all_pass ? 0 : 1;
}

// Every sub-inverse-semigroup of size <= cap, found by closing single
// elements and then growing each closed set one element at a time.
// Closure is monotone in the seed set, so branches that leave the cap
// can be dropped without losing any small subsemigroup.
std::vector<std::vector<int>> all_subsemigroups(const isg::ISG& g, int cap) {
  std::vector<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  auto admit = [&](const std::vector<int>& members) {
    for (const auto& seen : found) {
      if (seen == members) return false;
    }
    found.push_back(members);
    frontier.push_back(members);
    return true;
  };
  for (int x = 0; x < g.size(); ++x) {
    const isg::SubISG s = isg::SubISG::closure_of(g, {x});
    if (s.local.size() <= cap) admit(s.to_parent);
  }
  while (!frontier.empty()) {
    const std::vector<int> base = std::move(frontier.back());
    frontier.pop_back();
    for (int x = 0; x < g.size(); ++x) {
      if (std::find(base.begin(), base.end(), x) != base.end()) continue;
      std::vector<int> seed = base;
      seed.push_back(x);
      const isg::SubISG s = isg::SubISG::closure_of(g, seed);
      if (s.local.size() <= cap) admit(s.to_parent);
    }
  }
  std::sort(found.begin(), found.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return found;
}

int run_analyze(const std::string& file, int cap,
                const std::string& out_path) {
  std::ifstream f(file, std::ios::binary);
  if (!f) {
    std::cerr << "cannot read input file: " << file << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << f.rdbuf();

  isg::SemigroupInput input;
  std::optional<isg::ISG> parsed;
  try {
    input = isg::parse_semigroup_text(buf.str());
    parsed = isg::ISG::close(input.degree, input.generators, cap * 8);
  } catch (const isg::Error& e) {
    std::cerr << isg::error_code_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  const isg::ISG& g = *parsed;

  json instance;
  instance["file"] = file;
  instance["degree"] = g.degree();
  instance["size"] = g.size();

  instance["elements"] = json::array();
  for (int i = 0; i < g.size(); ++i) {
    instance["elements"].push_back(g.elem(i).str());
  }

  instance["idempotents"] = json::array();
  for (int e : g.idempotents()) {
    instance["idempotents"].push_back(g.elem(e).str());
  }
  if (auto z = g.zero()) instance["zero"] = g.elem(*z).str();

  instance["natural_order"] = json::array();
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (i != j && g.leq(i, j)) {
        instance["natural_order"].push_back(g.elem(i).str() + " <= " +
                                            g.elem(j).str());
      }
    }
  }

  {
    const isg::ProjLattice l = isg::ProjLattice::full(g);
    json atoms = json::array();
    for (int e = 0; e < l.size(); ++e) {
      const isg::AtomWord w = isg::canonical_atom_word(l, e);
      std::ostringstream word;
      word << l.label(w.e0);
      for (int n : w.negatives) word << " * (1 - " << l.label(n) << ")";
      json row;
      row["idempotent"] = l.label(e);
      row["index"] = e;
      row["word"] = word.str();
      atoms.push_back(row);
    }
    instance["atoms"] = atoms;
  }

  {
    const isg::MinimalGroup mg = isg::minimal_idempotent_group(g);
    json peirce;
    peirce["idempotent"] = mg.e0 >= 0 ? g.elem(mg.e0).str() : "";
    peirce["is_group"] = mg.is_group;
    if (!mg.is_group) peirce["failure"] = mg.failure;
    peirce["members"] = json::array();
    for (int x : mg.members) peirce["members"].push_back(g.elem(x).str());
    instance["minimal_idempotent_group"] = peirce;
  }

  {
    const isg::SubISG whole = isg::SubISG::whole(g);
    json subs = json::array();
    for (const auto& members : all_subsemigroups(g, cap)) {
      const isg::SubISG h = isg::SubISG::from_indices(g, members);
      const isg::CosetTable t = isg::coset_table(whole, h);
      json row;
      row["members"] = json::array();
      for (int x : members) row["members"].push_back(g.elem(x).str());
      row["space_size"] = static_cast<int>(t.members.size());
      row["classes"] = json::array();
      for (const auto& cls : t.classes) {
        json c = json::array();
        for (int x : cls) c.push_back(g.elem(x).str());
        row["classes"].push_back(c);
      }
      row["transversal"] = json::array();
      for (int x : t.transversal) {
        row["transversal"].push_back(g.elem(x).str());
      }
      subs.push_back(row);
    }
    instance["subsemigroups"] = subs;
  }

  std::vector<isg::CheckResult> checks;
  checks.push_back(isg::CheckResult{"input parses", true, ""});
  checks.push_back(
      isg::CheckResult{"table is associative", g.table_associative(), ""});

  std::ostringstream cmd;
  cmd << "analyze " << file << " --cap " << cap;
  const json doc = isg::make_report(cmd.str(), 0, instance, checks);
  const int rc = emit(doc, out_path);
  if (rc != 0) return rc;
  for (const auto& c : checks) {
    if (!c.pass) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for finite inverse semigroups"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand(
      "verify", "run a property suite and emit a report");
  std::string suite;
  isg::RunConfig cfg;
  std::string out_path;
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--trials", cfg.trials,
                     "random trials per suite (0 = suite default)");
  verify->add_option("--seed", cfg.seed, "root seed, recorded in the report");
  verify->add_option("--degree", cfg.degree, "partial permutation degree cap");
  verify->add_option("--cap", cfg.cap, "semigroup size cap");
  verify->add_option("--tol", cfg.tol, "numeric tolerance");
  verify->add_option("--out", out_path, "report path (default stdout)");

  auto* analyze = app.add_subcommand(
      "analyze", "describe a semigroup input file");
  std::string input_file;
  int analyze_cap = 60;
  std::string analyze_out;
  analyze->add_option("file", input_file, "semigroup input document")
      ->required();
  analyze->add_option("--cap", analyze_cap,
                      "size cap for the subsemigroup sweep");
  analyze->add_option("--out", analyze_out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (verify->parsed()) {
    const int rc = apply_env_config(*verify, cfg, out_path);
    if (rc != 0) return rc;
    const int bounds = check_bounds(cfg);
    if (bounds != 0) return bounds;
    return run_verify(suite, cfg, out_path);
  }
  if (analyze->parsed()) {
    if (analyze_cap < 1) {
      std::cerr << "cap must be positive\n";
      return 2;
    }
    return run_analyze(input_file, analyze_cap, analyze_out);
  }
  return 2;
}
