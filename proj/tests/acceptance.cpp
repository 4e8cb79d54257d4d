// Acceptance gate.  Runs every promised property suite at its contract
// volume and prints one verdict line per criterion.  Exits nonzero if
// any criterion fails, so the build treats this binary as the final
// word on whether the toolkit does what it claims.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "isg/crossed.hpp"
#include "isg/error.hpp"
#include "isg/report.hpp"
#include "isg/star_algebra.hpp"
#include "isg/suites.hpp"

namespace {

int g_failed = 0;

void verdict(int no, bool pass, const std::string& text,
             const std::string& why = "") {
  std::printf("criterion %d: %s  %s\n", no, pass ? "PASS" : "FAIL",
              text.c_str());
  if (!pass) {
    ++g_failed;
    if (!why.empty()) std::printf("  first failure: %s\n", why.c_str());
  }
}

std::string first_failure(const isg::SuiteResult& r) {
  for (const auto& c : r.checks) {
    if (!c.pass) return c.name + " | " + c.witness;
  }
  return "";
}

isg::SuiteResult run(const std::string& suite, int trials) {
  isg::RunConfig cfg;
  cfg.seed = 1;
  cfg.trials = trials;
  cfg.degree = 4;
  cfg.cap = 60;
  cfg.tol = 1e-8;
  return isg::run_suite(suite, cfg);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  const auto d = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double>(d).count();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

int main() {
  {
    const auto t0 = std::chrono::steady_clock::now();
    const isg::SuiteResult r = run("sigma", 200);
    const double secs = seconds_since(t0);
    std::ostringstream text;
    text << "lattice calculus, " << r.trials << " random semigroups, exact, "
         << secs << "s of 60s budget";
    verdict(1, r.pass && secs < 60.0, text.str(), first_failure(r));
  }

  {
    const isg::SuiteResult r = run("delta", 200);
    verdict(2,
            r.pass,
            "pair model of the coset space, same instance pool, "
            "200 trials, zero tolerance",
            first_failure(r));
  }

  {
    const isg::SuiteResult r = run("induction", 100);
    verdict(3,
            r.pass,
            "induced algebras: valid actions, fiber dimension count, "
            "transversal rotation, 100 trials",
            first_failure(r));
  }

  {
    const isg::SuiteResult r = run("mu-tau", 100);
    verdict(4,
            r.pass,
            "both comparison maps are equivariant isomorphisms, "
            "100 random fibered instances",
            first_failure(r));
  }

  {
    const isg::SuiteResult r = run("adjunction", 100);
    int pinned = 0;
    for (const auto& c : r.checks) {
      if (c.name.rfind("fixture", 0) == 0) ++pinned;
    }
    std::ostringstream text;
    text << "triangle identities, " << pinned
         << " pinned checks plus 100 random trials";
    verdict(5, r.pass && pinned >= 16, text.str(), first_failure(r));
  }

  {
    const isg::SuiteResult l2 = run("l2", 60);
    const isg::SuiteResult mg = run("mingo", 60);
    verdict(6,
            l2.pass && mg.pass,
            "square-summable modules exhaustively audited and the "
            "comparison operator verified, 60 trials each",
            l2.pass ? first_failure(mg) : first_failure(l2));
  }

  {
    const isg::SuiteResult r = run("imprimitivity", 50);
    bool surfaced = false;
    try {
      const isg::StarAlgebra twin = isg::direct_sum_star(
          isg::StarAlgebra::full_matrix(2), isg::StarAlgebra::full_matrix(2));
      isg::semisimple_blocks(twin, 7, 1e3);
    } catch (const isg::Error& e) {
      surfaced = e.code() == isg::ErrorCode::NumericalDegeneracy;
    }
    verdict(7,
            r.pass && surfaced,
            "block counts agree on pinned fixtures and 50 random "
            "instances; degeneracy is surfaced, not swallowed",
            surfaced ? first_failure(r) : "degeneracy probe stayed silent");
  }

  {
    const isg::SuiteResult r = run("restriction", 100);
    verdict(8,
            r.pass,
            "every random coefficient algebra certified fibered, "
            "100 trials",
            first_failure(r));
  }

  {
    bool pass = false;
    std::string why;
    std::string how;
    const char* bin = std::getenv("ISGTOOL_BIN");
    if (bin != nullptr && *bin != '\0') {
      const std::string base =
          "/tmp/isg_accept_" + std::to_string(static_cast<long>(getpid()));
      const std::string p1 = base + "_1.json";
      const std::string p2 = base + "_2.json";
      const std::string tail =
          " verify --suite sigma --trials 20 --seed 11 --out ";
      const int rc1 =
          std::system(("\"" + std::string(bin) + "\"" + tail + p1).c_str());
      const int rc2 =
          std::system(("\"" + std::string(bin) + "\"" + tail + p2).c_str());
      const std::string a = read_file(p1);
      const std::string b = read_file(p2);
      std::remove(p1.c_str());
      std::remove(p2.c_str());
      pass = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
      how = "two CLI invocations";
      if (!pass) why = "reports differ or the tool failed";
    } else {
      isg::RunConfig cfg;
      cfg.seed = 11;
      cfg.trials = 20;
      const auto r1 = isg::run_many("sigma", cfg);
      const auto r2 = isg::run_many("sigma", cfg);
      std::vector<isg::CheckResult> c1, c2;
      for (const auto& r : r1) c1.insert(c1.end(), r.checks.begin(), r.checks.end());
      for (const auto& r : r2) c2.insert(c2.end(), r.checks.begin(), r.checks.end());
      const std::string a =
          isg::render_report(isg::make_report("determinism", 11, {}, c1));
      const std::string b =
          isg::render_report(isg::make_report("determinism", 11, {}, c2));
      pass = a == b;
      how = "two in-process runs";
      if (!pass) why = "rendered reports differ";
    }
    verdict(9, pass, "byte-identical reports across " + how, why);
  }

  if (g_failed > 0) {
    std::printf("acceptance: %d criterion(s) failed\n", g_failed);
    return 1;
  }
  std::printf("acceptance: all 9 criteria pass\n");
  return 0;
}
