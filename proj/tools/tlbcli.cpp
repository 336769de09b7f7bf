#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tlb/cyclic.hpp"
#include "tlb/invariants.hpp"
#include "tlb/suites.hpp"

using json = nlohmann::ordered_json;
using namespace tlb;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::set<int> residues(const std::vector<int>& ks, int d, const std::string& flag) {
  std::set<int> out;
  for (int k : ks) {
    if (k < 0 || k >= d) throw UsageError(flag + ": residue " + std::to_string(k) + " out of range for d = " + std::to_string(d));
    out.insert(k);
  }
  return out;
}

std::vector<std::string> strs(const std::vector<Scalar>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

void print_lines(const std::vector<CheckLine>& lines) {
  for (const auto& l : lines) {
    std::cout << (l.pass ? "PASS " : "FAIL ") << (l.informational ? "(info) " : "") << l.label;
    if (!l.detail.empty()) std::cout << ": " << l.detail;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and Markov traces for framized Hecke and Temperley-Lieb algebras of type B"};
  app.set_config("--config");
  app.require_subcommand(1);
  bool as_json = false;
  std::string output = "text";
  app.fallthrough();
  app.add_flag("--json", as_json, "same as --output json");
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));

  int n = 1, d = 1;
  uint64_t seed = 1;
  std::string kind_text, braid, word, profile_text, suite;
  std::vector<int> S{0}, y3, y4;
  std::string z_text;
  std::vector<std::string> x_text, y_text;
  int branch = 0;
  bool exhaustive = false;

  auto* inv = app.add_subcommand("invariant", "evaluate an invariant of a braid word");
  inv->add_option("--kind", kind_text, "pb, vb, xb or rhob")->required();
  inv->add_option("--n", n, "number of strands")->check(CLI::Range(1, 8));
  inv->add_option("--d", d, "framing modulus")->check(CLI::Range(1, 8));
  inv->add_option("--braid", braid, "braid word, e.g. \"s1 r1 s1^-1 t1^1\"")->required();
  inv->add_option("--S", S, "support S (xb, rhob)")->delimiter(',');
  inv->add_option("--y3", y3, "residues of S with yhat = -duz(u^2+1) (rhob)")->delimiter(',');
  inv->add_option("--y4", y4, "residues of S with yhat = +duz(u^2+1) (rhob)")->delimiter(',');

  auto* tr = app.add_subcommand("trace", "trace of a word, symbolic unless parameters are bound");
  tr->add_option("--n", n, "number of strands")->check(CLI::Range(1, 8));
  tr->add_option("--d", d, "framing modulus")->check(CLI::Range(1, 8));
  tr->add_option("--word", word, "word in the braid grammar")->required();
  tr->add_option("--z", z_text, "value of z");
  tr->add_option("--x", x_text, "values of x_1..x_{d-1}")->delimiter(',');
  tr->add_option("--y", y_text, "values of y_0..y_{d-1}")->delimiter(',');
  tr->add_option("--profile", profile_text, "bind the solution of this support profile");
  tr->add_option("--branch", branch, "branch of the solution (1-4)")->check(CLI::Range(1, 4));

  auto* so = app.add_subcommand("solve", "trace parameters that factor through the framed quotient");
  so->add_option("--d", d, "framing modulus")->check(CLI::Range(1, 8));
  so->add_option("--profile", profile_text, "one profile, e.g. \"sup1=0,1;sup2=;y1=1;y2=;y3=;y4=\"");
  so->add_option("--branch", branch, "one branch (1-4)")->check(CLI::Range(1, 4));
  so->add_flag("--exhaustive", exhaustive, "also check annihilation on every basis monomial of Y_{d,3}");

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(kSuiteNames));
  ve->add_option("--d", d, "framing modulus")->check(CLI::Range(1, 3));
  ve->add_option("--seed", seed, "seed for the randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  as_json = as_json || output == "json";

  try {
    if (inv->parsed()) {
      InvariantSpec spec;
      try {
        spec.kind = parse_kind(kind_text);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      spec.d = d;
      spec.S = residues(S, d, "--S");
      spec.y3 = residues(y3, d, "--y3");
      spec.y4 = residues(y4, d, "--y4");
      if (auto err = spec.validate(); !err.empty()) throw UsageError(err);
      BraidWord w = parse_braid(braid, n, d);
      Scalar value = evaluate(w, spec);
      if (as_json)
        std::cout << json{{"invariant", kind_name(spec.kind)}, {"n", n}, {"d", d}, {"braid", w.str()}, {"value", value.str()}}.dump(2)
                  << "\n";
      else
        std::cout << value.str() << "\n";
      return 0;
    }

    if (tr->parsed()) {
      BraidWord w = parse_braid(word, n, d);
      TraceParams p = TraceParams::symbolic(d);
      if (!profile_text.empty()) {
        SupportProfile prof = SupportProfile::parse(profile_text, d);
        if (auto err = prof.validate(); !err.empty()) throw UsageError("--profile: " + err);
        if (branch == 0) branch = prof.branches().front();
        p = build_solution(prof, branch).params();
      }
      if (!z_text.empty()) p.z = parse_scalar(z_text);
      if (!x_text.empty()) {
        if (static_cast<int>(x_text.size()) != d - 1) throw UsageError("--x takes d-1 values");
        for (int k = 1; k < d; ++k) p.x[k] = parse_scalar(x_text[k - 1]);
      }
      if (!y_text.empty()) {
        if (static_cast<int>(y_text.size()) != d) throw UsageError("--y takes d values");
        for (int k = 0; k < d; ++k) p.y[k] = parse_scalar(y_text[k]);
      }
      Scalar value = trace_of_word(w.letters, n, d, p);
      if (as_json)
        std::cout << json{{"trace", w.str()}, {"n", n}, {"d", d}, {"value", value.str()}}.dump(2) << "\n";
      else
        std::cout << value.str() << "\n";
      return 0;
    }

    if (so->parsed()) {
      std::vector<SupportProfile> profiles;
      if (!profile_text.empty()) {
        SupportProfile prof = SupportProfile::parse(profile_text, d);
        if (auto err = prof.validate(); !err.empty()) throw UsageError("--profile: " + err);
        profiles.push_back(prof);
      } else {
        profiles = enumerate_profiles(d);
      }
      std::unique_ptr<IdealTraceTable> table;
      if (exhaustive) table = std::make_unique<IdealTraceTable>(QuotientKind::FTLB, 3, d);
      json sols = json::array();
      bool ok = true;
      for (const auto& prof : profiles) {
        std::vector<int> brs = prof.branches();
        if (branch != 0) {
          if (std::find(brs.begin(), brs.end(), branch) == brs.end())
            throw UsageError("branch " + std::to_string(branch) + " does not apply to " + prof.str());
          brs = {branch};
        }
        for (int br : brs) {
          Solution s = build_solution(prof, br);
          bool certified = verify_functional_system(s.x, s.y, s.z).ok();
          if (table) certified = certified && table->check(s.params()).ok;
          ok = ok && certified;
          json j{{"profile", prof.str()}, {"branch", br}, {"z", s.z.str()}, {"x", strs(s.x.values())},
                 {"y", strs(s.y.values())}, {"certified", certified}};
          if (as_json) {
            sols.push_back(j);
          } else {
            std::cout << prof.str() << " branch " << br << (certified ? "" : " NOT CERTIFIED") << "\n";
            std::cout << "  z = " << s.z.str() << "\n";
            for (int k = 0; k < d; ++k) std::cout << "  x_" << k << " = " << s.x(k).str() << "\n";
            for (int k = 0; k < d; ++k) std::cout << "  y_" << k << " = " << s.y(k).str() << "\n";
          }
        }
      }
      if (as_json) std::cout << json{{"d", d}, {"solutions", sols}}.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (ve->parsed()) {
      auto lines = run_suite(suite, d, seed);
      bool ok = all_pass(lines);
      if (as_json) {
        json checks = json::array();
        for (const auto& l : lines)
          checks.push_back({{"label", l.label}, {"pass", l.pass}, {"informational", l.informational}, {"detail", l.detail}});
        std::cout << json{{"suite", suite}, {"d", d}, {"seed", seed}, {"pass", ok}, {"checks", checks}}.dump(2) << "\n";
      } else {
        print_lines(lines);
        std::cout << (ok ? "suite " + suite + " passed" : "suite " + suite + " FAILED") << "\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
