#include "bochert/catalog.hpp"
#include "bochert/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace bochert;

namespace {

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_cap = 3 };

struct Common {
  std::string json_path;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t cap = default_exhaustive_cap;
  bool timing = false;
  bool verbose = false;

  SuiteOptions suite_options() const { return {samples, seed, jobs, cap}; }
};

void add_common(CLI::App *cmd, Common &c) {
  cmd->add_option("--json", c.json_path, "Write the JSON report to this path ('-' for stdout)");
  cmd->add_option("--samples", c.samples, "Samples per suite")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  cmd->add_option("--cap", c.cap, "Largest order handled by exhaustive enumeration");
  cmd->add_flag("--timing", c.timing, "Record elapsed time in the JSON report");
  cmd->add_flag("-v,--verbose", c.verbose, "Print every check");
}

void write_json(const std::string &path, const std::string &text) {
  if (path.empty())
    return;
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write " + path);
  out << text;
}

int emit(Report &r, const Common &c, std::chrono::steady_clock::time_point start) {
  if (c.timing)
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  if (c.json_path != "-")
    std::cout << to_text(r, c.verbose);
  for (const auto &s : r.suites)
    for (const auto &[k, v] : s.details)
      if (k == "construction degenerate")
        std::cerr << "warning: " << s.name << ": construction degenerate: " << v << "\n";
  write_json(c.json_path, to_json(r));
  return r.passed() ? exit_pass : exit_fail;
}

std::string theorem_key(const std::string &name) {
  if (name == "2.2" || name == "jordan")
    return "jordan";
  if (name == "3.1" || name == "double" || name == "doubly-transitive")
    return "double";
  if (name == "3.2" || name == "triple" || name == "triply-transitive")
    return "triple";
  if (name == "3.3" || name == "quadruple" || name == "quadruply-transitive")
    return "quadruple";
  throw CLI::ValidationError("theorem", "unknown theorem '" + name + "'");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Minimal-degree checks for permutation groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version);

  Common common;
  std::string spec, suite = "all", theorem, method = "auto";
  std::optional<std::uint64_t> choice_seed;

  auto *info = app.add_subcommand("info", "Degree, order, transitivity and minimal degree");
  info->add_option("group", spec, "catalog:<label> or file:<path>")->required();
  add_common(info, common);

  auto *verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("group", spec, "catalog:<label> or file:<path>")->required();
  verify->add_option("suite", suite, "laws, counts, traces or all")
      ->check(CLI::IsMember({"laws", "counts", "traces", "all"}));
  add_common(verify, common);

  auto *trace = app.add_subcommand("trace", "Replay one bound's construction on a group");
  trace->add_option("group", spec, "catalog:<label> or file:<path>")->required();
  trace->add_option("theorem", theorem, "jordan (2.2), double (3.1), triple (3.2), quadruple (3.3)")
      ->required();
  trace->add_option("--choice-seed", choice_seed, "Pick witnesses at random with this seed");
  add_common(trace, common);

  auto *table = app.add_subcommand("table", "Minimal degrees and bounds for the Mathieu groups");
  add_common(table, common);

  auto *mindeg = app.add_subcommand("mindeg", "Minimal degree with a witness");
  mindeg->add_option("group", spec, "catalog:<label> or file:<path>")->required();
  mindeg->add_option("--method", method, "auto, exhaustive or backtrack")
      ->check(CLI::IsMember({"auto", "exhaustive", "backtrack"}));
  add_common(mindeg, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_pass : exit_usage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const SuiteOptions opts = common.suite_options();

    if (*table) {
      std::vector<Group> groups;
      for (const char *label : {"M11", "M12", "M23", "M24"})
        groups.push_back(load_builtin(label));
      TraceOptions to;
      to.exhaustive_cap = common.cap;
      to.jobs = common.jobs;
      auto rows = mathieu_bound_table(groups, to);
      if (common.json_path != "-")
        std::cout << to_text(rows);
      write_json(common.json_path, to_json(rows));
      bool ok = std::all_of(rows.begin(), rows.end(), [](const MathieuRow &r) { return r.matches; });
      return ok ? exit_pass : exit_fail;
    }

    Group g = resolve_group_spec(spec);

    if (*info) {
      Report r = make_report(g, opts);
      if (common.json_path != "-") {
        std::cout << "contains Alt: " << (g.contains_alternating() ? "yes" : "no") << "\n";
        if (r.min_degree)
          std::cout << "witness: " << format_cycles(r.min_degree->witness) << "\n";
      }
      return emit(r, common, start);
    }

    if (*mindeg) {
      Report r = make_report(g, opts, false);
      if (g.order() == 1)
        throw PreconditionError("the trivial group has no minimal degree");
      const MinDegMethod m = method == "auto" ? MinDegMethod::automatic : parse_min_deg_method(method);
      MinDegResult res = m == MinDegMethod::exhaustive
                             ? minimal_degree_exhaustive(g, common.cap, common.jobs)
                         : m == MinDegMethod::backtrack ? minimal_degree_backtrack(g, common.jobs)
                                                        : min_degree(g, m, common.cap, common.jobs);
      r.min_degree = res;
      Suite s;
      s.name = "mindeg";
      s.details = {{"witness", format_cycles(res.witness)},
                   {"method", to_string(res.method)},
                   {"elements visited", std::to_string(res.elements_visited)},
                   {"nodes pruned", std::to_string(res.nodes_pruned)}};
      r.suites.push_back(std::move(s));
      if (common.json_path != "-")
        std::cout << "m = " << res.m << "\nwitness: " << format_cycles(res.witness)
                  << "\nmethod: " << to_string(res.method) << "\nvisited: " << res.elements_visited
                  << "\npruned: " << res.nodes_pruned << "\n";
      if (common.timing)
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      write_json(common.json_path, to_json(r));
      return exit_pass;
    }

    if (*verify) {
      Report r = make_report(g, opts);
      if (suite == "laws" || suite == "all")
        r.suites.push_back(commutator_law_suite(g, opts));
      if (suite == "counts" || suite == "all")
        for (auto &s : orbit_count_suites(g, opts))
          r.suites.push_back(std::move(s));
      if (suite == "traces" || suite == "all")
        for (auto &s : trace_suites(g, opts))
          r.suites.push_back(std::move(s));
      return emit(r, common, start);
    }

    if (*trace) {
      TraceOptions to;
      to.exhaustive_cap = common.cap;
      to.jobs = common.jobs;
      to.choice_seed = choice_seed;
      const std::string key = theorem_key(theorem);
      Report r = make_report(g, opts);
      TraceReport tr = key == "jordan"   ? to_trace_report(check_jordan_bound(g, to))
                       : key == "double" ? trace_doubly_transitive_bound(g, to)
                       : key == "triple" ? trace_triply_transitive_bound(g, to)
                                         : trace_quadruply_transitive_bound(g, to);
      r.suites.push_back(trace_suite(tr));
      common.verbose = true;
      return emit(r, common, start);
    }
  } catch (const CapExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_cap;
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
