// One PASS/FAIL line per acceptance criterion; exits nonzero if any criterion fails.

#include "bochert/catalog.hpp"
#include "bochert/report.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace bochert;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

const CountCheck *find_check(const TraceReport &r, const std::string &label) {
  for (const auto &c : r.checks)
    if (c.label == label)
      return &c;
  return nullptr;
}

Outcome mathieu_minimal_degrees() {
  Outcome o;
  std::ostringstream d;
  for (const char *label : {"M11", "M12"}) {
    const Group g = load_builtin(label);
    const auto start = Clock::now();
    const auto r = minimal_degree_exhaustive(g);
    const double s = seconds_since(start);
    o.pass = o.pass && r.m == 8 && s < 60;
    d << label << " m=" << r.m << " exhaustive " << fmt_seconds(s) << "; ";
  }
  for (const char *label : {"M23", "M24"}) {
    const Group g = load_builtin(label);
    const auto start = Clock::now();
    const auto r = minimal_degree_backtrack(g);
    const double s = seconds_since(start);
    o.pass = o.pass && r.m == 16 && s < 600;
    d << label << " m=" << r.m << " backtrack " << fmt_seconds(s) << "; ";
  }
  o.detail = d.str();
  return o;
}

std::vector<Group> mathieu_groups() {
  std::vector<Group> gs;
  for (const char *label : {"M11", "M12", "M23", "M24"})
    gs.push_back(load_builtin(label));
  return gs;
}

Outcome bound_table(const std::vector<Group> &groups) {
  Outcome o;
  std::ostringstream d;
  const int expected[] = {6, 6, 10, 11};
  const auto rows = mathieu_bound_table(groups);
  o.pass = rows.size() == 4;
  for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
    const Integer formula = std::max(Integer(6), ceil(Rational(Integer(rows[i].n) - 3, 2)));
    o.pass = o.pass && rows[i].bound == expected[i] && rows[i].bound == formula;
    d << rows[i].label << "=" << rows[i].bound << " ";
  }
  o.detail = d.str();
  return o;
}

Outcome transitivity(const std::vector<Group> &groups) {
  Outcome o;
  std::ostringstream d;
  const std::size_t expected[] = {4, 5, 4, 5};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto t = groups[i].transitivity_degree();
    o.pass = o.pass && t == expected[i];
    d << groups[i].label() << " t=" << t << " ";
  }
  o.detail = d.str();
  return o;
}

Outcome orbit_count_exactness() {
  Outcome o;
  std::ostringstream d;
  SuiteOptions opts;
  opts.samples = 1000;
  const auto start = Clock::now();
  for (const char *label : {"S6", "A7", "PGL2_7", "M11", "M12"}) {
    const Group g = load_builtin(label);
    std::size_t failures = 0, applicable = 0;
    for (const auto &s : orbit_count_suites(g, opts)) {
      if (!s.applicable)
        continue;
      ++applicable;
      for (const auto &c : s.checks)
        if (!c.pass)
          failures += c.relation == Relation::equal && c.formula == 0
                          ? static_cast<std::size_t>(c.observed)
                          : 1;
    }
    o.pass = o.pass && failures == 0 && applicable > 0;
    d << label << " failures=" << failures << "; ";
  }
  const double s = seconds_since(start);
  o.pass = o.pass && s < 300;
  d << "total " << fmt_seconds(s);
  o.detail = d.str();
  return o;
}

Outcome commutator_laws() {
  Outcome o;
  std::ostringstream d;
  SuiteOptions opts;
  opts.samples = 10000;
  const auto start = Clock::now();
  for (const char *label : {"S8", "A9"}) {
    const Suite s = commutator_law_suite(load_builtin(label), opts);
    std::size_t failures = 0;
    for (const auto &c : s.checks)
      failures += static_cast<std::size_t>(c.observed);
    o.pass = o.pass && s.passed() && failures == 0;
    d << label << " failures=" << failures << "; ";
  }
  const double s = seconds_since(start);
  o.pass = o.pass && s < 30;
  d << "total " << fmt_seconds(s);
  o.detail = d.str();
  return o;
}

Outcome trace_equalities() {
  Outcome o;
  std::ostringstream d;
  for (const char *label : {"PGL2_7", "M11", "M12"}) {
    const Group g = load_builtin(label);
    const auto t31 = trace_doubly_transitive_bound(g);
    const auto t32 = trace_triply_transitive_bound(g);
    const auto *e31 = find_check(t31, "|F| = |E|(n-m)/(n-1)");
    const auto *e32 = find_check(t32, "|calF| = |E|(1 + (m-1)(m-2)/(n-2))");
    const bool ok = e31 && e31->pass && e32 && e32->pass;
    o.pass = o.pass && ok;
    d << label << (ok ? " eqs ok; " : " eqs FAILED; ");
  }
  {
    const auto t33 = trace_quadruply_transitive_bound(load_builtin("M11"));
    const auto *sq = find_check(t33, "squared form: max(0, 2MN - (3(M+1)^2 - M))^2 <= p(M)");
    const auto *id = find_check(t33, "(3(M+1)^2 - M)^2 - 8M^2(M+1)^2 = p(M)");
    const bool ok = sq && sq->pass && sq->formula == 3409 && id && id->pass && t33.m == 8;
    o.pass = o.pass && ok;
    d << "M11 squared form p(5)=" << (sq ? to_string(sq->formula) : "?") << "; ";
  }
  std::size_t conclusions = 0, failed = 0;
  for (const auto &g : std::vector<Group>{load_builtin("PGL2_7"), load_builtin("M11"),
                                          load_builtin("M12"), load_builtin("M23"),
                                          load_builtin("M24")}) {
    const auto jordan = check_jordan_bound(g);
    std::vector<TraceReport> traces{to_trace_report(jordan), trace_doubly_transitive_bound(g),
                                    trace_triply_transitive_bound(g),
                                    trace_quadruply_transitive_bound(g)};
    for (const auto &t : traces) {
      if (t.applicable && t.conclusion_applicable) {
        ++conclusions;
        if (!t.conclusion_holds || !all_pass(t.checks)) {
          ++failed;
          d << g.label() << " " << t.theorem << " failed; ";
        }
      }
    }
    if (g.label() == "M12") {
      const bool tight = jordan.passed() && jordan.m == 2 * jordan.t - 2;
      o.pass = o.pass && tight;
      d << "M12 Jordan " << jordan.m << " = 2*" << jordan.t << "-2; ";
    }
  }
  o.pass = o.pass && failed == 0;
  d << conclusions << " applicable conclusions hold";
  o.detail = d.str();
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t groups = 0;
  std::ostringstream d;
  for (const auto &label : catalog_labels(Integer(100000))) {
    const Group g = load_builtin(label);
    if (g.order() == 1)
      continue;
    ++groups;
    const auto ex = minimal_degree_exhaustive(g);
    const auto bt = minimal_degree_backtrack(g);
    if (ex.m != bt.m) {
      o.pass = false;
      d << label << " exhaustive=" << ex.m << " backtrack=" << bt.m << "; ";
    }
  }
  d << groups << " groups compared";
  o.detail = d.str();
  return o;
}

Outcome alt_exclusion() {
  Outcome o;
  std::size_t checked = 0;
  std::ostringstream bad, good;
  for (const auto &label : catalog_labels(Integer(244823040))) {
    const Group g = load_builtin(label);
    if (g.contains_alternating())
      continue;
    ++checked;
    const auto m = min_degree(g).m;
    if (m < 4) {
      o.pass = false;
      bad << label << " has m=" << m << " with t=" << g.transitivity_degree() << "; ";
    }
  }
  o.detail = std::to_string(checked) + " groups without Alt checked; " + bad.str();
  return o;
}

Outcome determinism(const std::string &cli) {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "bochert_acceptance_jobs1.json", b = dir / "bochert_acceptance_jobs8.json";
  auto run = [&](unsigned jobs, const std::filesystem::path &out) {
    const std::string cmd = "\"" + cli + "\" verify catalog:M11 all --seed 7 --jobs " +
                            std::to_string(jobs) + " --json \"" + out.string() + "\" > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  const int ra = run(1, a), rb = run(8, b);
  auto slurp = [](const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string ja = slurp(a), jb = slurp(b);
  o.pass = ra == 0 && rb == 0 && !ja.empty() && ja == jb;
  o.detail = "exit codes " + std::to_string(ra) + "/" + std::to_string(rb) + ", " +
             std::to_string(ja.size()) + " bytes, " + (ja == jb ? "identical" : "different");
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  return o;
}

} // namespace

int main(int argc, char **argv) {
  std::string cli = BOCHERT_CLI_PATH;
  if (argc > 1)
    cli = argv[1];

  const auto mathieu = mathieu_groups();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Mathieu minimal degrees 8, 8, 16, 16", mathieu_minimal_degrees},
      {"Mathieu bound table 6, 6, 10, 11", [&] { return bound_table(mathieu); }},
      {"Mathieu transitivity degrees 4, 5, 4, 5", [&] { return transitivity(mathieu); }},
      {"conjugate-orbit counts exact on S6, A7, PGL2_7, M11, M12", orbit_count_exactness},
      {"commutator laws on 10^4 pairs in S8 and A9", commutator_laws},
      {"trace equalities and applicable conclusions", trace_equalities},
      {"backtrack equals exhaustive on catalog groups of order <= 1e5", oracle_equivalence},
      {"groups without Alt have m >= 4", alt_exclusion},
      {"JSON byte-identical across --jobs 1 and 8", [&] { return determinism(cli); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " ("
              << fmt_seconds(seconds_since(start)) << "): " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
