#include "bochert/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace bochert {

namespace {

/// Runs f(0..count-1) on up to `jobs` threads; rethrows the first exception.
template <class F> void parallel_for(std::size_t count, unsigned jobs, F &&f) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto &th : pool)
    th.join();
  if (error)
    std::rethrow_exception(error);
}

void sort_checks(std::vector<CountCheck> &checks) {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CountCheck &a, const CountCheck &b) { return a.label < b.label; });
}

Permutation random_nonidentity(const Group &g, std::mt19937_64 &rng) {
  for (;;) {
    Permutation p = g.chain().random_element(rng);
    if (!p.is_identity())
      return p;
  }
}

/// Tallies failures of same-labelled checks across samples.
struct Tally {
  std::map<std::string, std::size_t> failures;
  std::map<std::string, std::size_t> evaluated;
  std::map<std::string, std::string> first_failure;

  void add(const CountCheck &c, const std::string &context) {
    ++evaluated[c.label];
    if (!c.pass) {
      if (failures[c.label]++ == 0)
        first_failure[c.label] = context + ": observed " + to_string(c.observed) + " " +
                                 to_string(c.relation) + " " + to_string(c.formula);
    } else {
      failures.try_emplace(c.label, 0);
    }
  }

  void emit(Suite &s, const std::string &suffix) const {
    for (const auto &[label, count] : failures) {
      s.checks.push_back(make_check(label + suffix, Integer(count), Relation::equal, Rational(0)));
      s.details.emplace_back(label + " evaluated", std::to_string(evaluated.at(label)));
      if (auto it = first_failure.find(label); it != first_failure.end())
        s.details.emplace_back(label + " first failure", it->second);
    }
  }
};

} // namespace

// ------------------------------------------------------------ laws

Suite commutator_law_suite(const Group &g, const SuiteOptions &opts) {
  Suite s;
  s.name = "laws";
  std::mt19937_64 rng(opts.seed);
  std::vector<std::pair<Permutation, Permutation>> pairs;
  pairs.reserve(opts.samples);
  for (std::size_t i = 0; i < opts.samples; ++i) {
    Permutation u = g.chain().random_element(rng);
    Permutation v = g.chain().random_element(rng);
    pairs.emplace_back(std::move(u), std::move(v));
  }

  std::vector<CommutatorLawReport> laws(pairs.size());
  std::vector<CountCheck> two_support(pairs.size());
  parallel_for(pairs.size(), opts.jobs, [&](std::size_t i) {
    const auto &[u, v] = pairs[i];
    laws[i] = check_commutator_laws(u, v);
    const PointSet supp_u = support(u);
    const PointSet phi = fixed_points(commutator(u, v)) & supp_u;
    const PointSet psi = support(conjugate(u, v.inverse())) & supp_u;
    two_support[i] = check_two_support_bound(u, v, phi, psi);
  });

  Tally tally;
  std::size_t forward = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string ctx = "u=" + format_cycles(pairs[i].first) + " v=" + format_cycles(pairs[i].second);
    for (const auto &c : laws[i].checks)
      tally.add(c, ctx);
    tally.add(two_support[i], ctx);
    forward += laws[i].forward_image_containment;
  }
  tally.emit(s, ": failures");
  sort_checks(s.checks);
  s.details.emplace_back("samples", std::to_string(pairs.size()));
  s.details.emplace_back("forward-image containment held",
                         std::to_string(forward) + "/" + std::to_string(pairs.size()));
  return s;
}

// ------------------------------------------------------------ counts

namespace {

struct CountSample {
  Permutation u;
  PointSet delta;
  Point gamma = 0;
  std::optional<Point> other;
};

FiniteAction restricted_point_action(std::span<const Permutation> gens, const PointSet &domain) {
  std::vector<std::int64_t> where(domain.degree(), -1);
  std::size_t k = 0;
  for (Point p : domain)
    where[p] = static_cast<std::int64_t>(k++);
  FiniteAction a;
  a.size = domain.size();
  for (const auto &g : gens) {
    std::vector<Point> img(a.size);
    for (Point p : domain) {
      if (where[g(p)] < 0)
        throw PreconditionError("domain is not invariant under the generators");
      img[where[p]] = static_cast<Point>(where[g(p)]);
    }
    a.generators.emplace_back(std::move(img));
  }
  return a;
}

std::vector<CountCheck> product_action_checks(const Group &stab, const ConjugateOrbit &e,
                                              const PointSet &delta, std::size_t t,
                                              const std::string &prefix) {
  std::vector<CountCheck> out;
  const auto &gens = stab.generators().generators;
  const std::size_t n = delta.degree();
  PointSet rest(n);
  for (Point p = 0; p < n; ++p)
    if (!delta.contains(p))
      rest.insert(p);

  FiniteAction left = conjugation_action(gens, e);
  const bool transitive = e.elements.size() <= 1 ||
                          orbit(left.generators, left.size, 0).size() == left.size;
  out.push_back(make_check(prefix + "conjugation action on E is transitive",
                           Integer(transitive ? 1 : 0), Relation::equal, Rational(1)));
  if (!transitive || gens.empty())
    return out;

  FiniteAction points = restricted_point_action(gens, rest);
  std::vector<std::size_t> rest_index(n, 0);
  {
    std::size_t k = 0;
    for (Point p : rest)
      rest_index[p] = k++;
  }
  std::vector<std::pair<std::size_t, std::size_t>> moves;
  for (std::size_t i = 0; i < e.elements.size(); ++i)
    for (Point p : rest)
      if (e.elements[i](p) != p)
        moves.emplace_back(i, rest_index[p]);
  for (auto &c : check_product_action(left, points, moves)) {
    c.label = prefix + "E x points, x moves g: " + c.label;
    out.push_back(std::move(c));
  }

  if (t >= delta.size() + 2) {
    PairAction pa = ordered_pair_action(gens, n, rest);
    std::vector<std::pair<std::size_t, std::size_t>> maps;
    for (std::size_t i = 0; i < e.elements.size(); ++i)
      for (Point p : rest) {
        const Point q = e.elements[i](p);
        if (q != p && !delta.contains(q))
          maps.emplace_back(i, static_cast<std::size_t>(pa.index_of(p, q)));
      }
    for (auto &c : check_product_action(left, pa.action, maps)) {
      c.label = prefix + "E x pairs, g^x = d: " + c.label;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::string sample_context(const CountSample &s) {
  std::string ctx = "u=" + format_cycles(s.u) + " D=" + s.delta.to_string() +
                    " g=" + std::to_string(s.gamma + 1);
  if (s.other)
    ctx += " d=" + std::to_string(*s.other + 1);
  return ctx;
}

} // namespace

std::vector<Suite> orbit_count_suites(const Group &g, const SuiteOptions &opts) {
  const std::size_t n = g.degree(), t = g.transitivity_degree();
  std::vector<Suite> suites;
  for (OrbitCountClause c : all_orbit_count_clauses) {
    Suite s;
    s.name = "counts/" + to_string(c);
    suites.push_back(std::move(s));
  }
  Suite product;
  product.name = "counts/product-action";

  if (t < 2 || g.order() == 1) {
    for (auto &s : suites) {
      s.applicable = false;
      s.details.emplace_back("reason", "needs t >= 2, group has t = " + std::to_string(t));
    }
    product.applicable = false;
    product.details.emplace_back("reason", "needs t >= 2, group has t = " + std::to_string(t));
    suites.push_back(std::move(product));
    return suites;
  }

  std::mt19937_64 rng(opts.seed);
  std::vector<CountSample> samples;
  samples.reserve(opts.samples);
  for (std::size_t i = 0; i < opts.samples; ++i) {
    CountSample s;
    s.u = random_nonidentity(g, rng);
    const PointSet supp_u = support(s.u);
    std::vector<Point> supp(supp_u.begin(), supp_u.end());
    const std::size_t kmax = std::min(t - 1, supp.size());
    const std::size_t k = uniform_below(rng, kmax + 1);
    for (std::size_t j = 0; j < k; ++j)
      std::swap(supp[j], supp[j + uniform_below(rng, supp.size() - j)]);
    s.delta = PointSet(n, std::vector<Point>(supp.begin(), supp.begin() + k));
    std::vector<Point> outside;
    for (Point p = 0; p < n; ++p)
      if (!s.delta.contains(p))
        outside.push_back(p);
    const std::size_t gi = uniform_below(rng, outside.size());
    s.gamma = outside[gi];
    if (outside.size() >= 2) {
      std::size_t di = uniform_below(rng, outside.size() - 1);
      if (di >= gi)
        ++di;
      s.other = outside[di];
    }
    samples.push_back(std::move(s));
  }

  std::map<std::vector<Point>, Group> stabilizers;
  for (const auto &s : samples) {
    std::vector<Point> key(s.delta.begin(), s.delta.end());
    if (!stabilizers.contains(key))
      stabilizers.emplace(key, pointwise_stabilizer(g, s.delta));
  }

  constexpr std::size_t product_instances = 3;
  constexpr std::size_t product_orbit_limit = 5000;
  std::vector<OrbitCountReport> reports(samples.size());
  std::vector<std::vector<CountCheck>> product_checks(samples.size());
  std::vector<std::size_t> orbit_sizes(samples.size());
  parallel_for(samples.size(), opts.jobs, [&](std::size_t i) {
    const auto &s = samples[i];
    const Group &stab = stabilizers.at(std::vector<Point>(s.delta.begin(), s.delta.end()));
    ConjugateOrbit e = conjugate_orbit(stab, s.u, default_orbit_cap);
    e.fixed_set = s.delta;
    const OrbitCountProbe probe{s.gamma, s.other};
    reports[i] = check_conjugate_orbit_counts(e, n, s.delta, std::span(&probe, 1), t);
    orbit_sizes[i] = e.elements.size();
    if (i < product_instances && e.elements.size() <= product_orbit_limit)
      product_checks[i] = product_action_checks(stab, e, s.delta, t,
                                                "sample " + std::to_string(i) + ": ");
  });

  std::map<std::string, Tally> tallies;
  std::map<std::string, std::size_t> non_integral;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::string ctx = sample_context(samples[i]);
    for (const auto &c : reports[i].checks) {
      // Labels are "<clause> |D|=k g=.. d=..": aggregate per clause and |D|.
      const std::string clause = c.label.substr(0, c.label.find(' '));
      const auto size_end = c.label.find(' ', c.label.find("|D|="));
      const std::string key = clause + " " + c.label.substr(clause.size() + 1, size_end - clause.size() - 1);
      CountCheck agg = c;
      agg.label = key + " count = formula";
      tallies[clause].add(agg, ctx);
      if (!is_integral(c.formula))
        ++non_integral[clause];
    }
  }
  for (std::size_t ci = 0; ci < std::size(all_orbit_count_clauses); ++ci) {
    Suite &s = suites[ci];
    const OrbitCountClause clause = all_orbit_count_clauses[ci];
    const std::string name = to_string(clause);
    bool any = false;
    for (std::size_t k = 0; k + 1 <= t && k <= n; ++k)
      any = any || clause_applicable(clause, t, k);
    auto it = tallies.find(name);
    if (it == tallies.end()) {
      s.applicable = false;
      s.details.emplace_back("reason", any ? "no sample met the clause's |D| requirement"
                                           : "transitivity degree too small for this clause");
      continue;
    }
    it->second.emit(s, ": failures");
    s.checks.push_back(make_check(name + " non-integral formula values",
                                  Integer(non_integral[name]), Relation::equal, Rational(0)));
    sort_checks(s.checks);
  }

  std::size_t product_instances_used = 0;
  for (auto &pc : product_checks) {
    product_instances_used += !pc.empty();
    for (auto &c : pc)
      product.checks.push_back(std::move(c));
  }
  product.applicable = product_instances_used > 0;
  if (!product.applicable)
    product.details.emplace_back("reason", "no small instance among the first samples");
  sort_checks(product.checks);
  suites.push_back(std::move(product));

  std::size_t max_orbit = 0;
  for (auto sz : orbit_sizes)
    max_orbit = std::max(max_orbit, sz);
  suites.front().details.emplace_back("samples", std::to_string(samples.size()));
  suites.front().details.emplace_back("largest orbit", std::to_string(max_orbit));
  return suites;
}

// ------------------------------------------------------------ traces

Suite trace_suite(const TraceReport &tr) {
  Suite s;
  s.name = "trace/" + tr.theorem;
  s.applicable = tr.applicable;
  s.checks = tr.checks;
  sort_checks(s.checks);
  if (!tr.applicable)
    s.details.emplace_back("reason", tr.reason);
  if (tr.degenerate)
    s.details.emplace_back("construction degenerate", *tr.degenerate);
  for (const auto &[k, v] : tr.witnesses)
    s.details.emplace_back(k, v);
  for (const auto &[k, v] : tr.sizes)
    s.details.emplace_back(k, to_string(v));
  for (const auto &[k, v] : tr.quantities)
    s.details.emplace_back(k, to_string(v));
  for (const auto &note : tr.notes)
    s.details.emplace_back("note", note);
  if (tr.applicable)
    s.details.emplace_back("conclusion", !tr.conclusion_applicable ? "gated off"
                                         : tr.conclusion_holds      ? "holds"
                                                                    : "fails");
  return s;
}

std::vector<Suite> trace_suites(const Group &g, const SuiteOptions &opts) {
  TraceOptions to;
  to.exhaustive_cap = opts.cap;
  to.jobs = opts.jobs;
  std::vector<Suite> out;
  out.push_back(trace_suite(to_trace_report(check_jordan_bound(g, to))));
  out.push_back(trace_suite(trace_doubly_transitive_bound(g, to)));
  out.push_back(trace_suite(trace_triply_transitive_bound(g, to)));
  out.push_back(trace_suite(trace_quadruply_transitive_bound(g, to)));
  return out;
}

// ------------------------------------------------------------ report

bool Report::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const Suite &s) { return s.passed(); });
}

Report make_report(const Group &g, const SuiteOptions &opts, bool with_min_degree) {
  Report r;
  r.group = g.label();
  r.n = g.degree();
  r.order = g.order();
  r.t = g.transitivity_degree();
  if (with_min_degree && g.order() > 1)
    r.min_degree = min_degree(g, MinDegMethod::automatic, opts.cap, opts.jobs);
  r.seed = opts.seed;
  return r;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson check_json(const CountCheck &c) {
  return ojson{{"label", c.label},
               {"relation", to_string(c.relation)},
               {"observed", to_string(c.observed)},
               {"formula", to_string(c.formula)},
               {"pass", c.pass}};
}

} // namespace

std::string to_json(const Report &r) {
  ojson j;
  j["schema"] = report_schema;
  j["group"] = r.group;
  j["n"] = r.n;
  j["order"] = to_string(r.order);
  j["t"] = r.t;
  if (r.min_degree) {
    j["m"] = r.min_degree->m;
    j["m_method"] = to_string(r.min_degree->method);
    j["m_witness"] = format_cycles(r.min_degree->witness);
  } else {
    j["m"] = nullptr;
  }
  j["suites"] = ojson::array();
  for (const auto &s : r.suites) {
    ojson sj;
    sj["name"] = s.name;
    sj["checks"] = ojson::array();
    for (const auto &c : s.checks)
      sj["checks"].push_back(check_json(c));
    sj["applicable"] = s.applicable;
    if (!s.details.empty()) {
      ojson d = ojson::array();
      for (const auto &[k, v] : s.details)
        d.push_back(ojson::array({k, v}));
      sj["details"] = d;
    }
    j["suites"].push_back(sj);
  }
  j["pass"] = r.passed();
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  j["version"] = library_version;
  return j.dump(2) + "\n";
}

std::string to_json(const std::vector<MathieuRow> &rows) {
  ojson j;
  j["schema"] = report_schema;
  j["table"] = ojson::array();
  for (const auto &row : rows)
    j["table"].push_back(ojson{{"group", row.label},
                               {"n", row.n},
                               {"t", row.t},
                               {"m", row.m},
                               {"bound", to_string(row.bound)},
                               {"expected_m", row.expected_m},
                               {"expected_bound", to_string(row.expected_bound)},
                               {"matches", row.matches}});
  j["version"] = library_version;
  return j.dump(2) + "\n";
}

std::string to_text(const Report &r, bool verbose) {
  std::ostringstream os;
  os << "group " << r.group << "\n";
  os << "  n = " << r.n << ", order = " << r.order << ", t = " << r.t;
  if (r.min_degree)
    os << ", m = " << r.min_degree->m << " (" << to_string(r.min_degree->method) << ")";
  os << "\n";
  for (const auto &s : r.suites) {
    std::size_t failed = 0;
    for (const auto &c : s.checks)
      failed += !c.pass;
    os << (s.applicable ? (failed ? "FAIL " : "ok   ") : "n/a  ") << s.name;
    if (s.applicable)
      os << "  " << s.checks.size() - failed << "/" << s.checks.size() << " checks";
    os << "\n";
    for (const auto &[k, v] : s.details)
      if (verbose || k == "reason" || k == "construction degenerate" || k == "conclusion")
        os << "       " << k << ": " << v << "\n";
    for (const auto &c : s.checks)
      if (verbose || !c.pass)
        os << "       " << (c.pass ? "pass " : "FAIL ") << c.label << ": " << to_string(c.observed)
           << " " << to_string(c.relation) << " " << to_string(c.formula) << "\n";
  }
  return os.str();
}

std::string to_text(const std::vector<MathieuRow> &rows) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "group" << std::right << std::setw(4) << "n" << std::setw(4)
     << "t" << std::setw(4) << "m" << std::setw(7) << "bound" << "  expected (m, bound)\n";
  for (const auto &row : rows)
    os << std::left << std::setw(8) << row.label << std::right << std::setw(4) << row.n
       << std::setw(4) << row.t << std::setw(4) << row.m << std::setw(7) << row.bound << "  ("
       << row.expected_m << ", " << row.expected_bound << ")" << (row.matches ? "" : "  MISMATCH")
       << "\n";
  return os.str();
}

} // namespace bochert
