#pragma once

// Sampled verification suites and the versioned JSON report the CLI and Python module emit.

#include "bochert/checks.hpp"
#include "bochert/group.hpp"
#include "bochert/min_degree.hpp"
#include "bochert/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bochert {

inline constexpr const char *library_version = "0.1.0";
inline constexpr int report_schema = 1;

struct Suite {
  std::string name;
  bool applicable = true;
  std::vector<CountCheck> checks; // sorted by label
  std::vector<std::pair<std::string, std::string>> details;

  bool passed() const { return !applicable || all_pass(checks); }
};

struct SuiteOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t cap = default_exhaustive_cap;
};

/// Random pairs from G checked against the three commutator support laws and the
/// two-support bound; failures are aggregated per law.
Suite commutator_law_suite(const Group &g, const SuiteOptions &opts);

/// One suite per orbit-count clause over seeded (u, Delta, gamma, delta) samples, plus a
/// product-action suite on a few small instances.
std::vector<Suite> orbit_count_suites(const Group &g, const SuiteOptions &opts);

Suite trace_suite(const TraceReport &trace);

/// Jordan bound and the three transitivity-specific traces.
std::vector<Suite> trace_suites(const Group &g, const SuiteOptions &opts);

struct Report {
  std::string group;
  std::size_t n = 0;
  Integer order;
  std::size_t t = 0;
  std::optional<MinDegResult> min_degree;
  std::vector<Suite> suites;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;

  bool passed() const;
};

/// Header fields of a report for g; computes m unless `with_min_degree` is false.
Report make_report(const Group &g, const SuiteOptions &opts, bool with_min_degree = true);

/// Deterministic JSON; `elapsed_ms` is written as given.
std::string to_json(const Report &r);
std::string to_json(const std::vector<MathieuRow> &rows);

/// Plain-text rendering for terminals.
std::string to_text(const Report &r, bool verbose = false);
std::string to_text(const std::vector<MathieuRow> &rows);

} // namespace bochert
