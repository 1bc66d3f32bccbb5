#pragma once

// Mechanical checks of the commutator-support lemmas, the orbit-counting identities for
// conjugates under pointwise stabilizers, and the minimal-degree bounds for 2-, 3- and
// 4-transitive groups, evaluated on concrete groups with exact arithmetic.

#include "bochert/checks.hpp"
#include "bochert/group.hpp"
#include "bochert/min_degree.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bochert {

// ------------------------------------------------------------ commutator laws

struct CommutatorLawReport {
  std::vector<CountCheck> checks;
  /// Whether supp([u,v]) is inside Delta + Delta^u + Delta^v (forward images). Informational:
  /// with right actions the containment that always holds uses inverse images.
  bool forward_image_containment = false;
};

/// Three checks on c = [u,v] with Delta = supp(u) & supp(v):
/// supp(c) within Delta + Delta^(u^-1) + Delta^(v^-1);
/// |supp(c)| <= 3|Delta| - |Delta & Delta^u| - |Delta & Delta^v|;
/// supp(c) within Delta + {a in fix(u) : a^v in Delta} + {a in fix(v) : a^u in Delta}.
CommutatorLawReport check_commutator_laws(const Permutation &u, const Permutation &v);

/// |supp([u,v])| <= 2|supp(u)| - |phi| - |psi|. Throws PreconditionError unless
/// phi is inside fix([u,v]) & supp(u) and psi is inside supp(v u v^-1) & supp(u).
CountCheck check_two_support_bound(const Permutation &u, const Permutation &v, const PointSet &phi,
                                   const PointSet &psi);

// ------------------------------------------------------------ product actions

/// A group action on {0, ..., size-1}, one permutation per group generator.
struct FiniteAction {
  std::size_t size = 0;
  std::vector<Permutation> generators;
};

FiniteAction point_action(std::span<const Permutation> gens, std::size_t degree);

/// Action on ordered pairs of distinct points of `domain` (which must be invariant).
struct PairAction {
  FiniteAction action;
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<std::int64_t> index; // a * degree + b -> position in pairs, or -1
  std::size_t degree = 0;

  std::int64_t index_of(Point a, Point b) const { return index[a * degree + b]; }
};
PairAction ordered_pair_action(std::span<const Permutation> gens, std::size_t degree,
                               const PointSet &domain);

/// Conjugation action x -> g^-1 x g on the members of an orbit closed under `gens`.
FiniteAction conjugation_action(std::span<const Permutation> gens, const ConjugateOrbit &orbit);

/// For a relation R invariant under the product action on left x right, checks that every row
/// has the same count M, every column the same count M', and M |left| = M' |right|.
/// Throws PreconditionError if either action is intransitive or R is not invariant.
std::vector<CountCheck> check_product_action(const FiniteAction &left, const FiniteAction &right,
                                             std::span<const std::pair<std::size_t, std::size_t>> relation);

// ------------------------------------------------ conjugate orbit counting

enum class OrbitCountClause {
  fixes_point,          // |{x : g^x = g}|              = |E|(n-m)/(n-|D|)       needs |D| <= t-1
  moves_point,          // |{x : g^x != g}|             = |E|(m-|D|)/(n-|D|)     needs |D| <= t-1
  fixes_and_moves,      // |{x : g fixed, d moved}|     = |E|(n-m)(m-|D|)/((n-|D|)(n-|D|-1))
                        //                                                        needs |D| <= t-2
  lands_in_fixed_set,   // |{x : g^x in D}|             = |E|/(n-1)              needs |D| = 1
  maps_point_to_point,  // |{x : g^x = d}|              = |E|(m-2)/((n-1)(n-2))  needs |D| = 1, t >= 3
};

std::string to_string(OrbitCountClause c);
bool clause_applicable(OrbitCountClause c, std::size_t transitivity, std::size_t fixed_size);
inline constexpr OrbitCountClause all_orbit_count_clauses[] = {
    OrbitCountClause::fixes_point, OrbitCountClause::moves_point, OrbitCountClause::fixes_and_moves,
    OrbitCountClause::lands_in_fixed_set, OrbitCountClause::maps_point_to_point};

/// A sample point gamma outside the fixed set, plus an optional second point for the pair
/// clauses.
struct OrbitCountProbe {
  Point gamma = 0;
  std::optional<Point> other;
};

struct OrbitCountReport {
  std::size_t orbit_size = 0;
  std::vector<CountCheck> checks;
  std::vector<OrbitCountClause> inapplicable;
};

/// Builds E = conjugate_orbit(G_(fixed), u) and compares brute-force counts over E with the
/// exact formulas for every applicable clause and probe. `transitivity` is G's transitivity
/// degree; all clauses require it to be at least 2.
OrbitCountReport check_conjugate_orbit_counts(const Group &g, const Permutation &u,
                                              const PointSet &fixed,
                                              std::span<const OrbitCountProbe> probes,
                                              std::size_t transitivity,
                                              std::size_t cap = default_orbit_cap);

/// Same, with E already computed for G_(fixed).
OrbitCountReport check_conjugate_orbit_counts(const ConjugateOrbit &orbit, std::size_t degree,
                                              const PointSet &fixed,
                                              std::span<const OrbitCountProbe> probes,
                                              std::size_t transitivity);

/// Count of x in E satisfying the clause's predicate (the brute-force side).
Integer count_orbit_clause(const ConjugateOrbit &orbit, OrbitCountClause clause,
                           const PointSet &fixed, Point gamma, std::optional<Point> other);
/// The formula side.
Rational orbit_clause_formula(OrbitCountClause clause, std::size_t orbit_size, std::size_t degree,
                              std::size_t support_size, std::size_t fixed_size);

// -------------------------------------------------------------------- traces

struct TraceOptions {
  std::uint64_t exhaustive_cap = default_exhaustive_cap;
  unsigned jobs = 1;
  std::size_t orbit_cap = default_orbit_cap;
  /// When set, witnesses are drawn at random among valid choices instead of the least ones.
  std::optional<std::uint64_t> choice_seed;
};

/// Record of one bound's proof construction replayed on a concrete group.
struct TraceReport {
  std::string theorem;
  std::string group;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t t = 0;
  bool applicable = false;
  std::string reason; // why inapplicable, empty otherwise
  std::optional<std::string> degenerate;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<std::pair<std::string, Integer>> sizes;
  std::vector<std::pair<std::string, Rational>> quantities;
  std::vector<CountCheck> checks;
  std::vector<std::string> notes;
  bool conclusion_applicable = false;
  bool conclusion_holds = false;

  bool passed() const { return all_pass(checks) && (!conclusion_applicable || conclusion_holds); }
};

/// The 2t-2 bound for t-transitive groups with minimal degree above 3, replaying the
/// commutator construction: u of prime order p, t-1 = N p + r, phi the union of N p-cycles.
struct JordanTrace {
  std::string group;
  std::size_t n = 0, m = 0, t = 0;
  bool applicable = false;
  std::string reason;
  Permutation u;
  std::uint64_t prime = 0;
  std::size_t cycles_used = 0; // N
  std::size_t remainder = 0;   // r
  PointSet phi, psi;
  std::optional<Point> alpha, beta;
  std::optional<Permutation> v;
  int construction_case = 0; // 1 when r == 0, else 2
  std::optional<std::string> degenerate;
  std::vector<CountCheck> checks;
  bool conclusion_holds = false;

  bool passed() const { return all_pass(checks) && (!applicable || conclusion_holds); }
};

JordanTrace check_jordan_bound(const Group &g, const TraceOptions &opts = {});
TraceReport to_trace_report(const JordanTrace &j);

/// m >= n/4 for n >= 38 (t >= 2).
TraceReport trace_doubly_transitive_bound(const Group &g, const TraceOptions &opts = {});
/// m >= n/3 for n >= 23 (t >= 3).
TraceReport trace_triply_transitive_bound(const Group &g, const TraceOptions &opts = {});
/// m >= 6 and n-3 <= 2m (t >= 4).
TraceReport trace_quadruply_transitive_bound(const Group &g, const TraceOptions &opts = {});

/// p(x) = x^4 + 14x^3 + 35x^2 + 30x + 9.
Integer bound_quartic(const Integer &x);

struct MathieuRow {
  std::string label;
  std::size_t n = 0, t = 0, m = 0;
  Integer bound;          // max(6, ceil((n-3)/2))
  std::size_t expected_m = 0;
  Integer expected_bound;
  bool matches = false;
};

/// Rows for M11, M12, M23, M24 (in that order), compared with the published minimal degrees
/// 8, 8, 16, 16 and lower bounds 6, 6, 10, 11.
std::vector<MathieuRow> mathieu_bound_table(std::span<const Group> mathieu_groups,
                                            const TraceOptions &opts = {});

} // namespace bochert
