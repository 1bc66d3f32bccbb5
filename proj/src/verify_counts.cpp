#include "bochert/verify.hpp"

namespace bochert {

std::string to_string(OrbitCountClause c) {
  switch (c) {
  case OrbitCountClause::fixes_point:
    return "fixes-point";
  case OrbitCountClause::moves_point:
    return "moves-point";
  case OrbitCountClause::fixes_and_moves:
    return "fixes-and-moves";
  case OrbitCountClause::lands_in_fixed_set:
    return "lands-in-fixed-set";
  case OrbitCountClause::maps_point_to_point:
    return "maps-point-to-point";
  }
  return "?";
}

bool clause_applicable(OrbitCountClause c, std::size_t t, std::size_t k) {
  if (t < 2)
    return false;
  switch (c) {
  case OrbitCountClause::fixes_point:
  case OrbitCountClause::moves_point:
    return k + 1 <= t;
  case OrbitCountClause::fixes_and_moves:
    return k + 2 <= t;
  case OrbitCountClause::lands_in_fixed_set:
    return k == 1;
  case OrbitCountClause::maps_point_to_point:
    return k == 1 && t >= 3;
  }
  return false;
}

Integer count_orbit_clause(const ConjugateOrbit &orbit, OrbitCountClause clause,
                           const PointSet &fixed, Point gamma, std::optional<Point> other) {
  std::size_t count = 0;
  for (const auto &x : orbit.elements) {
    bool hit = false;
    switch (clause) {
    case OrbitCountClause::fixes_point:
      hit = x(gamma) == gamma;
      break;
    case OrbitCountClause::moves_point:
      hit = x(gamma) != gamma;
      break;
    case OrbitCountClause::fixes_and_moves:
      hit = x(gamma) == gamma && x(*other) != *other;
      break;
    case OrbitCountClause::lands_in_fixed_set:
      hit = fixed.contains(x(gamma));
      break;
    case OrbitCountClause::maps_point_to_point:
      hit = x(gamma) == *other;
      break;
    }
    count += hit;
  }
  return count;
}

Rational orbit_clause_formula(OrbitCountClause clause, std::size_t orbit_size, std::size_t degree,
                              std::size_t support_size, std::size_t fixed_size) {
  const Integer e = orbit_size;
  const Integer n = degree, m = support_size, k = fixed_size;
  switch (clause) {
  case OrbitCountClause::fixes_point:
    return Rational(e * (n - m), n - k);
  case OrbitCountClause::moves_point:
    return Rational(e * (m - k), n - k);
  case OrbitCountClause::fixes_and_moves:
    return Rational(e * (n - m) * (m - k), (n - k) * (n - k - 1));
  case OrbitCountClause::lands_in_fixed_set:
    return Rational(e, n - 1);
  case OrbitCountClause::maps_point_to_point:
    return Rational(e * (m - 2), (n - 1) * (n - 2));
  }
  throw PreconditionError("unknown clause");
}

OrbitCountReport check_conjugate_orbit_counts(const ConjugateOrbit &orbit, std::size_t degree,
                                              const PointSet &fixed,
                                              std::span<const OrbitCountProbe> probes,
                                              std::size_t transitivity) {
  const std::size_t k = fixed.size();
  const std::size_t m = orbit.base_element.support_size();
  for (const auto &p : probes) {
    if (p.gamma >= degree || fixed.contains(p.gamma))
      throw PreconditionError("probe point must lie outside the fixed set");
    if (p.other && (*p.other >= degree || fixed.contains(*p.other) || *p.other == p.gamma))
      throw PreconditionError("second probe point must be a different point outside the fixed set");
  }

  OrbitCountReport r;
  r.orbit_size = orbit.elements.size();
  for (OrbitCountClause clause : all_orbit_count_clauses) {
    if (!clause_applicable(clause, transitivity, k)) {
      r.inapplicable.push_back(clause);
      continue;
    }
    const bool pair_clause = clause == OrbitCountClause::fixes_and_moves ||
                             clause == OrbitCountClause::maps_point_to_point;
    const Rational formula = orbit_clause_formula(clause, r.orbit_size, degree, m, k);
    for (const auto &p : probes) {
      if (pair_clause && !p.other)
        continue;
      std::string label = to_string(clause) + " |D|=" + std::to_string(k) +
                          " g=" + std::to_string(p.gamma + 1);
      if (pair_clause)
        label += " d=" + std::to_string(*p.other + 1);
      CountCheck c = make_check(std::move(label),
                                count_orbit_clause(orbit, clause, fixed, p.gamma, p.other),
                                Relation::equal, formula);
      c.pass = c.pass && is_integral(formula);
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

OrbitCountReport check_conjugate_orbit_counts(const Group &g, const Permutation &u,
                                              const PointSet &fixed,
                                              std::span<const OrbitCountProbe> probes,
                                              std::size_t transitivity, std::size_t cap) {
  if (u.degree() != g.degree())
    throw DegreeMismatch(g.degree(), u.degree());
  if (!fixed.is_subset_of(support(u)))
    throw PreconditionError("fixed set " + fixed.to_string() + " is not inside supp(u)");
  if (!g.contains(u))
    throw PreconditionError("u is not an element of the group");
  Group stab = pointwise_stabilizer(g, fixed);
  ConjugateOrbit orbit = conjugate_orbit(stab, u, cap);
  orbit.fixed_set = fixed;
  return check_conjugate_orbit_counts(orbit, g.degree(), fixed, probes, transitivity);
}

} // namespace bochert
