#include "bochert/checks.hpp"

#include <algorithm>

namespace bochert {

std::string to_string(Relation r) {
  switch (r) {
  case Relation::equal:
    return "=";
  case Relation::less_equal:
    return "<=";
  case Relation::greater_equal:
    return ">=";
  case Relation::less:
    return "<";
  case Relation::greater:
    return ">";
  case Relation::subset:
    return "subset";
  }
  return "?";
}

CountCheck make_check(std::string label, const Integer &observed, Relation relation,
                      const Rational &formula) {
  CountCheck c{std::move(label), observed, formula, relation, false};
  const Rational lhs(observed);
  switch (relation) {
  case Relation::equal:
    c.pass = lhs == formula;
    break;
  case Relation::less_equal:
    c.pass = lhs <= formula;
    break;
  case Relation::greater_equal:
    c.pass = lhs >= formula;
    break;
  case Relation::less:
    c.pass = lhs < formula;
    break;
  case Relation::greater:
    c.pass = lhs > formula;
    break;
  case Relation::subset:
    throw PreconditionError("make_check: use containment_check for subset relations");
  }
  return c;
}

CountCheck containment_check(std::string label, const PointSet &lhs, const PointSet &rhs) {
  return containment_check(std::move(label), Integer(lhs.size()), Integer(rhs.size()),
                           lhs.is_subset_of(rhs));
}

CountCheck containment_check(std::string label, const Integer &lhs_size, const Integer &rhs_size,
                             bool holds) {
  return CountCheck{std::move(label), lhs_size, Rational(rhs_size), Relation::subset, holds};
}

bool all_pass(std::span<const CountCheck> checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CountCheck &c) { return c.pass; });
}

} // namespace bochert
