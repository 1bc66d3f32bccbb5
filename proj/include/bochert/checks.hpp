#pragma once

#include "bochert/permutation.hpp"
#include "bochert/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace bochert {

enum class Relation { equal, less_equal, greater_equal, less, greater, subset };

/// "=", "<=", ">=", "<", ">", "subset".
std::string to_string(Relation r);

/// One observed count compared against an exact formula value: `observed <relation> formula`.
/// For Relation::subset, observed and formula are the two set sizes and `pass` records the
/// containment itself.
struct CountCheck {
  std::string label;
  Integer observed;
  Rational formula;
  Relation relation = Relation::equal;
  bool pass = false;
};

CountCheck make_check(std::string label, const Integer &observed, Relation relation,
                      const Rational &formula);
CountCheck containment_check(std::string label, const PointSet &lhs, const PointSet &rhs);
CountCheck containment_check(std::string label, const Integer &lhs_size, const Integer &rhs_size,
                             bool holds);

bool all_pass(std::span<const CountCheck> checks);

} // namespace bochert
