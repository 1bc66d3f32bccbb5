#include "bochert/verify.hpp"

#include <algorithm>
#include <unordered_map>

namespace bochert {

CommutatorLawReport check_commutator_laws(const Permutation &u, const Permutation &v) {
  if (u.degree() != v.degree())
    throw DegreeMismatch(u.degree(), v.degree());
  const Permutation c = commutator(u, v);
  const PointSet supp_c = support(c);
  const PointSet supp_u = support(u), supp_v = support(v);
  const PointSet delta = supp_u & supp_v;
  const Permutation u_inv = u.inverse(), v_inv = v.inverse();

  CommutatorLawReport r;
  const PointSet inverse_union = delta | u_inv.image_of(delta) | v_inv.image_of(delta);
  r.checks.push_back(containment_check("commutator support within overlap and its inverse images",
                                       supp_c, inverse_union));

  const std::size_t bound =
      3 * delta.size() - (delta & u.image_of(delta)).size() - (delta & v.image_of(delta)).size();
  r.checks.push_back(make_check("commutator support size vs 3|overlap| minus self-overlaps",
                                Integer(supp_c.size()), Relation::less_equal, Rational(bound)));

  PointSet fixed_side(u.degree());
  const PointSet fix_u = fixed_points(u), fix_v = fixed_points(v);
  for (Point a : fix_u)
    if (delta.contains(v(a)))
      fixed_side.insert(a);
  for (Point a : fix_v)
    if (delta.contains(u(a)))
      fixed_side.insert(a);
  r.checks.push_back(containment_check("commutator support within overlap and fixed-point feeders",
                                       supp_c, delta | fixed_side));

  const PointSet forward_union = delta | u.image_of(delta) | v.image_of(delta);
  r.forward_image_containment = supp_c.is_subset_of(forward_union);
  return r;
}

CountCheck check_two_support_bound(const Permutation &u, const Permutation &v, const PointSet &phi,
                                   const PointSet &psi) {
  if (u.degree() != v.degree())
    throw DegreeMismatch(u.degree(), v.degree());
  const Permutation c = commutator(u, v);
  const PointSet supp_u = support(u);
  // v u v^-1 is the conjugate of u by v^-1.
  const PointSet supp_vuv = support(conjugate(u, v.inverse()));
  if (!phi.is_subset_of(fixed_points(c) & supp_u))
    throw PreconditionError("phi " + phi.to_string() + " is not inside fix([u,v]) & supp(u)");
  if (!psi.is_subset_of(supp_vuv & supp_u))
    throw PreconditionError("psi " + psi.to_string() + " is not inside supp(v u v^-1) & supp(u)");
  const auto bound = static_cast<std::int64_t>(2 * supp_u.size()) -
                     static_cast<std::int64_t>(phi.size()) - static_cast<std::int64_t>(psi.size());
  return make_check("commutator support vs 2|supp u| - |phi| - |psi|",
                    Integer(c.support_size()), Relation::less_equal, Rational(bound));
}

// ------------------------------------------------------------ product action

FiniteAction point_action(std::span<const Permutation> gens, std::size_t degree) {
  FiniteAction a;
  a.size = degree;
  a.generators.assign(gens.begin(), gens.end());
  return a;
}

PairAction ordered_pair_action(std::span<const Permutation> gens, std::size_t degree,
                               const PointSet &domain) {
  PairAction pa;
  pa.degree = degree;
  pa.index.assign(degree * degree, -1);
  for (Point a : domain)
    for (Point b : domain)
      if (a != b) {
        pa.index[a * degree + b] = static_cast<std::int64_t>(pa.pairs.size());
        pa.pairs.emplace_back(a, b);
      }
  pa.action.size = pa.pairs.size();
  for (const auto &g : gens) {
    std::vector<Point> img(pa.pairs.size());
    for (std::size_t k = 0; k < pa.pairs.size(); ++k) {
      auto [a, b] = pa.pairs[k];
      std::int64_t j = pa.index_of(g(a), g(b));
      if (j < 0)
        throw PreconditionError("pair domain is not invariant under the generators");
      img[k] = static_cast<Point>(j);
    }
    pa.action.generators.emplace_back(std::move(img));
  }
  return pa;
}

FiniteAction conjugation_action(std::span<const Permutation> gens, const ConjugateOrbit &orbit) {
  std::unordered_map<Permutation, std::size_t, PermutationHash> where;
  for (std::size_t k = 0; k < orbit.elements.size(); ++k)
    where.emplace(orbit.elements[k], k);
  FiniteAction a;
  a.size = orbit.elements.size();
  for (const auto &g : gens) {
    std::vector<Point> img(a.size);
    for (std::size_t k = 0; k < a.size; ++k) {
      auto it = where.find(conjugate(orbit.elements[k], g));
      if (it == where.end())
        throw PreconditionError("orbit is not closed under conjugation by the generators");
      img[k] = static_cast<Point>(it->second);
    }
    a.generators.emplace_back(std::move(img));
  }
  return a;
}

namespace {

bool transitive(const FiniteAction &a) {
  if (a.size == 0)
    return true;
  return orbit(a.generators, a.size, 0).size() == a.size;
}

} // namespace

std::vector<CountCheck> check_product_action(const FiniteAction &left, const FiniteAction &right,
                                             std::span<const std::pair<std::size_t, std::size_t>> relation) {
  if (left.generators.size() != right.generators.size())
    throw PreconditionError("actions must come from the same generator list");
  if (!transitive(left) || !transitive(right))
    throw PreconditionError("product-action check needs transitive actions on both factors");

  std::vector<std::pair<std::size_t, std::size_t>> rel(relation.begin(), relation.end());
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  for (std::size_t s = 0; s < left.generators.size(); ++s)
    for (auto [a, b] : rel) {
      std::pair<std::size_t, std::size_t> img{left.generators[s](static_cast<Point>(a)),
                                              right.generators[s](static_cast<Point>(b))};
      if (!std::binary_search(rel.begin(), rel.end(), img))
        throw PreconditionError("relation is not invariant under the product action");
    }

  std::vector<std::size_t> rows(left.size, 0), cols(right.size, 0);
  for (auto [a, b] : rel) {
    ++rows[a];
    ++cols[b];
  }
  const std::size_t row0 = rows.empty() ? 0 : rows[0];
  const std::size_t col0 = cols.empty() ? 0 : cols[0];
  const auto row_bad = std::count_if(rows.begin(), rows.end(), [&](std::size_t r) { return r != row0; });
  const auto col_bad = std::count_if(cols.begin(), cols.end(), [&](std::size_t c) { return c != col0; });

  std::vector<CountCheck> out;
  out.push_back(make_check("rows with a count other than M = " + std::to_string(row0),
                           Integer(row_bad), Relation::equal, Rational(0)));
  out.push_back(make_check("columns with a count other than M' = " + std::to_string(col0),
                           Integer(col_bad), Relation::equal, Rational(0)));
  out.push_back(make_check("M |left| = M' |right|", Integer(row0) * left.size, Relation::equal,
                           Rational(Integer(col0) * right.size)));
  return out;
}

} // namespace bochert
