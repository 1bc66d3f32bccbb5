#pragma once

#include "bochert/permutation.hpp"
#include "bochert/rational.hpp"
#include "bochert/stabilizer_chain.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace bochert {

class CapExceeded : public Error {
public:
  using Error::Error;
};

struct MinDegResult;

/// E = {g^-1 u g : g in H} for the subgroup H it was built from.
struct ConjugateOrbit {
  Permutation base_element;
  PointSet fixed_set; // the Delta whose pointwise stabilizer H is, when known
  std::vector<Permutation> elements; // breadth-first discovery order, elements[0] == u
};

inline constexpr std::size_t default_orbit_cap = 10'000'000;

/// A permutation group with its stabilizer chain and lazily cached invariants.
///
/// Copies share the cache; cached values never change once set.
class Group {
public:
  Group() = default;
  explicit Group(GeneratorSet gens, std::span<const Point> base_prefix = {});
  Group(GeneratorSet gens, StabilizerChain chain);

  const GeneratorSet &generators() const { return gens_; }
  const StabilizerChain &chain() const { return chain_; }
  std::size_t degree() const { return gens_.degree; }
  const std::string &label() const { return gens_.label; }
  const Integer &order() const { return order_; }

  bool contains(const Permutation &p) const;

  std::size_t transitivity_degree() const;
  bool contains_alternating() const;

  /// Chain with base 0, 1, ..., n-1; image sequences enumerate in lexicographic order on it.
  const StabilizerChain &lex_chain() const;

  /// Cached minimal-degree result, if one has been stored.
  std::optional<MinDegResult> cached_min_degree() const;
  void store_min_degree(const MinDegResult &r) const;

private:
  struct Cache;

  GeneratorSet gens_;
  StabilizerChain chain_;
  Integer order_ = 1;
  std::shared_ptr<Cache> cache_;
};

StabilizerChain build_chain(const GeneratorSet &gens, std::span<const Point> base_prefix = {});
Integer group_order(const StabilizerChain &chain);
bool contains(const StabilizerChain &chain, const Permutation &p);
std::vector<Permutation> enumerate_elements(const StabilizerChain &chain);

PointSet orbit(const GeneratorSet &gens, Point alpha);
PointSet orbit(std::span<const Permutation> gens, std::size_t degree, Point alpha);

/// G_(Delta), from a chain rebased so that Delta is a base prefix.
Group pointwise_stabilizer(const Group &g, const PointSet &delta);

/// Some g with src[i]^g = dst[i] for all i, or nullopt. Throws PreconditionError on tuples of
/// unequal length, repeated entries, or points out of range.
std::optional<Permutation> transporter(const Group &g, std::span<const Point> src,
                                       std::span<const Point> dst);

/// Largest t such that G is transitive on ordered t-tuples of distinct points.
std::size_t transitivity_degree(const StabilizerChain &chain);

/// Tuple-orbit counting; independent of the chain recursion. Exponential, small n only.
std::size_t transitivity_degree_by_tuples(const GeneratorSet &gens);

/// Closure of u under conjugation by the generators of `stab`.
ConjugateOrbit conjugate_orbit(const Group &stab, const Permutation &u,
                               std::size_t cap = default_orbit_cap);

} // namespace bochert
