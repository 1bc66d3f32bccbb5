#pragma once

#include "bochert/permutation.hpp"
#include "bochert/rational.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace bochert {

struct GeneratorSet {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::string label;

  GeneratorSet() = default;
  GeneratorSet(std::size_t degree, std::vector<Permutation> generators, std::string label = {});

  friend bool operator==(const GeneratorSet &, const GeneratorSet &) = default;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i holds the generators of G^(i), the pointwise stabilizer of base[0..i), together
/// with the orbit of base[i] under G^(i) and a transversal: for every orbit point p a
/// representative r with base[i]^r = p. Every group element factors uniquely as
/// g = t_{k-1} ... t_1 t_0 with t_i a level-i representative.
class StabilizerChain {
public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;                 // discovery order, orbit[0] == base
    std::vector<std::int32_t> orbit_index;    // point -> index into orbit, or -1
    std::vector<Permutation> representatives; // aligned with orbit
    std::vector<Permutation> inverse_representatives;

    bool in_orbit(Point p) const { return orbit_index[p] >= 0; }
    const Permutation &representative(Point p) const {
      return representatives[static_cast<std::size_t>(orbit_index[p])];
    }
    const Permutation &inverse_representative(Point p) const {
      return inverse_representatives[static_cast<std::size_t>(orbit_index[p])];
    }
  };

  StabilizerChain() = default;

  /// The base begins with `base_prefix` (duplicates ignored) and is extended by the least
  /// point moved by each element that needs a new level.
  static StabilizerChain build(const GeneratorSet &gens, std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  const Level &level(std::size_t i) const { return levels_[i]; }
  std::span<const Level> levels() const { return levels_; }
  std::vector<Point> base() const;
  /// Union of the level generator lists, without duplicates, in level order.
  std::vector<Permutation> strong_generators() const;

  Integer order() const;

  struct SiftResult {
    Permutation residue;
    std::size_t level; // first level where sifting stopped, depth() if it ran through
  };
  SiftResult sift(Permutation g, std::size_t start_level = 0) const;
  bool contains(const Permutation &g) const;

  /// The chain of levels [from, depth): a chain for the stabilizer of base[0..from).
  StabilizerChain tail(std::size_t from) const;

  /// Visits every element once; the callback returns false to stop early.
  void for_each_element(const std::function<bool(const Permutation &)> &visit) const;

  Permutation random_element(std::mt19937_64 &rng) const;

private:
  void add_level(Point base);
  void rebuild_orbit(std::size_t i);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

/// Uniform integer in [0, bound) drawn from the raw engine output (portable across libraries).
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound);

} // namespace bochert
