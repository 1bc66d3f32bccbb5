#include "bochert/stabilizer_chain.hpp"

#include <algorithm>
#include <limits>

namespace bochert {

GeneratorSet::GeneratorSet(std::size_t degree, std::vector<Permutation> generators,
                           std::string label)
    : degree(degree), generators(std::move(generators)), label(std::move(label)) {
  for (const auto &g : this->generators)
    if (g.degree() != degree)
      throw DegreeMismatch(degree, g.degree());
}

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  if (bound <= 1)
    return 0;
  // Rejection sampling keeps the draw unbiased and independent of the standard library.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit)
      return x % bound;
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto &l : levels_)
    b.push_back(l.base);
  return b;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto &l : levels_)
    for (const auto &g : l.generators)
      if (std::find(out.begin(), out.end(), g) == out.end())
        out.push_back(g);
  return out;
}

Integer StabilizerChain::order() const {
  Integer o = 1;
  for (const auto &l : levels_)
    o *= l.orbit.size();
  return o;
}

void StabilizerChain::add_level(Point base) {
  Level l;
  l.base = base;
  levels_.push_back(std::move(l));
  rebuild_orbit(levels_.size() - 1);
}

void StabilizerChain::rebuild_orbit(std::size_t i) {
  Level &l = levels_[i];
  l.orbit.assign(1, l.base);
  l.orbit_index.assign(degree_, -1);
  l.orbit_index[l.base] = 0;
  l.representatives.assign(1, Permutation(degree_));
  l.inverse_representatives.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    for (const auto &s : l.generators) {
      Point q = s(l.orbit[k]);
      if (l.orbit_index[q] >= 0)
        continue;
      l.orbit_index[q] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(q);
      Permutation rep = l.representatives[k] * s;
      l.inverse_representatives.push_back(rep.inverse());
      l.representatives.push_back(std::move(rep));
    }
  }
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g, std::size_t start_level) const {
  if (g.degree() != degree_)
    throw DegreeMismatch(degree_, g.degree());
  for (std::size_t i = start_level; i < levels_.size(); ++i) {
    const Level &l = levels_[i];
    Point p = g(l.base);
    if (!l.in_orbit(p))
      return {std::move(g), i};
    g = g * l.inverse_representative(p);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation &g) const {
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

StabilizerChain StabilizerChain::build(const GeneratorSet &gens, std::span<const Point> base_prefix) {
  StabilizerChain chain;
  chain.degree_ = gens.degree;
  const std::size_t n = gens.degree;

  std::vector<Point> base;
  for (Point b : base_prefix) {
    if (b >= n)
      throw PreconditionError("base point " + std::to_string(b + 1) + " outside degree " +
                              std::to_string(n));
    if (std::find(base.begin(), base.end(), b) == base.end())
      base.push_back(b);
  }

  std::vector<Permutation> gens_nontrivial;
  for (const auto &g : gens.generators) {
    if (g.is_identity() ||
        std::find(gens_nontrivial.begin(), gens_nontrivial.end(), g) != gens_nontrivial.end())
      continue;
    bool fixes_base = std::all_of(base.begin(), base.end(), [&](Point b) { return g(b) == b; });
    if (fixes_base)
      base.push_back(g.least_moved_point());
    gens_nontrivial.push_back(g);
  }

  for (Point b : base) {
    Level l;
    l.base = b;
    chain.levels_.push_back(std::move(l));
  }
  for (std::size_t i = 0; i < chain.levels_.size(); ++i) {
    for (const auto &g : gens_nontrivial) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j)
        fixes_prefix = g(chain.levels_[j].base) == chain.levels_[j].base;
      if (fixes_prefix)
        chain.levels_[i].generators.push_back(g);
    }
    chain.rebuild_orbit(i);
  }

  // Work upward from the deepest level; a level is complete once every Schreier generator
  // sifts through the levels below it.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool complete = true;
    for (std::size_t k = 0; k < chain.levels_[li].orbit.size() && complete; ++k) {
      for (std::size_t s = 0; s < chain.levels_[li].generators.size(); ++s) {
        const Level &l = chain.levels_[li];
        const Permutation &gen = l.generators[s];
        Point b = l.orbit[k];
        Permutation schreier = l.representatives[k] * gen * l.inverse_representative(gen(b));
        if (schreier.is_identity())
          continue;
        auto [residue, j] = chain.sift(std::move(schreier), li + 1);
        if (j == chain.levels_.size() && residue.is_identity())
          continue;
        if (j == chain.levels_.size())
          chain.add_level(residue.least_moved_point());
        for (std::size_t t = li + 1; t <= j; ++t) {
          chain.levels_[t].generators.push_back(residue);
          chain.rebuild_orbit(t);
        }
        i = static_cast<std::ptrdiff_t>(j);
        complete = false;
        break;
      }
    }
    if (complete)
      --i;
  }
  return chain;
}

StabilizerChain StabilizerChain::tail(std::size_t from) const {
  StabilizerChain t;
  t.degree_ = degree_;
  for (std::size_t i = from; i < levels_.size(); ++i)
    t.levels_.push_back(levels_[i]);
  return t;
}

namespace {

bool visit_level(std::span<const StabilizerChain::Level> levels, std::size_t i,
                 const Permutation &suffix, const std::function<bool(const Permutation &)> &visit) {
  if (i == levels.size())
    return visit(suffix);
  for (const auto &rep : levels[i].representatives)
    if (!visit_level(levels, i + 1, rep * suffix, visit))
      return false;
  return true;
}

} // namespace

void StabilizerChain::for_each_element(const std::function<bool(const Permutation &)> &visit) const {
  visit_level(levels_, 0, Permutation(degree_), visit);
}

Permutation StabilizerChain::random_element(std::mt19937_64 &rng) const {
  Permutation g(degree_);
  for (const auto &l : levels_)
    g = l.representatives[uniform_below(rng, l.representatives.size())] * g;
  return g;
}

} // namespace bochert
