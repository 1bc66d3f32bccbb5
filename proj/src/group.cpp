#include "bochert/group.hpp"

#include "bochert/min_degree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace bochert {

struct Group::Cache {
  std::mutex mutex;
  std::optional<std::size_t> transitivity;
  std::optional<bool> contains_alt;
  std::optional<StabilizerChain> lex_chain;
  std::optional<MinDegResult> min_degree;
};

Group::Group(GeneratorSet gens, std::span<const Point> base_prefix)
    : gens_(std::move(gens)), chain_(StabilizerChain::build(gens_, base_prefix)),
      order_(chain_.order()), cache_(std::make_shared<Cache>()) {}

Group::Group(GeneratorSet gens, StabilizerChain chain)
    : gens_(std::move(gens)), chain_(std::move(chain)), order_(chain_.order()),
      cache_(std::make_shared<Cache>()) {}

bool Group::contains(const Permutation &p) const { return chain_.contains(p); }

const StabilizerChain &Group::lex_chain() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->lex_chain) {
    std::vector<Point> all(degree());
    std::iota(all.begin(), all.end(), Point{0});
    GeneratorSet strong(degree(), chain_.strong_generators(), label());
    cache_->lex_chain = StabilizerChain::build(strong, all);
  }
  return *cache_->lex_chain;
}

std::size_t Group::transitivity_degree() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->transitivity)
      return *cache_->transitivity;
  }
  std::size_t t = bochert::transitivity_degree(lex_chain());
  std::lock_guard lock(cache_->mutex);
  cache_->transitivity = t;
  return t;
}

bool Group::contains_alternating() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->contains_alt) {
    const std::size_t n = degree();
    if (n <= 2) {
      cache_->contains_alt = true;
    } else {
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), Point{0});
      images[0] = 1;
      images[1] = 2;
      images[2] = 0;
      cache_->contains_alt =
          order_ * 2 >= factorial(static_cast<unsigned>(n)) && chain_.contains(Permutation(images));
    }
  }
  return *cache_->contains_alt;
}

std::optional<MinDegResult> Group::cached_min_degree() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->min_degree;
}

void Group::store_min_degree(const MinDegResult &r) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->min_degree)
    cache_->min_degree = r;
}

// ------------------------------------------------------------ free functions

StabilizerChain build_chain(const GeneratorSet &gens, std::span<const Point> base_prefix) {
  return StabilizerChain::build(gens, base_prefix);
}

Integer group_order(const StabilizerChain &chain) { return chain.order(); }

bool contains(const StabilizerChain &chain, const Permutation &p) { return chain.contains(p); }

std::vector<Permutation> enumerate_elements(const StabilizerChain &chain) {
  std::vector<Permutation> out;
  chain.for_each_element([&](const Permutation &g) {
    out.push_back(g);
    return true;
  });
  return out;
}

PointSet orbit(std::span<const Permutation> gens, std::size_t degree, Point alpha) {
  if (alpha >= degree)
    throw PreconditionError("orbit: point out of range");
  std::vector<bool> seen(degree, false);
  std::vector<Point> queue{alpha};
  seen[alpha] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto &s : gens) {
      Point q = s(queue[k]);
      if (!seen[q]) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
  return PointSet(degree, std::move(queue));
}

PointSet orbit(const GeneratorSet &gens, Point alpha) {
  return orbit(gens.generators, gens.degree, alpha);
}

Group pointwise_stabilizer(const Group &g, const PointSet &delta) {
  std::vector<Point> prefix(delta.begin(), delta.end());
  GeneratorSet strong(g.degree(), g.chain().strong_generators(), g.label());
  StabilizerChain rebased = StabilizerChain::build(strong, prefix);
  StabilizerChain tail = rebased.tail(prefix.size());
  std::vector<Permutation> gens = tail.strong_generators();
  std::string label = g.label() + "_(" + delta.to_string() + ")";
  return Group(GeneratorSet(g.degree(), std::move(gens), std::move(label)), std::move(tail));
}

namespace {

void validate_tuple(std::span<const Point> tuple, std::size_t degree) {
  std::vector<Point> sorted(tuple.begin(), tuple.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("transporter: tuple entries must be distinct");
  if (!sorted.empty() && sorted.back() >= degree)
    throw PreconditionError("transporter: point out of range");
}

} // namespace

std::optional<Permutation> transporter(const Group &g, std::span<const Point> src,
                                       std::span<const Point> dst) {
  if (src.size() != dst.size())
    throw PreconditionError("transporter: tuples differ in length");
  validate_tuple(src, g.degree());
  validate_tuple(dst, g.degree());

  GeneratorSet strong(g.degree(), g.chain().strong_generators(), g.label());
  StabilizerChain chain = StabilizerChain::build(strong, src);

  // With g = x_k ... x_1 x_0 and x_i in the stabilizer of src[0..i), the suffix
  // y_i = x_{i-1} ... x_0 is fixed first and x_i must send src[i] to dst[i]^(y_i^-1).
  Permutation suffix(g.degree());
  Permutation suffix_inv(g.degree());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto &level = chain.level(i);
    Point target = suffix_inv(dst[i]);
    if (!level.in_orbit(target))
      return std::nullopt;
    suffix = level.representative(target) * suffix;
    suffix_inv = suffix_inv * level.inverse_representative(target);
  }
  return suffix;
}

std::size_t transitivity_degree(const StabilizerChain &chain) {
  const std::size_t n = chain.degree();
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  // Base 0, 1, ..., n-1: G is t-transitive iff level i's orbit is all of {i, ..., n-1} for i < t.
  bool already_lex = chain.depth() == n;
  for (std::size_t i = 0; already_lex && i < n; ++i)
    already_lex = chain.level(i).base == i;
  StabilizerChain rebuilt;
  const StabilizerChain *lex = &chain;
  if (!already_lex) {
    rebuilt = StabilizerChain::build(GeneratorSet(n, chain.strong_generators()), all);
    lex = &rebuilt;
  }
  std::size_t t = 0;
  while (t < n && lex->level(t).orbit.size() == n - t)
    ++t;
  return t;
}

std::size_t transitivity_degree_by_tuples(const GeneratorSet &gens) {
  const std::size_t n = gens.degree;
  std::size_t best = 0;
  for (std::size_t t = 1; t <= n; ++t) {
    Integer expected = 1;
    for (std::size_t i = 0; i < t; ++i)
      expected *= n - i;
    std::vector<Point> start(t);
    std::iota(start.begin(), start.end(), Point{0});
    std::map<std::vector<Point>, bool> seen{{start, true}};
    std::deque<std::vector<Point>> queue{start};
    while (!queue.empty()) {
      auto tup = std::move(queue.front());
      queue.pop_front();
      for (const auto &s : gens.generators) {
        std::vector<Point> img(t);
        for (std::size_t i = 0; i < t; ++i)
          img[i] = s(tup[i]);
        if (seen.emplace(img, true).second)
          queue.push_back(std::move(img));
      }
    }
    if (Integer(seen.size()) != expected)
      break;
    best = t;
  }
  return best;
}

ConjugateOrbit conjugate_orbit(const Group &stab, const Permutation &u, std::size_t cap) {
  if (u.degree() != stab.degree())
    throw DegreeMismatch(stab.degree(), u.degree());
  ConjugateOrbit e;
  e.base_element = u;
  e.fixed_set = PointSet(u.degree());
  std::unordered_set<Permutation, PermutationHash> seen{u};
  e.elements.push_back(u);
  const auto &gens = stab.generators().generators;
  for (std::size_t k = 0; k < e.elements.size(); ++k) {
    for (const auto &g : gens) {
      Permutation x = conjugate(e.elements[k], g);
      if (seen.insert(x).second) {
        if (e.elements.size() >= cap)
          throw CapExceeded("conjugate orbit exceeds cap of " + std::to_string(cap));
        e.elements.push_back(std::move(x));
      }
    }
  }
  return e;
}

} // namespace bochert
