#include "bochert/min_degree.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace bochert {

std::string to_string(MinDegMethod m) {
  switch (m) {
  case MinDegMethod::automatic:
    return "auto";
  case MinDegMethod::exhaustive:
    return "exhaustive";
  case MinDegMethod::backtrack:
    return "backtrack";
  }
  return "?";
}

MinDegMethod parse_min_deg_method(const std::string &s) {
  if (s == "auto")
    return MinDegMethod::automatic;
  if (s == "exhaustive")
    return MinDegMethod::exhaustive;
  if (s == "backtrack")
    return MinDegMethod::backtrack;
  throw PreconditionError("unknown method '" + s + "' (expected auto|exhaustive|backtrack)");
}

namespace {

void require_nontrivial(const Group &g) {
  if (g.order() == 1)
    throw PreconditionError("minimal degree of the trivial group is undefined");
}

/// Per-worker best: larger fixed count wins, ties go to the lexicographically smaller witness.
struct Candidate {
  std::size_t fixed = 0;
  std::optional<Permutation> witness;

  void offer(std::size_t f, const Permutation &p) {
    if (!witness || f > fixed || (f == fixed && p < *witness)) {
      fixed = f;
      witness = p;
    }
  }
};

Candidate reduce(std::vector<Candidate> &parts) {
  Candidate best;
  for (auto &c : parts)
    if (c.witness)
      best.offer(c.fixed, *c.witness);
  return best;
}

template <class Work>
void run_workers(unsigned jobs, Work work) {
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work(0u);
    return;
  }
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < jobs; ++w)
    threads.emplace_back(work, w);
  for (auto &t : threads)
    t.join();
}

} // namespace

// ------------------------------------------------------------------ exhaustive

MinDegResult minimal_degree_exhaustive(const Group &g, std::uint64_t order_cap, unsigned jobs) {
  require_nontrivial(g);
  if (g.order() > order_cap)
    throw CapExceeded("group order " + g.order().str() + " exceeds exhaustive cap " +
                      std::to_string(order_cap));
  jobs = std::max(1u, jobs);
  const StabilizerChain &chain = g.chain();
  const auto &top = chain.level(0);
  StabilizerChain rest = chain.tail(1);

  std::vector<Candidate> parts(jobs);
  std::atomic<std::uint64_t> visited{0};
  run_workers(jobs, [&](unsigned w) {
    std::uint64_t local_visited = 0;
    for (std::size_t k = w; k < top.representatives.size(); k += jobs) {
      const Permutation &t0 = top.representatives[k];
      rest.for_each_element([&](const Permutation &z) {
        Permutation x = z * t0;
        ++local_visited;
        if (!x.is_identity())
          parts[w].offer(x.fixed_count(), x);
        return true;
      });
    }
    visited += local_visited;
  });

  Candidate best = reduce(parts);
  MinDegResult r;
  r.m = g.degree() - best.fixed;
  r.witness = *best.witness;
  r.method = MinDegMethod::exhaustive;
  r.elements_visited = visited.load();
  return r;
}

// ------------------------------------------------------------------- backtrack

namespace {

class FixSearch {
public:
  explicit FixSearch(const StabilizerChain &lex) : lex_(lex), n_(lex.degree()) {
    // orbit_id_[i][a]: orbit of a under the stabilizer of points 0..i-1 (level i's group).
    orbit_id_.resize(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i) {
      auto &ids = orbit_id_[i];
      ids.assign(n_, -1);
      std::span<const Permutation> gens;
      if (i < n_)
        gens = lex_.level(i).generators;
      std::int32_t next = 0;
      for (Point a = 0; a < n_; ++a) {
        if (ids[a] >= 0)
          continue;
        for (Point b : orbit(gens, n_, a))
          ids[b] = next;
        ++next;
      }
    }
  }

  std::size_t degree() const { return n_; }

  /// Upper bound on fixed points of any element z*y with z in level i's group.
  std::size_t bound(std::size_t i, const Permutation &y_inv) const {
    const auto &ids = orbit_id_[i];
    std::size_t b = 0;
    for (Point a = 0; a < n_; ++a)
      b += ids[a] == ids[y_inv(a)];
    return b;
  }

  struct Worker {
    const FixSearch *search;
    const std::atomic<std::size_t> *global_floor;
    Candidate best;
    std::uint64_t visited = 0;
    std::uint64_t pruned = 0;

    bool prune(std::size_t b) const {
      if (b < global_floor->load(std::memory_order_relaxed))
        return true;
      return best.witness && b <= best.fixed;
    }

    void descend(std::size_t i, const Permutation &y, const Permutation &y_inv,
                 std::atomic<std::size_t> &floor_out) {
      const std::size_t n = search->n_;
      if (i == n) {
        ++visited;
        if (y.is_identity())
          return;
        std::size_t f = y.fixed_count();
        if (!best.witness || f > best.fixed) {
          best.fixed = f;
          best.witness = y;
          std::size_t cur = floor_out.load();
          while (f > cur && !floor_out.compare_exchange_weak(cur, f)) {
          }
        }
        return;
      }
      const auto &level = search->lex_.level(i);
      for (std::size_t c : search->children_in_order(level, y)) {
        Point p = level.orbit[c];
        Permutation y2 = level.representative(p) * y;
        Permutation y2_inv = y_inv * level.inverse_representative(p);
        if (prune(search->bound(i + 1, y2_inv))) {
          ++pruned;
          continue;
        }
        descend(i + 1, y2, y2_inv, floor_out);
      }
    }
  };

  /// Orbit indices of `level` sorted by the image y gives them.
  std::vector<std::size_t> children_in_order(const StabilizerChain::Level &level,
                                             const Permutation &y) const {
    std::vector<std::size_t> idx(level.orbit.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      idx[c] = c;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return y(level.orbit[a]) < y(level.orbit[b]); });
    return idx;
  }

  const StabilizerChain &lex_;
  std::size_t n_;
  std::vector<std::vector<std::int32_t>> orbit_id_;
};

} // namespace

MinDegResult minimal_degree_backtrack(const Group &g, unsigned jobs) {
  require_nontrivial(g);
  jobs = std::max(1u, jobs);
  const StabilizerChain &lex = g.lex_chain();
  FixSearch search(lex);
  const std::size_t n = search.degree();

  // Any non-identity strong generator bounds the optimum from below.
  std::size_t seed = 0;
  for (const auto &s : lex.strong_generators())
    if (!s.is_identity())
      seed = std::max(seed, s.fixed_count());
  std::atomic<std::size_t> floor{seed};

  // Levels before the first non-trivial orbit have a single (identity) choice.
  std::size_t top = 0;
  while (top < n && lex.level(top).orbit.size() == 1)
    ++top;
  const Permutation id(n);
  const auto &top_level = lex.level(top);
  std::vector<std::size_t> children = search.children_in_order(top_level, id);

  std::vector<FixSearch::Worker> workers(jobs, FixSearch::Worker{&search, &floor, {}, 0, 0});
  run_workers(jobs, [&](unsigned w) {
    auto &worker = workers[w];
    for (std::size_t k = w; k < children.size(); k += jobs) {
      Point p = top_level.orbit[children[k]];
      const Permutation &y = top_level.representative(p);
      const Permutation &y_inv = top_level.inverse_representative(p);
      if (worker.prune(search.bound(top + 1, y_inv))) {
        ++worker.pruned;
        continue;
      }
      worker.descend(top + 1, y, y_inv, floor);
    }
  });

  std::vector<Candidate> parts;
  MinDegResult r;
  for (auto &w : workers) {
    parts.push_back(w.best);
    r.elements_visited += w.visited;
    r.nodes_pruned += w.pruned;
  }
  Candidate best = reduce(parts);
  r.m = n - best.fixed;
  r.witness = *best.witness;
  r.method = MinDegMethod::backtrack;
  return r;
}

MinDegResult min_degree(const Group &g, MinDegMethod method, std::uint64_t order_cap,
                        unsigned jobs) {
  if (method == MinDegMethod::automatic) {
    if (auto cached = g.cached_min_degree())
      return *cached;
    method = g.order() <= order_cap ? MinDegMethod::exhaustive : MinDegMethod::backtrack;
  }
  MinDegResult r = method == MinDegMethod::exhaustive
                       ? minimal_degree_exhaustive(g, order_cap, jobs)
                       : minimal_degree_backtrack(g, jobs);
  g.store_min_degree(r);
  return r;
}

} // namespace bochert
